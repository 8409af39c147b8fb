#ifndef GFR_IO_HPP
#define GFR_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "gfr/chart.hpp"
#include "gfr/quotient.hpp"
#include "gfr/ring.hpp"

namespace gfr {

  using Json = nlohmann::json;

  // Word input with the abbreviations v, V, w, W for v, v⁻¹, w, w⁻¹ (when
  // those letters are not in the alphabet). Spaces and dots are ignored and
  // "1" is the empty word.
  Word parse_tokens(std::string_view s, Params const& p);

  std::string format_point(PathPoint const& pt);
  Json        point_to_json(PathPoint const& pt);
  PathPoint   point_from_json(Json const& j);

  // Element files: a JSON array of word strings, sorted.
  Json        element_to_json(RingElement const& e, Params const& p);
  RingElement element_from_json(Json const& j, Params const& p);

  // Certificate files: a JSON array of [L, R] pairs.
  Json        certificate_to_json(Certificate const& c, Params const& p);
  Certificate certificate_from_json(Json const& j, Params const& p);

  Json params_to_json(Params const& p);
  Json chart_to_json(Word const& u, Params const& p);

  Json        diagram_to_json(Diagram const& d, Params const& p);
  Diagram     diagram_from_json(Json const& j, Params const& p);
  std::string diagram_to_dot(Diagram const& d, Params const& p);

}  // namespace gfr

#endif  // GFR_IO_HPP
