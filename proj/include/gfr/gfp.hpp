#ifndef GFR_GFP_HPP
#define GFR_GFP_HPP

#include <compare>
#include <memory>
#include <optional>
#include <vector>

#include "gfr/construction.hpp"
#include "gfr/freegroup.hpp"
#include "gfr/ratfun.hpp"

namespace gfr {

  // A point of the bouquet: the v-cycle and the w-cycle glued at the base
  // point O. Offsets count letters from O in the forward reading; O itself is
  // always stored as (V, 0).
  struct PathPoint {
    Cyc cyc    = Cyc::V;
    int offset = 0;

    bool is_origin() const noexcept {
      return cyc == Cyc::V && offset == 0;
    }
    auto operator<=>(PathPoint const&) const = default;
  };

  PathPoint   normalize(Cyc cyc, int offset, Params const& p);
  Word const& cycle_word(Cyc cyc, Params const& p);
  int         cycle_length(Cyc cyc, Params const& p);

  // One stretch of the path along one cycle, from offset `from` to `to`.
  struct Piece {
    Cyc  cyc;
    int  from;
    int  to;
    bool forward() const noexcept {
      return from < to;
    }
    int length() const noexcept {
      return from < to ? to - from : from - to;
    }
    bool operator==(Piece const&) const = default;
  };

  // A generalized fractional power as a path. The word read along it equals
  // reduce(prefix · spine(v, w) · suffix) where prefix runs forward from I to
  // O and suffix runs forward from O to F.
  struct GfpPath {
    std::vector<Piece> pieces;
    PathPoint          start;
    PathPoint          end;
    Spine              spine;
    Word               prefix;
    Word               suffix;
    long long          ys = 0;

    bool on_w_only() const noexcept;
    // Signed exponent of the W(k) arc hosting I (resp. F); 0 when on V.
    int start_arc(Params const& p) const;
    int end_arc(Params const& p) const;

    bool operator==(GfpPath const& o) const {
      return pieces == o.pieces;
    }
  };

  GfpPath make_path(std::vector<Piece> pieces, Params const& p);
  Word    read_word(GfpPath const& path, Params const& p);
  Word    frame_word(PathPoint const& start, PathPoint const& end, Spine const& spine,
                     Params const& p);
  Word    frame_left(PathPoint const& start, Params const& p);
  Word    frame_right(PathPoint const& end, Params const& p);

  Rational lambda_measure(GfpPath const& path, Params const& p);
  Rat2     shadow(GfpPath const& path);

  // Deterministic bouquet walk; absent when the letter cannot be read.
  std::optional<PathPoint> step(PathPoint const& at, Letter l, Params const& p);
  // Pieces of the walk reading `u` from `from`; absent if u is not readable.
  std::optional<std::vector<Piece>> walk(PathPoint const& from, Word const& u,
                                         Params const& p);

  std::optional<GfpPath> parse_gfp(Word const& u, Params const& p);

  struct Occurrence {
    std::shared_ptr<Word const> host;
    std::size_t                 start = 0;
    std::size_t                 end   = 0;
    GfpPath                     path;

    std::size_t length() const noexcept {
      return end - start;
    }
    Word word() const {
      return subword(*host, start, end);
    }
  };

  Rational lambda_measure(Occurrence const& o, Params const& p);

  // R[i] = largest j such that u[i, j) is a generalized fractional power.
  std::vector<std::size_t> reach(Word const& u, Params const& p);

  // Inclusion-maximal occurrences sorted by start. Occurrences lying on the
  // w-cycle alone are dropped.
  std::vector<Occurrence> maximal_occurrences(Word const& u, Params const& p);
  std::vector<Occurrence> maximal_occurrences(std::shared_ptr<Word const> u,
                                              Params const&               p);

  struct Recognized {
    std::vector<std::size_t> reach;  // reach[i - first], in host positions
    std::vector<Occurrence>  occ;
  };

  // Recognition restricted to host[first, last); positions refer to host.
  // keep_w_only keeps the occurrences that maximal_occurrences drops.
  Recognized recognize(std::shared_ptr<Word const> host, Params const& p,
                       std::size_t first = 0, std::size_t last = static_cast<std::size_t>(-1),
                       bool keep_w_only = false);

  enum class PathType { VV, VW, WV, WW };
  PathType    classify_path(GfpPath const& path);
  char const* to_string(PathType t);

  // Words sharing (I, F) with path, spine w^{k0} (v^{l} w^{k})^{blocks},
  // l ∈ [−1, K], |k| ≤ K. The input word comes first.
  std::vector<Word> incident_monomials(GfpPath const& path, Params const& p,
                                       int v_blocks = 1);

}  // namespace gfr

#endif  // GFR_GFP_HPP
