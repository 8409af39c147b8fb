#include "gfr/io.hpp"

#include <algorithm>
#include <sstream>

namespace gfr {

  namespace {
    std::vector<std::string> sorted_strings(std::vector<Word> const& ws, Params const& p) {
      std::vector<std::string> out;
      for (auto const& w : ws) {
        out.push_back(p.format(w));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    Word word_from_json(Json const& j, Params const& p) {
      if (!j.is_string()) {
        throw DomainError("expected a word string");
      }
      return parse_tokens(j.get<std::string>(), p);
    }

    // Long words are cut in the middle for DOT labels.
    std::string short_label(Word const& w, Params const& p) {
      if (w.empty()) {
        return "1";
      }
      std::string s = p.format(w);
      if (s.size() <= 40) {
        return s;
      }
      return s.substr(0, 16) + "…(" + std::to_string(s.size()) + ")…" + s.substr(s.size() - 16);
    }
  }  // namespace

  Word parse_tokens(std::string_view s, Params const& p) {
    auto const& alpha = p.alphabet();
    if (s == "1") {
      return {};
    }
    Word out;
    for (char c : s) {
      if (c == ' ' || c == '.') {
        continue;
      }
      Word piece;
      if (c == 'v' && !alpha.has('v')) {
        piece = p.v();
      } else if (c == 'V' && !alpha.has('v')) {
        piece = p.v_inverse();
      } else if (c == 'w' && !alpha.has('w')) {
        piece = p.w();
      } else if (c == 'W' && !alpha.has('w')) {
        piece = p.w_inverse();
      } else {
        piece = Word{alpha.letter(c)};
      }
      out.insert(out.end(), piece.begin(), piece.end());
    }
    return reduce(out);
  }

  std::string format_point(PathPoint const& pt) {
    if (pt.is_origin()) {
      return "O";
    }
    return std::string(pt.cyc == Cyc::V ? "v" : "w") + ":" + std::to_string(pt.offset);
  }

  Json point_to_json(PathPoint const& pt) {
    return {{"cycle", pt.cyc == Cyc::V ? "v" : "w"}, {"offset", pt.offset}};
  }

  PathPoint point_from_json(Json const& j) {
    auto cyc = j.at("cycle").get<std::string>();
    if (cyc != "v" && cyc != "w") {
      throw DomainError("unknown cycle '" + cyc + "'");
    }
    return {cyc == "v" ? Cyc::V : Cyc::W, j.at("offset").get<int>()};
  }

  Json element_to_json(RingElement const& e, Params const& p) {
    return sorted_strings({e.terms().begin(), e.terms().end()}, p);
  }

  RingElement element_from_json(Json const& j, Params const& p) {
    if (!j.is_array()) {
      throw DomainError("an element is a JSON array of words");
    }
    RingElement e;
    for (auto const& w : j) {
      e.toggle(word_from_json(w, p));
    }
    return e;
  }

  Json certificate_to_json(Certificate const& c, Params const& p) {
    Json out = Json::array();
    for (auto const& [l, r] : c.pairs) {
      out.push_back({p.format(l), p.format(r)});
    }
    return out;
  }

  Certificate certificate_from_json(Json const& j, Params const& p) {
    if (!j.is_array()) {
      throw DomainError("a certificate is a JSON array of [L, R] pairs");
    }
    Certificate c;
    for (auto const& pair : j) {
      if (!pair.is_array() || pair.size() != 2) {
        throw DomainError("a certificate is a JSON array of [L, R] pairs");
      }
      c.pairs.emplace_back(word_from_json(pair[0], p), word_from_json(pair[1], p));
    }
    return c;
  }

  Json params_to_json(Params const& p) {
    auto const& raw = p.raw();
    return {{"alphabet", raw.alphabet},
            {"w", raw.w},
            {"alpha", p.alpha()},
            {"beta", p.beta()},
            {"epsilon", p.format_measure(p.epsilon())},
            {"tau", p.format_measure(p.tau())},
            {"lambda", p.format_measure(p.lambda())},
            {"w_exponent_bound", p.bound()},
            {"v_length", p.v().size()}};
  }

  Json chart_to_json(Word const& u, Params const& p) {
    WordAnalysis wa(u, p);
    Chart        c       = chart_of(u, p);
    Json         members = Json::array();
    for (auto const& m : c.members) {
      members.push_back({{"start", m.start},
                         {"end", m.end},
                         {"measure", p.format_measure(lambda_measure(m, p))},
                         {"type", to_string(classify_path(m.path))},
                         {"I", format_point(m.path.start)},
                         {"F", format_point(m.path.end)},
                         {"word", p.format(m.word())}});
    }
    Json relations = Json::array();
    for (auto const& r : c.relations) {
      relations.push_back({{"kind", to_string(r.kind)}, {"overlap", p.format(r.piece)}});
    }
    Json virt = Json::array();
    for (auto const& m : wa.virtual_members()) {
      virt.push_back({{"start", m.start}, {"end", m.end}});
    }
    int fc = 0;
    for (bool b : wa.layout().fc) {
      fc += b ? 1 : 0;
    }
    return {{"members", members},
            {"relations", relations},
            {"virtual", virt},
            {"cover", {{"n_min", wa.n_min()},
                       {"k_tau", wa.k_tau()},
                       {"nfc", static_cast<int>(wa.layout().fc.size()) - fc},
                       {"fc", fc}}},
            {"f", {wa.f().n, wa.f().k}}};
  }

  Json diagram_to_json(Diagram const& d, Params const& p) {
    Json nodes = Json::array();
    for (auto const& n : d.nodes()) {
      Json j = {{"id", n.id}, {"label", n.label}};
      if (n.point) {
        j["point"] = point_to_json(*n.point);
      }
      nodes.push_back(j);
    }
    Json segments = Json::array();
    for (auto const& s : d.segments()) {
      segments.push_back(
          {{"from", s.from}, {"to", s.to}, {"word", p.format(s.word)}, {"role", s.role}});
    }
    Json lenses = Json::array();
    for (auto const& l : d.lenses) {
      lenses.push_back({{"I", point_to_json(l.in)},
                        {"F", point_to_json(l.out)},
                        {"P", l.attach},
                        {"host", p.format(l.host)},
                        {"replaced", p.format(l.replaced)},
                        {"arcs", sorted_strings(l.arcs, p)}});
    }
    return {{"top", {p.format(d.top_left), p.format(d.top_right)}},
            {"cancelled", p.format(d.cancelled)},
            {"product", p.format(d.product)},
            {"bottom", sorted_strings(d.bottom, p)},
            {"nodes", nodes},
            {"segments", segments},
            {"lenses", lenses}};
  }

  Diagram diagram_from_json(Json const& j, Params const& p) {
    Diagram d;
    try {
      d.top_left  = word_from_json(j.at("top").at(0), p);
      d.top_right = word_from_json(j.at("top").at(1), p);
      d.cancelled = word_from_json(j.at("cancelled"), p);
      d.product   = word_from_json(j.at("product"), p);
      for (auto const& b : j.at("bottom")) {
        d.bottom.push_back(word_from_json(b, p));
      }
      for (auto const& l : j.at("lenses")) {
        Lens lens{point_from_json(l.at("I")), point_from_json(l.at("F")),
                  l.at("P").get<std::size_t>(), word_from_json(l.at("host"), p),
                  word_from_json(l.at("replaced"), p), {}};
        for (auto const& a : l.at("arcs")) {
          lens.arcs.push_back(word_from_json(a, p));
        }
        d.lenses.push_back(std::move(lens));
      }
    } catch (Json::exception const& e) {
      throw DomainError(std::string("malformed diagram: ") + e.what());
    }
    std::sort(d.bottom.begin(), d.bottom.end(), ShortLex{});
    return d;
  }

  std::string diagram_to_dot(Diagram const& d, Params const& p) {
    std::ostringstream out;
    out << "digraph product {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (auto const& n : d.nodes()) {
      if (n.id.front() == 'I' || n.id.front() == 'F') {
        continue;
      }
      out << "  " << n.id << " [label=\"" << n.label << "\""
          << (n.id == "P" ? ", shape=doublecircle" : "") << "];\n";
    }
    for (std::size_t i = 0; i < d.lenses.size(); ++i) {
      auto const& l  = d.lenses[i];
      auto const  id = std::to_string(i);
      out << "  subgraph cluster_lens" << id << " {\n"
          << "    label=\"lens " << id << " at " << l.attach << "\";\n"
          << "    I" << id << " [label=\"I " << format_point(l.in) << "\"];\n"
          << "    F" << id << " [label=\"F " << format_point(l.out) << "\"];\n";
      for (auto const& a : l.arcs) {
        out << "    I" << id << " -> F" << id << " [label=\"" << short_label(a, p) << "\""
            << (a == l.replaced ? ", style=bold" : "") << "];\n";
      }
      out << "  }\n";
    }
    for (auto const& s : d.segments()) {
      if (s.role == "lens") {
        continue;
      }
      out << "  " << s.from << " -> " << s.to << " [label=\"" << short_label(s.word, p) << "\""
          << (s.role == "bottom" ? ", style=dashed" : "")
          << (s.role == "cancel" ? ", color=gray" : "") << "];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace gfr
