#include "gfr/quotient.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>
#include <unordered_set>

namespace gfr {

  namespace {
    Word cat(Word const& a, Word const& b, Word const& c) {
      return multiply(multiply(a, b), c);
    }

    std::optional<PathPoint> endpoint(PathPoint at, Word const& u, Params const& p) {
      for (Letter l : u) {
        auto next = step(at, l, p);
        if (!next) {
          return std::nullopt;
        }
        at = *next;
      }
      return at;
    }

    std::string point_name(PathPoint const& pt) {
      if (pt.is_origin()) {
        return "O";
      }
      return std::string(pt.cyc == Cyc::V ? "v" : "w") + ":" + std::to_string(pt.offset);
    }

    LaurentPoly2 chunk_poly(ReduceMode mode) {
      auto const x1 = LaurentPoly2::x1();
      auto const x2 = LaurentPoly2::x2();
      if (mode == ReduceMode::direct) {
        return LaurentPoly2::x1(-1) + LaurentPoly2::one() + x2;
      }
      return LaurentPoly2::x1(-1) + x1 + x1 * x2 * x2;
    }

    struct ChunkRule {
      LaurentPoly2              poly;
      std::vector<NcMono>       others;  // every term but x₁⁻¹
      std::vector<AbstractPair> derivation;

      explicit ChunkRule(ReduceMode mode) : poly(chunk_poly(mode)) {
        NcMono const inv = nc_mono({{1, -1}});
        for (auto const& t : poly.terms()) {
          if (t != inv) {
            others.push_back(t);
          }
        }
        derivation = *ideal_derivation(poly);
      }
    };

    // The leftmost chunk whose measure exceeds the threshold.
    std::optional<InverseChunk> forbidden_chunk(Word const& u, Params const& p,
                                                Rational const& threshold) {
      for (auto const& c : inverse_chunks(u, p)) {
        if (p.measure(c.ys) > threshold) {
          return c;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::vector<InverseChunk> inverse_chunks(Word const& u, Params const& p) {
    auto const&               vw    = p.vword();
    auto const                n     = vw.word.size();
    auto const                match = p.patterns().index[1].prefix_factors(u);
    Letter const              yinv  = inverse(p.y());
    std::vector<InverseChunk> out;
    std::size_t               best = 0;  // furthest end so far
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto len = static_cast<std::size_t>(match[i].length);
      if (len == 0 || i + len <= best) {
        continue;
      }
      best = i + len;
      InverseChunk c;
      c.start = i;
      c.end   = i + len;
      c.last  = n - static_cast<std::size_t>(match[i].offset);
      c.first = c.last - len;
      c.ys    = static_cast<int>(std::count(u.begin() + static_cast<long>(i),
                                            u.begin() + static_cast<long>(c.end), yinv));
      out.push_back(c);
    }
    return out;
  }

  bool is_lambda_semicanonical(Word const& u, Params const& p, Rational const& threshold) {
    return !forbidden_chunk(u, p, threshold).has_value();
  }

  bool is_lambda_semicanonical(Word const& u, Params const& p) {
    return is_lambda_semicanonical(u, p, p.lambda());
  }

  Reduced semicanonical_reduce(RingElement const& e, Params const& p, ReduceMode mode) {
    ChunkRule const rule(mode);
    Word const&     v = p.v();
    Reduced         out;
    RingElement     pending = e;
    while (!pending.is_zero()) {
      Word u = *pending.terms().rbegin();
      pending.toggle(u);
      auto c = forbidden_chunk(u, p, p.lambda());
      if (!c) {
        out.element.toggle(u);
        continue;
      }
      // v_m⁻¹ = v_f·v⁻¹·v_i
      Word const left  = multiply(subword(u, 0, c->start), subword(v, c->last, v.size()));
      Word const right = multiply(subword(v, 0, c->first), subword(u, c->end, u.size()));
      ReduceStep st{u, *c, {}};
      for (auto const& t : rule.others) {
        Word o = cat(left, substitute(t, p), right);
        st.outputs.push_back(o);
        pending.toggle(o);
      }
      for (auto const& [a, b] : rule.derivation) {
        out.certificate.pairs.emplace_back(multiply(left, substitute(a, p)),
                                           multiply(substitute(b, p), right));
      }
      out.steps.push_back(std::move(st));
    }
    return out;
  }

  std::vector<std::size_t> stilde_violations(WordAnalysis const& wa) {
    auto const&              occ = wa.occurrences();
    auto const               idx = wa.virtual_indices();
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      auto const& a  = occ[idx[k]];
      std::size_t lo = a.start;
      std::size_t hi = a.end;
      if (k > 0) {
        lo = std::max(lo, std::min(a.end, occ[idx[k - 1]].end));
      }
      if (k + 1 < idx.size()) {
        hi = std::min(hi, std::max(lo, occ[idx[k + 1]].start));
      }
      if (lo < hi && !is_lambda_semicanonical(subword(wa.word(), lo, hi), wa.params())) {
        out.push_back(idx[k]);
      }
    }
    return out;
  }

  bool satisfies_stilde(Word const& u, Params const& p) {
    if (is_lambda_semicanonical(u, p)) {
      return true;
    }
    return stilde_violations(WordAnalysis(u, p)).empty();
  }

  DerivedStream derived_monomials(Word const& u, Params const& p, DerivedBudget budget) {
    DerivedStream                      out;
    std::unordered_set<Word, WordHash> seen{u};
    std::queue<std::tuple<Word, int, std::size_t>> todo;
    todo.emplace(u, 0, 0);
    while (!todo.empty()) {
      auto [word, depth, parent] = std::move(todo.front());
      todo.pop();
      WordAnalysis wa(word, p);
      std::size_t const here = out.words.size();
      out.words.push_back({word, wa.f(), depth, parent});
      if (depth >= budget.max_depth) {
        continue;
      }
      for (auto i : wa.virtual_indices()) {
        auto const& a    = wa.occurrences()[i];
        Word const  self = a.word();
        auto        next = incident_monomials(a.path, p);
        if (a.path.start == a.path.end && !self.empty()) {
          next.push_back(Word{});
        }
        for (auto const& b : next) {
          if (b == self) {
            continue;
          }
          Word z = *splice(word, a.start, a.end, b).word;
          if (seen.count(z) != 0) {
            continue;
          }
          if (seen.size() >= budget.nodes) {
            out.truncated = true;
            return out;
          }
          seen.insert(z);
          todo.emplace(std::move(z), depth + 1, here);
        }
      }
    }
    return out;
  }

  Word replace_members(Word const& u, std::vector<Occurrence> const& members,
                       std::vector<Word> const& with) {
    std::vector<std::size_t> order(members.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](auto a, auto b) { return members[a].end < members[b].end; });
    Word        raw;
    std::size_t at = 0;
    for (auto i : order) {
      auto const& a = members[i];
      raw.insert(raw.end(), u.begin() + static_cast<long>(at),
                 u.begin() + static_cast<long>(a.end));
      Word inv = invert(a.word());
      raw.insert(raw.end(), inv.begin(), inv.end());
      raw.insert(raw.end(), with[i].begin(), with[i].end());
      at = a.end;
    }
    raw.insert(raw.end(), u.begin() + static_cast<long>(at), u.end());
    return reduce(raw);
  }

  std::optional<Word> mu_apply(TensorChoice const& t, Params const& p) {
    WordAnalysis wa(t.base, p);
    auto const   idx = wa.virtual_indices();
    if (idx.size() != t.choices.size()) {
      throw DomainError("arity mismatch");
    }
    FChar const             f0 = wa.f();
    std::vector<Occurrence> members;
    std::vector<Word>       with;
    int                     low = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      auto const& a = wa.occurrences()[idx[i]];
      Word const& b = t.choices[i];
      if (endpoint(a.path.start, b, p) != std::optional<PathPoint>(a.path.end)) {
        throw DomainError("choice does not share (I, F) with its member");
      }
      if (b == a.word()) {
        continue;
      }
      if (f_char(*splice(t.base, a.start, a.end, b).word, p) < f0) {
        ++low;
      }
      members.push_back(a);
      with.push_back(b);
    }
    if (low > 2) {
      return std::nullopt;
    }
    return replace_members(t.base, members, with);
  }

  std::vector<DiagramNode> Diagram::nodes() const {
    std::vector<DiagramNode> out{{"S", "start", std::nullopt},
                                 {"M", "U1|U2", std::nullopt},
                                 {"E", "end", std::nullopt},
                                 {"P", "P", std::nullopt}};
    for (std::size_t i = 0; i < lenses.size(); ++i) {
      auto const& l = lenses[i];
      out.push_back({"I" + std::to_string(i), "I " + point_name(l.in), l.in});
      out.push_back({"F" + std::to_string(i), "F " + point_name(l.out), l.out});
    }
    return out;
  }

  std::vector<DiagramSegment> Diagram::segments() const {
    Word const x = subword(top_left, 0, top_left.size() - cancelled.size());
    Word const y = subword(top_right, cancelled.size(), top_right.size());
    std::vector<DiagramSegment> out{{"S", "P", x, "top"},
                                    {"P", "M", cancelled, "cancel"},
                                    {"P", "E", y, "top"}};
    for (auto const& b : bottom) {
      out.push_back({"S", "E", b, "bottom"});
    }
    for (std::size_t i = 0; i < lenses.size(); ++i) {
      for (auto const& arc : lenses[i].arcs) {
        out.push_back({"I" + std::to_string(i), "F" + std::to_string(i), arc, "lens"});
      }
    }
    return out;
  }

  namespace {
    // Replaces every listed member of u at once by the other monomials of its
    // safe support. Pre holds u up to the right end of the next member, with
    // earlier replacements inserted.
    struct TensorStep {
      Params const&           p;
      Word const&             u;
      std::vector<Occurrence> members;  // sorted by end
      std::vector<Support>    supports;
      Certificate             certificate;
      std::vector<Word>       outputs;

      void run(std::size_t t, Word const& pre) {
        if (t == members.size()) {
          outputs.push_back(multiply(pre, subword(u, members.back().end, u.size())));
          return;
        }
        auto const& a     = members[t];
        Word const  lc    = multiply(pre, invert(a.word()));
        Word const  rc    = subword(u, a.end, u.size());
        Word const  self  = a.word();
        Word const  until = t + 1 < members.size()
                                ? subword(u, a.end, members[t + 1].end)
                                : Word{};
        certificate += wrap(certificate_for(supports[t], p), lc, rc);
        for (auto const& b : supports[t].monomials) {
          if (b != self) {
            run(t + 1, cat(lc, b, until));
          }
        }
      }
    };

    void resolve(Word const& u, Params const& p, int depth, Product& out) {
      WordAnalysis wa(u, p);
      auto         viol = stilde_violations(wa);
      if (viol.empty()) {
        out.element.toggle(u);
        return;
      }
      if (depth >= 3) {
        throw DomainError("safe multi-turns did not reach S̃_λ");
      }
      TensorStep ts{p, u, {}, {}, {}, {}};
      for (auto i : viol) {
        ts.members.push_back(wa.occurrences()[i]);
      }
      std::sort(ts.members.begin(), ts.members.end(),
                [](auto const& a, auto const& b) { return a.end < b.end; });
      for (auto const& a : ts.members) {
        ts.supports.push_back(safe_multi_turn(a.path, p));
        out.diagram.lenses.push_back(
            {a.path.start, a.path.end, a.start, u, a.word(), ts.supports.back().monomials});
      }
      ts.run(0, subword(u, 0, ts.members.front().end));
      out.certificate += ts.certificate;
      for (auto const& o : ts.outputs) {
        resolve(o, p, depth + 1, out);
      }
    }
  }  // namespace

  Product multiply_mod_I(Word const& u1, Word const& u2, Params const& p) {
    if (!satisfies_stilde(u1, p) || !satisfies_stilde(u2, p)) {
      throw DomainError("input is not in S̃_λ");
    }
    Product     out;
    std::size_t c = 0;
    while (c < u1.size() && c < u2.size() && u1[u1.size() - 1 - c] == inverse(u2[c])) {
      ++c;
    }
    out.diagram.top_left  = u1;
    out.diagram.top_right = u2;
    out.diagram.cancelled = subword(u1, u1.size() - c, u1.size());
    out.diagram.product   = multiply(u1, u2);
    resolve(out.diagram.product, p, 0, out);
    out.diagram.bottom.assign(out.element.terms().begin(), out.element.terms().end());
    return out;
  }

  Equality equal_mod_I(RingElement const& a, RingElement const& b, Params const& p) {
    Equality out;
    auto     ra = semicanonical_reduce(a, p);
    auto     rb = semicanonical_reduce(b, p);
    out.certificate += ra.certificate;
    out.certificate += rb.certificate;
    RingElement diff = ra.element + rb.element;

    // Group the remaining words by a shared anchor (I, F) after stripping a
    // common context X·(·)·Y, and test each group's polynomial for membership
    // in the ideal.
    std::vector<Word> rest(diff.terms().begin(), diff.terms().end());
    bool              complete = true;
    while (!rest.empty()) {
      std::size_t shortest = rest.front().size();
      for (auto const& m : rest) {
        shortest = std::min(shortest, m.size());
      }
      std::size_t pre = 0;
      while (pre < shortest && std::all_of(rest.begin(), rest.end(), [&](Word const& m) {
               return m[pre] == rest.front()[pre];
             })) {
        ++pre;
      }
      std::size_t suf = 0;
      while (pre + suf < shortest && std::all_of(rest.begin(), rest.end(), [&](Word const& m) {
               return m[m.size() - 1 - suf] == rest.front()[rest.front().size() - 1 - suf];
             })) {
        ++suf;
      }
      Word const        x = subword(rest.front(), 0, pre);
      Word const        y = subword(rest.front(), rest.front().size() - suf, rest.front().size());
      std::vector<Word> mid;
      for (auto const& m : rest) {
        mid.push_back(subword(m, pre, m.size() - suf));
      }

      std::vector<std::pair<PathPoint, PathPoint>> anchors;
      for (auto const& m : mid) {
        if (auto path = parse_gfp(m, p)) {
          anchors.emplace_back(path->start, path->end);
        }
      }
      std::vector<std::size_t>        best;
      std::pair<PathPoint, PathPoint> anchor;
      for (auto const& [in, fin] : anchors) {
        std::vector<std::size_t> group;
        for (std::size_t i = 0; i < mid.size(); ++i) {
          if (endpoint(in, mid[i], p) == std::optional<PathPoint>(fin)) {
            group.push_back(i);
          }
        }
        if (group.size() > best.size()) {
          best   = group;
          anchor = {in, fin};
        }
      }
      if (best.empty()) {
        for (auto const& m : rest) {
          out.evidence.push_back(p.format(m) + " is not a generalized fractional power");
        }
        complete = false;
        break;
      }
      LaurentPoly2      poly;
      Rat2              sum;
      std::vector<Word> group;
      for (auto i : best) {
        auto path = make_path(*walk(anchor.first, mid[i], p), p);
        poly.toggle(spine_mono(path.spine));
        sum += shadow(path.spine);
        group.push_back(mid[i]);
      }
      std::string const where =
          "(" + point_name(anchor.first) + ", " + point_name(anchor.second) + ")";
      if (!vanishes_at_inverse(poly)) {
        out.evidence.push_back("anchor " + where + ": shadow sum " + sum.to_string() +
                               " is not 0");
        complete = false;
      } else {
        auto s = support_from_poly(poly, Frame::make(anchor.first, anchor.second, p), p);
        std::sort(group.begin(), group.end(), ShortLex{});
        if (s.monomials != group) {
          out.evidence.push_back("anchor " + where + ": frame does not reproduce the words");
          complete = false;
        } else {
          out.certificate += wrap(certificate_for(s, p), x, y);
        }
      }
      for (auto it = best.rbegin(); it != best.rend(); ++it) {
        rest.erase(rest.begin() + static_cast<long>(*it));
      }
    }
    out.equal = complete && check_certificate(a + b, out.certificate, p);
    if (!out.equal) {
      out.certificate = {};
    }
    return out;
  }

}  // namespace gfr
