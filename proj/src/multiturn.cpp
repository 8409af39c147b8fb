#include "gfr/multiturn.hpp"

#include <algorithm>
#include <map>

#include "gfr/chart.hpp"

namespace gfr {

  namespace {

    char const* cyc_name(Cyc c) {
      return c == Cyc::V ? "v" : "w";
    }

    // Letters ±1 for x₁ and ±2 for x₂, so the free group routines apply.
    Word mono_word(NcMono const& m) {
      Word out;
      for (auto const& [var, e] : m) {
        auto l = static_cast<Letter>(e > 0 ? var : -var);
        out.insert(out.end(), static_cast<std::size_t>(e > 0 ? e : -e), l);
      }
      return out;
    }

    NcMono word_mono(Word const& w) {
      NcMono out;
      for (auto l : w) {
        out = nc_multiply(out, NcMono{{l > 0 ? l : -l, l > 0 ? 1 : -1}});
      }
      return out;
    }

    constexpr Letter V  = 1;
    constexpr Letter W  = 2;
    constexpr Letter iV = -1;
    constexpr Letter iW = -2;

    struct Rewriter {
      std::set<Word, ShortLex>           terms;
      std::vector<std::pair<Word, Word>> pairs;

      void toggle(Word const& w) {
        if (!terms.erase(w)) {
          terms.insert(w);
        }
      }

      // Σ A(1 + V + VW)B is toggled in along with the pair.
      void use(Word const& a, Word const& b) {
        pairs.emplace_back(a, b);
        toggle(multiply(a, b));
        toggle(multiply(multiply(a, Word{V}), b));
        toggle(multiply(multiply(a, Word{V, W}), b));
      }

      // One rewrite of a term not in normal form; false when m is normal.
      bool step(Word const& m) {
        auto sub = [&](std::size_t from, std::size_t to) {
          return subword(m, from, to);
        };
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i] == iV) {
            use(sub(0, i + 1), sub(i + 1, m.size()));
            return true;
          }
        }
        for (std::size_t i = 0; i + 1 < m.size(); ++i) {
          if (m[i] != V) {
            continue;
          }
          Word a = sub(0, i);
          Word b = sub(i + 2, m.size());
          if (m[i + 1] == W) {
            use(a, b);
            use(multiply(a, Word{iV}), multiply(Word{V}, b));
            return true;
          }
          if (m[i + 1] == iW) {
            use(multiply(a, Word{iW}), multiply(Word{iW}, b));
            use(multiply(a, Word{iW, iV}), multiply(Word{V, iW}, b));
            return true;
          }
        }
        // m = W^k V^l with l ≥ 0
        auto l = static_cast<int>(std::count(m.begin(), m.end(), V));
        auto k = static_cast<int>(m.size()) - l;
        if (l == 0 || k == 0) {
          return false;
        }
        Word vl(static_cast<std::size_t>(l), V);
        if (m[0] == W) {
          use(multiply(Word(static_cast<std::size_t>(k - 1), W), Word{iV}), vl);
        } else {
          use(multiply(Word(static_cast<std::size_t>(k), iW), Word{iV}), vl);
        }
        return true;
      }

      void run() {
        for (std::size_t guard = 0;; ++guard) {
          if (guard > 2000000) {
            throw DomainError("normal form rewriting did not settle");
          }
          bool changed = false;
          for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            Word m = *it;
            if (step(m)) {
              changed = true;
              break;
            }
          }
          if (!changed) {
            return;
          }
        }
      }
    };

    LaurentPoly2 x2_power(int e) {
      return LaurentPoly2::x2(e);
    }

    std::optional<std::vector<AbstractPair>> known_fact(LaurentPoly2 const& poly) {
      NcMono const one{};
      NcMono const x1  = nc_mono({{1, 1}});
      NcMono const ix1 = nc_mono({{1, -1}});
      auto const   generator = LaurentPoly2::one() + LaurentPoly2::x1() +
                             LaurentPoly2::x1() * LaurentPoly2::x2();
      if (poly == generator) {
        return std::vector<AbstractPair>{{one, one}};
      }
      if (poly == LaurentPoly2::x1() * LaurentPoly2::x2() + LaurentPoly2::x2() * LaurentPoly2::x1()) {
        return std::vector<AbstractPair>{{one, one}, {ix1, x1}};
      }
      if (poly == LaurentPoly2::x1(-1) + LaurentPoly2::one() + LaurentPoly2::x2()) {
        return std::vector<AbstractPair>{{ix1, one}};
      }
      for (int k = 1; k <= 32; ++k) {
        if (poly == telescope_up(k)) {
          std::vector<AbstractPair> out;
          for (int i = 0; i < k; ++i) {
            out.emplace_back(one, nc_mono({{2, i}}));
          }
          return out;
        }
        if (poly == telescope_down(k)) {
          std::vector<AbstractPair> out;
          for (int i = 1; i <= k; ++i) {
            out.emplace_back(one, nc_mono({{2, -i}}));
          }
          return out;
        }
      }
      return std::nullopt;
    }

    Rewriter rewrite(LaurentPoly2 const& poly) {
      Rewriter r;
      for (auto const& t : poly.terms()) {
        r.toggle(mono_word(t));
      }
      r.run();
      return r;
    }

  }  // namespace

  Frame Frame::make(PathPoint const& start, PathPoint const& end, Params const& p,
                    bool start_forward, bool end_forward) {
    Frame f;
    f.start         = start;
    f.end           = end;
    f.start_forward = start_forward;
    f.end_forward   = end_forward;
    if (!start.is_origin()) {
      auto const& c = cycle_word(start.cyc, p);
      auto        o = static_cast<std::size_t>(start.offset);
      f.left        = start_forward ? subword(c, o, c.size()) : invert(subword(c, 0, o));
    }
    if (!end.is_origin()) {
      auto const& c = cycle_word(end.cyc, p);
      auto        o = static_cast<std::size_t>(end.offset);
      f.right       = end_forward ? subword(c, 0, o) : invert(subword(c, o, c.size()));
    }
    return f;
  }

  std::string Frame::kind() const {
    std::string l = "1";
    std::string r = "1";
    if (!start.is_origin()) {
      l = std::string(cyc_name(start.cyc)) + (start_forward ? "_f" : "_i⁻¹");
    }
    if (!end.is_origin()) {
      r = std::string(cyc_name(end.cyc)) + (end_forward ? "_i" : "_f⁻¹");
    }
    return l + "·P·" + r;
  }

  bool Support::contains(Word const& w) const {
    return std::binary_search(monomials.begin(), monomials.end(), w, ShortLex{});
  }

  RingElement Support::element() const {
    RingElement e;
    for (auto const& m : monomials) {
      e.toggle(m);
    }
    return e;
  }

  Word substitute(NcMono const& m, Params const& p) {
    Word out;
    for (auto const& [var, e] : m) {
      out = multiply(out, power(var == 1 ? p.v() : p.w(), e));
    }
    return out;
  }

  std::optional<std::vector<AbstractPair>> ideal_derivation(LaurentPoly2 const& poly) {
    if (auto f = known_fact(poly)) {
      return f;
    }
    auto r = rewrite(poly);
    if (!r.terms.empty()) {
      return std::nullopt;
    }
    std::vector<AbstractPair> out;
    for (auto const& [a, b] : r.pairs) {
      out.emplace_back(word_mono(a), word_mono(b));
    }
    return out;
  }

  LaurentPoly2 ideal_normal_form(LaurentPoly2 const& poly) {
    LaurentPoly2 out;
    for (auto const& t : rewrite(poly).terms) {
      out.toggle(word_mono(t));
    }
    return out;
  }

  Support support_from_poly(LaurentPoly2 const& poly, Frame const& frame, Params const& p) {
    if (!vanishes_at_inverse(poly)) {
      throw DomainError("polynomial does not vanish at ((1+w)⁻¹, w)");
    }
    Support s;
    s.frame = frame;
    s.poly  = poly;
    RingElement e;
    for (auto const& t : poly.terms()) {
      e.toggle(multiply(multiply(frame.left, substitute(t, p)), frame.right));
    }
    s.monomials.assign(e.terms().begin(), e.terms().end());
    s.derivation = ideal_derivation(poly);
    if (!s.derivation) {
      throw DomainError("vanishing polynomial left a nonzero normal form");
    }
    return s;
  }

  Support bare_support(std::vector<Word> monomials, Frame const& frame) {
    Support s;
    s.frame = frame;
    RingElement e;
    for (auto const& m : monomials) {
      e.toggle(m);
    }
    s.monomials.assign(e.terms().begin(), e.terms().end());
    return s;
  }

  ElementaryTurn elementary_multi_turn(GfpPath const& a_h, LaurentPoly2 const& poly,
                                       Params const& p) {
    ElementaryTurn t;
    t.support = support_from_poly(poly, Frame::of(a_h, p), p);
    Word self = read_word(a_h, p);
    if (!t.support.contains(self)) {
      throw DomainError("occurrence word is not in the support");
    }
    for (auto const& m : t.support.monomials) {
      if (m != self) {
        t.replacement.push_back(m);
      }
    }
    return t;
  }

  LaurentPoly2 safe_inverse_factor() {
    return LaurentPoly2::x1() + LaurentPoly2::x1() * LaurentPoly2::x2(2);
  }

  LaurentPoly2 neutral_factor() {
    return LaurentPoly2::x1() + LaurentPoly2::x1() * LaurentPoly2::x2();
  }

  LaurentPoly2 safe_polynomial(Spine const& spine) {
    LaurentPoly2 self{spine_mono(spine)};
    int          v_arcs = 0;
    int          k      = 0;
    int          l      = 0;
    for (auto const& a : spine) {
      if (a.cyc == Cyc::V) {
        ++v_arcs;
        l += a.exp;
      } else {
        k += a.exp;
      }
    }
    auto power_of = [](LaurentPoly2 const& f, int m) {
      LaurentPoly2 out = LaurentPoly2::one();
      for (int i = 0; i < m; ++i) {
        out = out * f;
      }
      return out;
    };
    if (v_arcs == 1 && l < 0) {
      // w^{k₁} v^{−m} w^{k₂} ↦ w^{k₁} (v + vw²)^m w^{k₂}, in place
      int k1 = spine.front().cyc == Cyc::W ? spine.front().exp : 0;
      int k2 = spine.back().cyc == Cyc::W ? spine.back().exp : 0;
      return self + x2_power(k1) * power_of(safe_inverse_factor(), -l) * x2_power(k2);
    }
    if (l < 0) {
      return self + x2_power(k) * power_of(safe_inverse_factor(), -l);
    }
    if (l == 0) {
      return self + x2_power(k) * neutral_factor();
    }
    LaurentPoly2 collapsed = x2_power(k) * LaurentPoly2::x1(l);
    if (collapsed == self) {
      return self + self * neutral_factor();
    }
    return self + collapsed;
  }

  Support safe_multi_turn(GfpPath const& a_h, Params const& p) {
    return support_from_poly(safe_polynomial(a_h.spine), Frame::of(a_h, p), p);
  }

  std::vector<Word> multi_turn_words(Word const& u_h, Occurrence const& occ, Support const& s,
                                     Cancellation mode) {
    Word self = subword(u_h, occ.start, occ.end);
    if (!s.contains(self)) {
      throw DomainError("occurrence word is not in the support");
    }
    Word const        left  = subword(u_h, 0, occ.start);
    Word const        right = subword(u_h, occ.end, u_h.size());
    std::vector<Word> out;
    for (auto const& m : s.monomials) {
      if (m == self) {
        continue;
      }
      if (mode == Cancellation::immediate) {
        out.push_back(multiply({left, m, right}));
      } else {
        Word raw = left;
        raw.insert(raw.end(), m.begin(), m.end());
        raw.insert(raw.end(), right.begin(), right.end());
        out.push_back(std::move(raw));
      }
    }
    return out;
  }

  RingElement apply_multi_turn(Word const& u_h, Occurrence const& occ, Support const& s,
                               Params const& p, ApplyOptions opts) {
    auto words = multi_turn_words(u_h, occ, s);
    if (opts.require_virtual) {
      WordAnalysis wa(u_h, p);
      auto const&  l   = wa.layout();
      int          idx = l.find(occ.start, occ.end);
      if (idx < 0 || !wa.is_virtual(static_cast<std::size_t>(idx))) {
        throw DomainError("occurrence is not a virtual member");
      }
    }
    RingElement e;
    for (auto const& w : words) {
      e.toggle(w);
    }
    return e;
  }

  Certificate certificate_for(Support const& s, Params const& p) {
    if (!s.derivation) {
      throw DomainError("no derivation recorded");
    }
    Certificate c;
    for (auto const& [a, b] : *s.derivation) {
      c.pairs.emplace_back(multiply(s.frame.left, substitute(a, p)),
                           multiply(substitute(b, p), s.frame.right));
    }
    return c;
  }

  Certificate application_certificate(Word const& u_h, Occurrence const& occ,
                                      Support const& s, Params const& p) {
    return wrap(certificate_for(s, p), subword(u_h, 0, occ.start),
                subword(u_h, occ.end, u_h.size()));
  }

}  // namespace gfr
