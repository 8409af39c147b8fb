#ifndef GFR_MULTITURN_HPP
#define GFR_MULTITURN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfr/gfp.hpp"
#include "gfr/ratfun.hpp"
#include "gfr/ring.hpp"

namespace gfr {

  // The words wrapped around P(v, w): left runs from I to O, right from O to
  // F, each either forward or backward along its cycle.
  struct Frame {
    PathPoint start;
    PathPoint end;
    bool      start_forward = true;
    bool      end_forward   = true;
    Word      left;
    Word      right;

    static Frame trivial() {
      return {};
    }
    static Frame make(PathPoint const& start, PathPoint const& end, Params const& p,
                      bool start_forward = true, bool end_forward = true);
    static Frame of(GfpPath const& path, Params const& p) {
      return make(path.start, path.end, p);
    }
    std::string kind() const;  // e.g. "v_f·P·w_i"
  };

  using AbstractPair = std::pair<NcMono, NcMono>;

  struct Support {
    std::vector<Word>                        monomials;  // ShortLex order
    Frame                                    frame;
    LaurentPoly2                             poly;
    std::optional<std::vector<AbstractPair>> derivation;

    bool        contains(Word const& w) const;
    RingElement element() const;
  };

  Support support_from_poly(LaurentPoly2 const& poly, Frame const& frame, Params const& p);
  // A support given only by its monomials, e.g. read from a file.
  Support bare_support(std::vector<Word> monomials, Frame const& frame);

  // Substitutes x₁ ↦ v, x₂ ↦ w.
  Word substitute(NcMono const& m, Params const& p);

  // Pairs (A, B) over x₁, x₂ with Σ A(1 + x₁ + x₁x₂)B = poly, found from a
  // short table of known facts or else by rewriting to a normal form; absent
  // when poly is not in the ideal.
  std::optional<std::vector<AbstractPair>> ideal_derivation(LaurentPoly2 const& poly);
  // What is left of poly after rewriting modulo 1 + x₁ + x₁x₂.
  LaurentPoly2 ideal_normal_form(LaurentPoly2 const& poly);

  struct ElementaryTurn {
    Support           support;
    std::vector<Word> replacement;
  };
  ElementaryTurn elementary_multi_turn(GfpPath const& a_h, LaurentPoly2 const& poly,
                                       Params const& p);

  // The polynomial whose other terms are all safe replacements of a_h.
  LaurentPoly2 safe_polynomial(Spine const& spine);
  Support      safe_multi_turn(GfpPath const& a_h, Params const& p);

  enum class Cancellation { immediate, deferred };

  // L·a_j·R for every other monomial a_j of s; reduced unless deferred.
  std::vector<Word> multi_turn_words(Word const& u_h, Occurrence const& occ, Support const& s,
                                     Cancellation mode = Cancellation::immediate);

  struct ApplyOptions {
    bool require_virtual = true;
  };
  RingElement apply_multi_turn(Word const& u_h, Occurrence const& occ, Support const& s,
                               Params const& p, ApplyOptions opts = {});

  Certificate certificate_for(Support const& s, Params const& p);
  // Certificate for u_h + Σ_{j≠h} L·a_j·R.
  Certificate application_certificate(Word const& u_h, Occurrence const& occ,
                                      Support const& s, Params const& p);

  // Both factors of a safe replacement: (v + vw²) for a negative block,
  // (v + vw) for the neutral case.
  LaurentPoly2 safe_inverse_factor();
  LaurentPoly2 neutral_factor();

}  // namespace gfr

#endif  // GFR_MULTITURN_HPP
