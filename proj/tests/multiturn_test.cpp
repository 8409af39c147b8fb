#include <gtest/gtest.h>

#include <random>

#include "gfr/chart.hpp"
#include "gfr/multiturn.hpp"
#include "support.hpp"

using namespace gfr;
using gfr::testing::small_params;

namespace {
  Params const& desk = desk_params();

  Word const& v = desk.v();
  Word const& w = desk.w();

  Word cat(std::initializer_list<Word> parts) {
    Word out;
    for (auto const& p : parts) {
      out = multiply(out, p);
    }
    return out;
  }

  std::vector<Word> sorted(std::vector<Word> ws) {
    std::sort(ws.begin(), ws.end(), ShortLex{});
    return ws;
  }

  LaurentPoly2 const x1 = LaurentPoly2::x1();
  LaurentPoly2 const x2 = LaurentPoly2::x2();
  LaurentPoly2 const one = LaurentPoly2::one();
  LaurentPoly2 const generator = one + x1 + x1 * x2;

  NcMono random_mono(std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> var(1, 2);
    std::uniform_int_distribution<int> exp(-2, 2);
    NcMono                             m;
    for (int i = 0; i < len; ++i) {
      m = nc_multiply(m, NcMono{{var(rng), exp(rng)}});
    }
    return m;
  }

  LaurentPoly2 abstract_expand(std::vector<AbstractPair> const& pairs) {
    LaurentPoly2 out;
    for (auto const& [a, b] : pairs) {
      out += LaurentPoly2{a} * generator * LaurentPoly2{b};
    }
    return out;
  }

  GfpPath path_of(Word const& u, Params const& p = desk) {
    auto path = parse_gfp(u, p);
    EXPECT_TRUE(path.has_value());
    return *path;
  }

  bool has_long_inverse_v(Word const& u, Params const& p) {
    auto        occ = maximal_occurrences(u, p);
    for (auto const& o : occ) {
      for (auto const& piece : o.path.pieces) {
        if (piece.cyc != Cyc::V || piece.forward()) {
          continue;
        }
        auto ys = p.vword().y_count(static_cast<std::size_t>(piece.to),
                                    static_cast<std::size_t>(piece.from));
        if (p.measure(ys) > p.epsilon()) {
          return true;
        }
      }
    }
    return false;
  }
}  // namespace

TEST(Certificate, generator) {
  RingElement e{Word{}, v, cat({v, w})};
  EXPECT_TRUE(check_certificate(e, {{{Word{}, Word{}}}}, desk));
}

TEST(Certificate, commutator) {
  RingElement e{cat({v, w}), cat({w, v})};
  Certificate c{{{Word{}, Word{}}, {invert(v), v}}};
  EXPECT_TRUE(check_certificate(e, c, desk));
}

TEST(Certificate, telescope_two) {
  RingElement e{cat({v, w, w}), w, Word{}, v};
  Certificate c{{{Word{}, Word{}}, {Word{}, w}}};
  EXPECT_TRUE(check_certificate(e, c, desk));
}

TEST(Certificate, wrong_element_fails) {
  EXPECT_FALSE(check_certificate(RingElement{v}, {{{Word{}, Word{}}}}, desk));
}

TEST(SupportFromPoly, generator_gives_one_v_vw) {
  auto s = support_from_poly(generator, Frame::trivial(), desk);
  EXPECT_EQ(s.monomials, sorted({Word{}, v, cat({v, w})}));
  EXPECT_EQ(certificate_for(s, desk), (Certificate{{{Word{}, Word{}}}}));
}

TEST(SupportFromPoly, commutator) {
  auto s = support_from_poly(x1 * x2 + x2 * x1, Frame::trivial(), desk);
  EXPECT_EQ(s.monomials, sorted({cat({v, w}), cat({w, v})}));
  EXPECT_EQ(certificate_for(s, desk), (Certificate{{{Word{}, Word{}}, {invert(v), v}}}));
}

TEST(SupportFromPoly, telescope_certificate) {
  auto s = support_from_poly(telescope_up(2), Frame::trivial(), desk);
  EXPECT_EQ(s.monomials, sorted({cat({v, w, w}), w, Word{}, v}));
  EXPECT_EQ(certificate_for(s, desk), (Certificate{{{Word{}, Word{}}, {Word{}, w}}}));
}

TEST(SupportFromPoly, non_vanishing_is_rejected) {
  try {
    support_from_poly(x1 + x2, Frame::trivial(), desk);
    FAIL();
  } catch (DomainError const& e) {
    EXPECT_STREQ(e.what(), "polynomial does not vanish at ((1+w)⁻¹, w)");
  }
}

TEST(SupportFromPoly, frame_wraps_and_cancels) {
  // I in the middle of v: the frame is the tail of v, and v⁻¹ eats it
  auto  path  = path_of(subword(v, 100, v.size()));
  Frame f     = Frame::of(path, desk);
  EXPECT_EQ(f.kind(), "v_f·P·1");
  auto s = support_from_poly(LaurentPoly2::x1(-1) + one + x2, f, desk);
  EXPECT_EQ(s.monomials, sorted({subword(v, 100, v.size()), cat({subword(v, 100, v.size()), w}),
                                 invert(subword(v, 0, 100))}));
  EXPECT_TRUE(check_certificate(s.element(), certificate_for(s, desk), desk));
}

TEST(Frame, sixteen_shapes) {
  std::set<std::string> kinds;
  PathPoint             on_v{Cyc::V, 7};
  PathPoint             on_w{Cyc::W, 1};
  for (auto const& i : {on_v, on_w}) {
    for (auto const& f : {on_v, on_w}) {
      for (bool a : {true, false}) {
        for (bool b : {true, false}) {
          auto frame = Frame::make(i, f, desk, a, b);
          kinds.insert(frame.kind());
          // both ends read from the point to O and from O to the point
          auto l = walk(i, frame.left, desk);
          ASSERT_TRUE(l.has_value());
          auto r = walk(PathPoint{}, frame.right, desk);
          ASSERT_TRUE(r.has_value());
        }
      }
    }
  }
  EXPECT_EQ(kinds.size(), 16u);
}

TEST(ElementaryTurn, vw_to_v_plus_one) {
  auto t = elementary_multi_turn(path_of(cat({v, w})), generator, desk);
  EXPECT_EQ(t.replacement, sorted({Word{}, v}));
}

TEST(ElementaryTurn, inverse_v_to_one_plus_w) {
  auto t = elementary_multi_turn(path_of(invert(v)), LaurentPoly2::x1(-1) + one + x2, desk);
  EXPECT_EQ(t.replacement, sorted({Word{}, w}));
}

TEST(ElementaryTurn, identity_to_v_plus_vw) {
  auto t = elementary_multi_turn(path_of(Word{}), generator, desk);
  EXPECT_EQ(t.replacement, sorted({v, cat({v, w})}));
}

TEST(ElementaryTurn, word_outside_the_support) {
  EXPECT_THROW(elementary_multi_turn(path_of(w), generator, desk), DomainError);
}

TEST(SafeTurn, inverse_v) {
  auto s = safe_multi_turn(path_of(invert(v)), desk);
  EXPECT_EQ(s.monomials, sorted({invert(v), v, cat({v, w, w})}));
}

TEST(SafeTurn, conjugated_inverse_v) {
  auto s = safe_multi_turn(path_of(cat({w, invert(v), w})), desk);
  EXPECT_EQ(s.monomials, sorted({cat({w, invert(v), w}), cat({w, v, w}), cat({w, v, power(w, 3)})}));
}

TEST(SafeTurn, neutral_spine_uses_v_plus_vw) {
  auto s = safe_multi_turn(path_of(w), desk);
  EXPECT_EQ(s.monomials, sorted({w, cat({w, v}), cat({w, v, w})}));
  auto t = safe_multi_turn(path_of(cat({v, w, invert(v)})), desk);
  EXPECT_TRUE(t.contains(cat({w, v})));
  EXPECT_TRUE(t.contains(cat({w, v, w})));
}

TEST(SafeTurn, positive_spine_collapses) {
  auto s = safe_multi_turn(path_of(cat({v, w, v})), desk);
  EXPECT_EQ(s.monomials, sorted({cat({v, w, v}), cat({w, v, v})}));
  auto t = safe_multi_turn(path_of(cat({w, v})), desk);
  EXPECT_EQ(t.monomials, sorted({cat({w, v}), cat({w, v, v}), cat({w, v, v, w})}));
}

TEST(ApplyTurn, framed_by_letters) {
  Word u   = desk.parse("z");
  u        = cat({u, v, w, desk.parse("t")});
  auto occ = maximal_occurrences(u, desk);
  ASSERT_EQ(occ.size(), 1u);
  auto s = support_from_poly(generator, Frame::trivial(), desk);
  auto e = apply_multi_turn(u, occ[0], s, desk);
  EXPECT_EQ(e, (RingElement{cat({desk.parse("z"), v, desk.parse("t")}), desk.parse("zt")}));
  auto c = application_certificate(u, occ[0], s, desk);
  EXPECT_TRUE(check_certificate(e + RingElement{u}, c, desk));
}

TEST(ApplyTurn, bare_vw) {
  Word u   = cat({v, w});
  auto occ = maximal_occurrences(u, desk);
  auto s   = support_from_poly(generator, Frame::trivial(), desk);
  EXPECT_EQ(apply_multi_turn(u, occ[0], s, desk), (RingElement{v, Word{}}));
}

TEST(ApplyTurn, deleting_cancels_the_sides) {
  Word u   = cat({desk.parse("T"), v, w, desk.parse("t")});
  auto occ = maximal_occurrences(u, desk);
  ASSERT_EQ(occ.size(), 1u);
  auto s = support_from_poly(generator, Frame::trivial(), desk);
  EXPECT_EQ(apply_multi_turn(u, occ[0], s, desk),
            (RingElement{Word{}, cat({desk.parse("T"), v, desk.parse("t")})}));
  auto raw = multi_turn_words(u, occ[0], s, Cancellation::deferred);
  Letter const t = desk.alphabet().letter('t');
  EXPECT_TRUE(std::find(raw.begin(), raw.end(), Word{inverse(t), t}) != raw.end());
}

TEST(ApplyTurn, requires_a_virtual_member_unless_overridden) {
  Word u   = cat({desk.parse("xxxxxxy"), desk.parse("zz")});
  auto occ = maximal_occurrences(u, desk);
  ASSERT_FALSE(occ.empty());
  auto s = safe_multi_turn(occ[0].path, desk);
  EXPECT_THROW(apply_multi_turn(u, occ[0], s, desk), DomainError);
  EXPECT_NO_THROW(apply_multi_turn(u, occ[0], s, desk, {false}));
}

TEST(CertificateFor, bare_support_has_no_derivation) {
  auto s = bare_support({Word{}, v, cat({v, w})}, Frame::trivial());
  try {
    certificate_for(s, desk);
    FAIL();
  } catch (DomainError const& e) {
    EXPECT_STREQ(e.what(), "no derivation recorded");
  }
}

// Normal form vanishes exactly when the polynomial vanishes at ((1+w)⁻¹, w).
TEST(NormalFormProperty, zero_iff_vanishing) {
  std::mt19937 rng(3);
  int          vanishing = 0;
  for (int t = 0; t < 400; ++t) {
    LaurentPoly2 poly;
    int          n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < n; ++i) {
      poly.toggle(random_mono(rng, 3));
    }
    if (t % 2 == 0) {
      // clear it, so half the samples lie in the ideal
      poly = LaurentPoly2{random_mono(rng, 2)} * generator * LaurentPoly2{random_mono(rng, 2)};
    }
    bool zero = ideal_normal_form(poly).is_zero();
    ASSERT_EQ(zero, vanishes_at_inverse(poly)) << poly.to_string();
    vanishing += zero;
  }
  EXPECT_GT(vanishing, 0);
}

TEST(NormalFormProperty, derivation_expands_back) {
  std::mt19937 rng(4);
  for (int t = 0; t < 300; ++t) {
    LaurentPoly2 poly;
    int          n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < n; ++i) {
      poly += LaurentPoly2{random_mono(rng, 3)} * generator * LaurentPoly2{random_mono(rng, 3)};
    }
    auto d = ideal_derivation(poly);
    ASSERT_TRUE(d.has_value()) << poly.to_string();
    ASSERT_EQ(abstract_expand(*d), poly);
  }
}

TEST(NormalFormProperty, known_families) {
  for (int k = 1; k <= 4; ++k) {
    for (auto const& poly : {telescope_up(k), telescope_down(k)}) {
      auto d = ideal_derivation(poly);
      ASSERT_TRUE(d.has_value());
      EXPECT_EQ(abstract_expand(*d), poly);
      // the same polynomial certified by rewriting alone
      EXPECT_TRUE(ideal_normal_form(poly).is_zero());
    }
  }
}

// Every safe multi-turn: Λ ≥ τ for some output, no long inverse v, the
// certificate expands to the support, and the shadows cancel.
TEST(SafeTurnProperty, outputs_are_safe_and_certified) {
  Params const& p = small_params();
  std::mt19937  rng(5);
  std::uniform_int_distribution<int> ex(-2, 2);
  std::uniform_int_distribution<int> off(0, static_cast<int>(p.v().size()) - 1);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    Spine spine;
    int   arcs = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < arcs; ++i) {
      spine_push(spine, {i % 2 ? Cyc::V : Cyc::W, ex(rng)});
    }
    PathPoint i{Cyc::V, off(rng)};
    PathPoint f{Cyc::V, off(rng)};
    Word      word = frame_word(i, f, spine, p);
    auto      walked = walk(i, word, p);
    ASSERT_TRUE(walked.has_value());
    GfpPath path = make_path(*walked, p);
    if (path.pieces.empty()) {
      continue;
    }
    auto s = safe_multi_turn(path, p);
    ASSERT_TRUE(check_certificate(s.element(), certificate_for(s, p), p));
    bool big = false;
    Rat2 sum;
    for (auto const& m : s.monomials) {
      auto pieces = walk(path.start, m, p);
      ASSERT_TRUE(pieces.has_value());
      auto mp = make_path(*pieces, p);
      ASSERT_EQ(mp.end, path.end);
      sum += shadow(mp);
      if (m == word) {
        continue;
      }
      big = big || lambda_measure(mp, p) >= p.tau();
      ASSERT_FALSE(has_long_inverse_v(m, p)) << p.format(m);
    }
    ASSERT_TRUE(big);
    ASSERT_TRUE(sum.is_zero());
    ++checked;
  }
  EXPECT_GT(checked, 200);
}
