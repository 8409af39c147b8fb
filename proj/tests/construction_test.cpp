#include <gtest/gtest.h>

#include <sstream>

#include "gfr/construction.hpp"
#include "support.hpp"

using namespace gfr;

namespace {
  std::string error_of(RawParams const& raw) {
    try {
      Params::validate(raw);
    } catch (DomainError const& e) {
      return e.what();
    }
    return "";
  }
}  // namespace

TEST(Validate, desk_defaults) {
  Params const& p = desk_params();
  EXPECT_EQ(p.epsilon(), Rational(1, 100));
  EXPECT_EQ(p.tau(), Rational(1, 10));
  EXPECT_EQ(p.lambda(), Rational(2, 3));
  EXPECT_EQ(p.bound(), 3);
  EXPECT_EQ(p.format(p.w()), "zt");
}

TEST(Validate, each_condition_has_its_own_message) {
  RawParams raw;
  raw.beta = 10;
  EXPECT_EQ(error_of(raw), "τ ≥ 10ε violated");

  raw   = {};
  raw.w = "xzt";
  EXPECT_EQ(error_of(raw), "w starts with x");
  raw.w = "ztY";
  EXPECT_EQ(error_of(raw), "w ends with Y");
  raw.w = "1";
  EXPECT_EQ(error_of(raw), "identity is not admissible as w");
  raw.w = "ztzt";
  EXPECT_EQ(error_of(raw), "w is a proper power");
  raw.w = "ztZ";
  EXPECT_EQ(error_of(raw), "w is not cyclically reduced");

  raw       = {};
  raw.alpha = 2;
  EXPECT_EQ(error_of(raw), "|w| < α violated");
  raw       = {};
  raw.alpha = 105;
  EXPECT_EQ(error_of(raw), "α < β violated");

  raw        = {};
  raw.lambda = Rational(1, 2);
  EXPECT_EQ(error_of(raw), "1/2 < λ < 1 violated");
  raw        = {};
  raw.lambda = Rational(99, 100);
  EXPECT_EQ(error_of(raw), "λ + 2ε < 1 violated");

  raw          = {};
  raw.alphabet = "abcd";
  EXPECT_EQ(error_of(raw), "alphabet must contain x and y");
}

TEST(Config, parses_keys_and_rejects_unknown) {
  std::istringstream in("# desk\nw = zt\nalpha=5\nbeta=105\ntau=1/10\nlambda=2/3\n"
                        "w_exponent_bound=2\n");
  RawParams raw = read_config(in);
  EXPECT_EQ(raw.w_exponent_bound, 2);
  EXPECT_EQ(raw.tau, Rational(1, 10));
  std::istringstream bad("gamma=3\n");
  EXPECT_THROW(read_config(bad), DomainError);
}

TEST(BuildV, small_expansions) {
  Alphabet a;
  Letter   x = a.letter('x'), y = a.letter('y');
  VWord    v = build_v(x, y, 2, 4);
  EXPECT_EQ(a.format(v.word), "xxyxxxy");
  EXPECT_EQ(v.y_positions.size(), 2u);
  EXPECT_EQ(a.format(build_v(x, y, 3, 4).word), "xxxy");
}

TEST(BuildV, desk_length_matches_sum) {
  Params const& p     = desk_params();
  std::size_t   total = 0;
  for (long long i = p.alpha(); i < p.beta(); ++i) {
    total += static_cast<std::size_t>(i + 1);
  }
  EXPECT_EQ(p.v().size(), total);
  EXPECT_EQ(p.v().size(), 5550u);
  EXPECT_EQ(p.vword().y_count(0, p.v().size()), 100);
  EXPECT_TRUE(is_cyclically_reduced(p.v()));
}

TEST(BuildV, two_y_subwords_occur_once) {
  Params const& p = gfr::testing::small_params();
  Word const&   v = p.v();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j <= v.size(); ++j) {
      if (p.vword().y_count(i, j) < 2) {
        continue;
      }
      int hits = 0;
      for (std::size_t k = 0; k + (j - i) <= v.size(); ++k) {
        hits += std::equal(v.begin() + i, v.begin() + j, v.begin() + k);
      }
      ASSERT_EQ(hits, 1) << i << ".." << j;
    }
  }
}

TEST(Measure, printing_keeps_the_scale_denominator) {
  Params const& p = desk_params();
  EXPECT_EQ(p.format_measure(Rational(1)), "100/100");
  EXPECT_EQ(p.format_measure(Rational(1, 10)), "10/100");
  EXPECT_EQ(p.format_measure(Rational(2, 3)), "2/3");
}
