#ifndef GFR_TESTS_SUPPORT_HPP
#define GFR_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gfr/construction.hpp"
#include "gfr/freegroup.hpp"

namespace gfr::testing {

  // Small enough for brute-force oracles: |v| = 85.
  inline Params const& small_params() {
    static Params const p = [] {
      RawParams raw;
      raw.alpha            = 3;
      raw.beta             = 13;
      raw.tau              = Rational(1);
      raw.w_exponent_bound = 2;
      return Params::validate(raw);
    }();
    return p;
  }

  // τ = 1/3 < λ with τ ≥ 10ε: α = 3, β = 33.
  inline Params const& small_params_low_tau() {
    static Params const p = [] {
      RawParams raw         = small_params().raw();
      raw.beta              = 33;
      raw.tau               = Rational(1, 3);
      return Params::validate(raw);
    }();
    return p;
  }

  // The v-diagram as an explicit labelled graph, built from scratch.
  class BouquetOracle {
   public:
    explicit BouquetOracle(Params const& p) {
      int next = 1;  // vertex 0 is the base point
      for (Word const* c : {&p.v(), &p.w()}) {
        int prev = 0;
        for (std::size_t i = 0; i < c->size(); ++i) {
          int to = i + 1 == c->size() ? 0 : next++;
          _adj[{prev, (*c)[i]}]          = to;
          _adj[{to, inverse((*c)[i])}] = prev;
          prev                          = to;
        }
      }
      _vertices = next;
    }

    int vertices() const {
      return _vertices;
    }

    // Longest prefix of u[i:] readable from vertex s.
    std::size_t run(int s, Word const& u, std::size_t i) const {
      std::size_t j = i;
      while (j < u.size()) {
        auto it = _adj.find({s, u[j]});
        if (it == _adj.end()) {
          break;
        }
        s = it->second;
        ++j;
      }
      return j;
    }

    std::vector<std::size_t> reach(Word const& u) const {
      std::vector<std::size_t> r(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        std::size_t best = i;
        for (int s = 0; s < _vertices; ++s) {
          best = std::max(best, run(s, u, i));
        }
        r[i] = best;
      }
      return r;
    }

    bool readable(Word const& u) const {
      for (int s = 0; s < _vertices; ++s) {
        if (run(s, u, 0) == u.size()) {
          return true;
        }
      }
      return false;
    }

   private:
    std::map<std::pair<int, Letter>, int> _adj;
    int                                   _vertices = 0;
  };

  // Words glued from chunks of v^{±1}, powers of w and stray letters, so that
  // long fractional powers and their junctions show up often.
  class WordSource {
   public:
    WordSource(Params const& p, unsigned seed) : _p(p), _rng(seed) {}

    std::mt19937& rng() {
      return _rng;
    }

    int uniform(int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(_rng);
    }

    Word chunk_of(Word const& c, std::size_t max_len) {
      std::size_t len = static_cast<std::size_t>(uniform(1, static_cast<int>(std::min(max_len, c.size()))));
      std::size_t at  = static_cast<std::size_t>(uniform(0, static_cast<int>(c.size() - len)));
      return subword(c, at, at + len);
    }

    Word piece(std::size_t max_len) {
      switch (uniform(0, 5)) {
        case 0:
          return chunk_of(_p.v(), max_len);
        case 1:
          return chunk_of(_p.v_inverse(), max_len);
        case 2:
          return power(_p.w(), uniform(-3, 3));
        case 3:
          return _p.v();
        default: {
          auto n = static_cast<int>(_p.alphabet().size());
          int  g = uniform(1, n);
          return {static_cast<Letter>(uniform(0, 1) ? g : -g)};
        }
      }
    }

    Word word(int pieces, std::size_t max_len) {
      Word out;
      for (int k = 0; k < pieces; ++k) {
        out = multiply(out, piece(max_len));
      }
      return out;
    }

   private:
    Params const& _p;
    std::mt19937  _rng;
  };

}  // namespace gfr::testing

#endif  // GFR_TESTS_SUPPORT_HPP
