#ifndef GFR_FACTOR_INDEX_HPP
#define GFR_FACTOR_INDEX_HPP

#include <utility>
#include <vector>

#include "gfr/freegroup.hpp"

namespace gfr {

  // Suffix automaton over the reversed pattern. Answers, for every position i of
  // a text, the longest prefix of text[i:] that occurs in the pattern together
  // with its leftmost offset in the pattern.
  class FactorIndex {
   public:
    FactorIndex() = default;
    explicit FactorIndex(Word const& pattern);

    struct Match {
      int length = 0;
      int offset = 0;
    };
    std::vector<Match> prefix_factors(Word const& text) const;

    std::size_t pattern_size() const noexcept {
      return _m;
    }

   private:
    struct State {
      int                                len    = 0;
      int                                link   = -1;
      int                                maxend = 0;
      std::vector<std::pair<Letter, int>> next;
    };
    int                next(int s, Letter c) const;
    std::vector<State> _st;
    std::size_t        _m = 0;
  };

  // z[i] = lcp(s, s[i:]), z[0] = |s|.
  std::vector<int> z_function(Word const& s);

}  // namespace gfr

#endif  // GFR_FACTOR_INDEX_HPP
