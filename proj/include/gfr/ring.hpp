#ifndef GFR_RING_HPP
#define GFR_RING_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gfr/construction.hpp"
#include "gfr/freegroup.hpp"

namespace gfr {

  // Shorter words first, then letter by letter.
  struct ShortLex {
    bool operator()(Word const& a, Word const& b) const {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
  };

  // An element of Z₂F: a finite set of reduced words, added mod 2.
  class RingElement {
   public:
    RingElement() = default;
    RingElement(std::initializer_list<Word> words);

    static RingElement one() {
      return {Word{}};
    }

    void toggle(Word const& w);  // reduces w first
    bool contains(Word const& w) const {
      return _terms.count(w) != 0;
    }
    std::set<Word, ShortLex> const& terms() const noexcept {
      return _terms;
    }
    std::size_t size() const noexcept {
      return _terms.size();
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    RingElement& operator+=(RingElement const& o);
    friend RingElement operator+(RingElement a, RingElement const& b) {
      return a += b;
    }
    friend RingElement operator*(RingElement const& a, RingElement const& b);
    bool operator==(RingElement const&) const = default;

    std::vector<std::string> format(Params const& p) const;
    std::string              to_string(Params const& p) const;  // "0" when empty

   private:
    std::set<Word, ShortLex> _terms;
  };

  RingElement left_multiply(Word const& l, RingElement const& e);
  RingElement right_multiply(RingElement const& e, Word const& r);

  // Σ L·(1 + v + vw)·R over the pairs.
  struct Certificate {
    std::vector<std::pair<Word, Word>> pairs;

    bool empty() const noexcept {
      return pairs.empty();
    }
    Certificate& operator+=(Certificate const& o);
    bool         operator==(Certificate const&) const = default;
  };

  Certificate wrap(Certificate const& c, Word const& left, Word const& right);
  RingElement expand(Certificate const& c, Params const& p);
  bool        check_certificate(RingElement const& e, Certificate const& c, Params const& p);

}  // namespace gfr

#endif  // GFR_RING_HPP
