#ifndef GFR_FREEGROUP_HPP
#define GFR_FREEGROUP_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gfr {

  // +g is the g-th generator (1-based), -g its inverse. 0 is never a letter.
  using Letter = std::int8_t;
  using Word   = std::vector<Letter>;

  class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class Alphabet {
   public:
    Alphabet() : Alphabet("xyzt") {}
    explicit Alphabet(std::string_view chars);

    std::size_t size() const noexcept {
      return _chars.size();
    }
    std::string const& chars() const noexcept {
      return _chars;
    }

    Letter letter(char c) const;  // throws DomainError
    bool   has(char c) const noexcept;
    char   to_char(Letter l) const;

    Word        parse(std::string_view s) const;
    std::string format(Word const& w) const;

   private:
    std::string _chars;
  };

  inline Letter inverse(Letter l) noexcept {
    return static_cast<Letter>(-l);
  }

  // Free reduction with a stack; idempotent.
  Word reduce(Word const& raw);
  Word multiply(Word const& a, Word const& b);
  Word multiply(std::initializer_list<std::reference_wrapper<Word const>> ws);
  Word invert(Word const& a);
  Word power(Word const& a, int k);

  bool is_reduced(Word const& a) noexcept;
  bool is_cyclically_reduced(Word const& a) noexcept;
  bool is_proper_power(Word const& a);
  // Throws DomainError on the empty word.
  bool is_cyclically_reduced_primitive(Word const& a);

  Word subword(Word const& a, std::size_t first, std::size_t last);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

}  // namespace gfr

#endif  // GFR_FREEGROUP_HPP
