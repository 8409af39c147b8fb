#include "gfr/freegroup.hpp"

#include <algorithm>
#include <cctype>

namespace gfr {

  Alphabet::Alphabet(std::string_view chars) : _chars(chars) {
    if (_chars.size() < 4) {
      throw DomainError("alphabet needs at least 4 generators");
    }
    if (_chars.size() > 26) {
      throw DomainError("alphabet has more than 26 generators");
    }
    for (std::size_t i = 0; i < _chars.size(); ++i) {
      char c = _chars[i];
      if (!std::islower(static_cast<unsigned char>(c))) {
        throw DomainError(std::string("alphabet letter '") + c
                          + "' is not a lowercase letter");
      }
      if (_chars.find(c, i + 1) != std::string::npos) {
        throw DomainError(std::string("alphabet letter '") + c
                          + "' is repeated");
      }
    }
  }

  bool Alphabet::has(char c) const noexcept {
    char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return _chars.find(lc) != std::string::npos;
  }

  Letter Alphabet::letter(char c) const {
    char lc  = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto pos = _chars.find(lc);
    if (pos == std::string::npos || !std::isalpha(static_cast<unsigned char>(c))) {
      throw DomainError(std::string("unknown letter '") + c + "'");
    }
    auto g = static_cast<Letter>(pos + 1);
    return std::isupper(static_cast<unsigned char>(c)) ? inverse(g) : g;
  }

  char Alphabet::to_char(Letter l) const {
    auto g = static_cast<std::size_t>(l > 0 ? l : -l);
    if (l == 0 || g > _chars.size()) {
      throw DomainError("letter outside the alphabet");
    }
    char c = _chars[g - 1];
    return l > 0 ? c
                 : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }

  Word Alphabet::parse(std::string_view s) const {
    if (s == "1") {
      return {};
    }
    Word raw;
    raw.reserve(s.size());
    for (char c : s) {
      raw.push_back(letter(c));
    }
    return reduce(raw);
  }

  std::string Alphabet::format(Word const& w) const {
    std::string out;
    out.reserve(w.size());
    for (Letter l : w) {
      out.push_back(to_char(l));
    }
    return out;
  }

  Word reduce(Word const& raw) {
    Word out;
    out.reserve(raw.size());
    for (Letter l : raw) {
      if (!out.empty() && out.back() == inverse(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  Word multiply(Word const& a, Word const& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size()
           && a[a.size() - 1 - k] == inverse(b[k])) {
      ++k;
    }
    Word out(a.begin(), a.end() - static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
    return out;
  }

  Word multiply(std::initializer_list<std::reference_wrapper<Word const>> ws) {
    Word out;
    for (auto const& w : ws) {
      out = multiply(out, w.get());
    }
    return out;
  }

  Word invert(Word const& a) {
    Word out(a.rbegin(), a.rend());
    for (Letter& l : out) {
      l = inverse(l);
    }
    return out;
  }

  Word power(Word const& a, int k) {
    Word base = k < 0 ? invert(a) : a;
    Word out;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
      out = multiply(out, base);
    }
    return out;
  }

  bool is_reduced(Word const& a) noexcept {
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (a[i] == inverse(a[i - 1])) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(Word const& a) noexcept {
    return is_reduced(a) && (a.size() < 2 || a.front() != inverse(a.back()));
  }

  bool is_proper_power(Word const& a) {
    std::size_t n = a.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) {
        periodic = a[i] == a[i - d];
      }
      if (periodic) {
        return true;
      }
    }
    return false;
  }

  bool is_cyclically_reduced_primitive(Word const& a) {
    if (a.empty()) {
      throw DomainError("identity is not admissible as w");
    }
    return is_cyclically_reduced(a) && !is_proper_power(a);
  }

  Word subword(Word const& a, std::size_t first, std::size_t last) {
    return Word(a.begin() + static_cast<std::ptrdiff_t>(first),
                a.begin() + static_cast<std::ptrdiff_t>(last));
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    // FNV-1a
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= static_cast<std::uint8_t>(l);
      h *= 1099511628211ull;
    }
    return h;
  }

}  // namespace gfr
