#ifndef GFR_CONSTRUCTION_HPP
#define GFR_CONSTRUCTION_HPP

#include <array>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "gfr/factor_index.hpp"
#include "gfr/freegroup.hpp"

namespace gfr {

  using Rational = boost::rational<long long>;

  Rational    parse_rational(std::string const& s);  // "p/q" or "p"
  std::string to_string(Rational const& r);

  struct RawParams {
    std::string alphabet = "xyzt";
    std::string w        = "zt";
    long long   alpha    = 5;
    long long   beta     = 105;
    Rational    tau{1, 10};
    Rational    lambda{2, 3};
    long long   w_exponent_bound = 4;
  };

  // key=value lines, '#' starts a comment. Unknown keys are rejected.
  RawParams read_config(std::istream& in, RawParams base = {});
  RawParams read_config_file(std::string const& path, RawParams base = {});

  struct VWord {
    Word                     word;
    Word                     inverse;
    std::vector<std::size_t> y_positions;
    // y_prefix[i] = number of y in word[0, i)
    std::vector<int> y_prefix;

    int y_count(std::size_t first, std::size_t last) const {
      return y_prefix[last] - y_prefix[first];
    }
  };

  VWord build_v(Letter x, Letter y, long long alpha, long long beta);

  // The four readings of the bouquet cycles from the base point:
  // v, v⁻¹, w, w⁻¹, in this order.
  struct PatternTables {
    std::array<Word, 4>        words;
    std::array<FactorIndex, 4> index;
  };

  class Params {
   public:
    static Params validate(RawParams const& raw);

    Params with_bound(long long k) const;

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    Word const& w() const noexcept {
      return _w;
    }
    Word const& w_inverse() const noexcept {
      return _w_inv;
    }
    VWord const& vword() const noexcept {
      return *_v;
    }
    Word const& v() const noexcept {
      return _v->word;
    }
    Word const& v_inverse() const noexcept {
      return _v->inverse;
    }
    Letter x() const noexcept {
      return _x;
    }
    Letter y() const noexcept {
      return _y;
    }
    long long alpha() const noexcept {
      return _raw.alpha;
    }
    long long beta() const noexcept {
      return _raw.beta;
    }
    long long denominator() const noexcept {
      return _raw.beta - _raw.alpha;
    }
    Rational epsilon() const noexcept {
      return Rational(1, denominator());
    }
    Rational tau() const noexcept {
      return _raw.tau;
    }
    Rational lambda() const noexcept {
      return _raw.lambda;
    }
    int bound() const noexcept {
      return static_cast<int>(_raw.w_exponent_bound);
    }
    RawParams const& raw() const noexcept {
      return _raw;
    }
    PatternTables const& patterns() const noexcept {
      return *_patterns;
    }

    // Λ of a word with `ys` letters y or y⁻¹.
    Rational measure(long long ys) const {
      return Rational(ys, denominator());
    }
    // Uncancelled "c/(β−α)" when possible, reduced "p/q" otherwise.
    std::string format_measure(Rational const& r) const;

    Word        parse(std::string_view s) const {
      return _alphabet.parse(s);
    }
    std::string format(Word const& u) const {
      return _alphabet.format(u);
    }

   private:
    Params() = default;

    RawParams                    _raw;
    Alphabet                     _alphabet;
    Word                         _w;
    Word                         _w_inv;
    Letter                       _x = 0;
    Letter                       _y = 0;
    std::shared_ptr<VWord const>         _v;
    std::shared_ptr<PatternTables const> _patterns;
  };

  Params const& desk_params();

}  // namespace gfr

#endif  // GFR_CONSTRUCTION_HPP
