#ifndef GFR_RATFUN_HPP
#define GFR_RATFUN_HPP

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gfr {

  // Polynomial over GF(2) in one variable w, stored as a bitset of coefficients.
  class Poly2 {
   public:
    Poly2() = default;
    static Poly2 monomial(int e);
    static Poly2 from_exponents(std::initializer_list<int> es);
    static Poly2 one() {
      return monomial(0);
    }

    bool is_zero() const noexcept {
      return _bits.empty();
    }
    int  degree() const noexcept;     // -1 for zero
    int  valuation() const noexcept;  // lowest exponent, -1 for zero
    bool coeff(int e) const noexcept;

    std::vector<int> exponents() const;

    Poly2& operator+=(Poly2 const& o);
    friend Poly2 operator+(Poly2 a, Poly2 const& b) {
      return a += b;
    }
    friend Poly2 operator*(Poly2 const& a, Poly2 const& b);
    Poly2 shifted_down(int k) const;  // divide by w^k, k ≤ valuation
    Poly2 shifted_up(int k) const;

    // Euclidean division; throws DomainError on zero divisor.
    static std::pair<Poly2, Poly2> divmod(Poly2 const& a, Poly2 const& b);
    static Poly2 gcd(Poly2 a, Poly2 b);

    bool operator==(Poly2 const&) const = default;

    std::string to_string() const;  // e.g. "1+w+w^2"

   private:
    void                       trim();
    void                       flip(int e);
    std::vector<std::uint64_t> _bits;
  };

  // w^shift · num/den with num, den coprime and prime to w.
  class Rat2 {
   public:
    Rat2() : _den(Poly2::one()) {}
    Rat2(Poly2 num, Poly2 den = Poly2::one(), int shift = 0);

    static Rat2 w_power(int k) {
      return Rat2(Poly2::one(), Poly2::one(), k);
    }

    bool is_zero() const noexcept {
      return _num.is_zero();
    }
    Poly2 const& numerator() const noexcept {
      return _num;
    }
    Poly2 const& denominator() const noexcept {
      return _den;
    }
    int shift() const noexcept {
      return _shift;
    }

    Rat2 inverse() const;  // throws DomainError on zero
    Rat2 pow(int k) const;

    friend Rat2 operator+(Rat2 const& a, Rat2 const& b);
    friend Rat2 operator*(Rat2 const& a, Rat2 const& b);
    Rat2&       operator+=(Rat2 const& o) {
      return *this = *this + o;
    }
    Rat2& operator*=(Rat2 const& o) {
      return *this = *this * o;
    }

    bool operator==(Rat2 const&) const = default;

    std::string to_string() const;

   private:
    Poly2 _num;
    Poly2 _den;
    int   _shift = 0;
  };

  // Word in the free group on x₁, x₂ with run-length factors (var, exp), var ∈ {1, 2}.
  using NcMono = std::vector<std::pair<int, int>>;

  NcMono nc_mono(std::initializer_list<std::pair<int, int>> factors);
  NcMono nc_multiply(NcMono const& a, NcMono const& b);
  NcMono nc_invert(NcMono const& a);

  class LaurentPoly2 {
   public:
    LaurentPoly2() = default;
    LaurentPoly2(std::initializer_list<NcMono> terms);

    static LaurentPoly2 one() {
      return {NcMono{}};
    }
    static LaurentPoly2 x1(int e = 1) {
      return {nc_mono({{1, e}})};
    }
    static LaurentPoly2 x2(int e = 1) {
      return {nc_mono({{2, e}})};
    }

    void toggle(NcMono const& m);

    std::set<NcMono> const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    LaurentPoly2& operator+=(LaurentPoly2 const& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, LaurentPoly2 const& b) {
      return a += b;
    }
    friend LaurentPoly2 operator*(LaurentPoly2 const& a, LaurentPoly2 const& b);

    bool operator==(LaurentPoly2 const&) const = default;

    std::string to_string() const;

   private:
    std::set<NcMono> _terms;
  };

  Rat2 rat_eval(NcMono const& m);
  Rat2 rat_eval(LaurentPoly2 const& p);
  bool vanishes_at_inverse(LaurentPoly2 const& p);

  // Families from the worked example: x₁x₂^k + Σ_{i<k} x₂^i + x₁ and
  // x₁x₂^{−k} + Σ_{i=1..k} x₂^{−i} + x₁.
  LaurentPoly2 telescope_up(int k);
  LaurentPoly2 telescope_down(int k);

  enum class Cyc : std::uint8_t { V, W };

  struct SpineArc {
    Cyc  cyc;
    int  exp;
    bool operator==(SpineArc const&) const = default;
  };
  using Spine = std::vector<SpineArc>;

  // Appends with merging of equal neighbours; zero exponents vanish.
  void   spine_push(Spine& s, SpineArc a);
  NcMono spine_mono(Spine const& s);
  Spine  mono_spine(NcMono const& m);
  Rat2   shadow(Spine const& s);

}  // namespace gfr

#endif  // GFR_RATFUN_HPP
