#include "gfr/ratfun.hpp"

#include <algorithm>
#include <bit>

#include "gfr/freegroup.hpp"

namespace gfr {

  Poly2 Poly2::monomial(int e) {
    Poly2 p;
    p.flip(e);
    return p;
  }

  Poly2 Poly2::from_exponents(std::initializer_list<int> es) {
    Poly2 p;
    for (int e : es) {
      p.flip(e);
    }
    return p;
  }

  void Poly2::flip(int e) {
    auto word = static_cast<std::size_t>(e) / 64;
    if (word >= _bits.size()) {
      _bits.resize(word + 1, 0);
    }
    _bits[word] ^= std::uint64_t{1} << (e % 64);
    trim();
  }

  void Poly2::trim() {
    while (!_bits.empty() && _bits.back() == 0) {
      _bits.pop_back();
    }
  }

  int Poly2::degree() const noexcept {
    if (_bits.empty()) {
      return -1;
    }
    return static_cast<int>(_bits.size() * 64 - 1)
           - std::countl_zero(_bits.back());
  }

  int Poly2::valuation() const noexcept {
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i] != 0) {
        return static_cast<int>(i * 64) + std::countr_zero(_bits[i]);
      }
    }
    return -1;
  }

  bool Poly2::coeff(int e) const noexcept {
    auto word = static_cast<std::size_t>(e) / 64;
    return e >= 0 && word < _bits.size() && ((_bits[word] >> (e % 64)) & 1) != 0;
  }

  std::vector<int> Poly2::exponents() const {
    std::vector<int> out;
    for (int e = 0; e <= degree(); ++e) {
      if (coeff(e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  Poly2& Poly2::operator+=(Poly2 const& o) {
    if (o._bits.size() > _bits.size()) {
      _bits.resize(o._bits.size(), 0);
    }
    for (std::size_t i = 0; i < o._bits.size(); ++i) {
      _bits[i] ^= o._bits[i];
    }
    trim();
    return *this;
  }

  Poly2 Poly2::shifted_up(int k) const {
    Poly2 out;
    if (is_zero()) {
      return out;
    }
    auto words = static_cast<std::size_t>(k) / 64;
    int  bits  = k % 64;
    out._bits.assign(_bits.size() + words + 1, 0);
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      out._bits[i + words] ^= _bits[i] << bits;
      if (bits != 0) {
        out._bits[i + words + 1] ^= _bits[i] >> (64 - bits);
      }
    }
    out.trim();
    return out;
  }

  Poly2 Poly2::shifted_down(int k) const {
    Poly2 out;
    for (int e : exponents()) {
      if (e >= k) {
        out.flip(e - k);
      }
    }
    return out;
  }

  Poly2 operator*(Poly2 const& a, Poly2 const& b) {
    Poly2 out;
    for (int e : b.exponents()) {
      out += a.shifted_up(e);
    }
    return out;
  }

  std::pair<Poly2, Poly2> Poly2::divmod(Poly2 const& a, Poly2 const& b) {
    if (b.is_zero()) {
      throw DomainError("division by the zero polynomial");
    }
    Poly2 q;
    Poly2 r  = a;
    int   db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
      int s = r.degree() - db;
      q.flip(s);
      r += b.shifted_up(s);
    }
    return {q, r};
  }

  Poly2 Poly2::gcd(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a      = std::move(b);
      b      = std::move(r);
    }
    return a;
  }

  std::string Poly2::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string out;
    for (int e : exponents()) {
      if (!out.empty()) {
        out += "+";
      }
      if (e == 0) {
        out += "1";
      } else if (e == 1) {
        out += "w";
      } else {
        out += "w^" + std::to_string(e);
      }
    }
    return out;
  }

  Rat2::Rat2(Poly2 num, Poly2 den, int shift) {
    if (den.is_zero()) {
      throw DomainError("zero denominator");
    }
    if (num.is_zero()) {
      _den = Poly2::one();
      return;
    }
    int vn = num.valuation();
    int vd = den.valuation();
    num    = num.shifted_down(vn);
    den    = den.shifted_down(vd);
    Poly2 g = Poly2::gcd(num, den);
    _num    = Poly2::divmod(num, g).first;
    _den    = Poly2::divmod(den, g).first;
    _shift  = shift + vn - vd;
  }

  Rat2 Rat2::inverse() const {
    if (is_zero()) {
      throw DomainError("inverse of zero");
    }
    return Rat2(_den, _num, -_shift);
  }

  Rat2 Rat2::pow(int k) const {
    Rat2 base = k < 0 ? inverse() : *this;
    Rat2 out(Poly2::one());
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
      out = out * base;
    }
    return out;
  }

  Rat2 operator+(Rat2 const& a, Rat2 const& b) {
    if (a.is_zero()) {
      return b;
    }
    if (b.is_zero()) {
      return a;
    }
    int   s   = std::min(a._shift, b._shift);
    Poly2 num = (a._num * b._den).shifted_up(a._shift - s)
                + (b._num * a._den).shifted_up(b._shift - s);
    return Rat2(num, a._den * b._den, s);
  }

  Rat2 operator*(Rat2 const& a, Rat2 const& b) {
    if (a.is_zero() || b.is_zero()) {
      return Rat2();
    }
    return Rat2(a._num * b._num, a._den * b._den, a._shift + b._shift);
  }

  std::string Rat2::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string out = "(" + _num.to_string() + ")";
    if (_den != Poly2::one()) {
      out += "/(" + _den.to_string() + ")";
    }
    if (_shift != 0) {
      out += "*w^" + std::to_string(_shift);
    }
    return out;
  }

  NcMono nc_mono(std::initializer_list<std::pair<int, int>> factors) {
    NcMono out;
    for (auto const& f : factors) {
      out = nc_multiply(out, NcMono{f});
    }
    return out;
  }

  NcMono nc_multiply(NcMono const& a, NcMono const& b) {
    NcMono out = a;
    for (auto const& f : b) {
      if (f.second == 0) {
        continue;
      }
      if (!out.empty() && out.back().first == f.first) {
        out.back().second += f.second;
        if (out.back().second == 0) {
          out.pop_back();
        }
      } else {
        out.push_back(f);
      }
    }
    return out;
  }

  NcMono nc_invert(NcMono const& a) {
    NcMono out(a.rbegin(), a.rend());
    for (auto& f : out) {
      f.second = -f.second;
    }
    return out;
  }

  LaurentPoly2::LaurentPoly2(std::initializer_list<NcMono> terms) {
    for (auto const& t : terms) {
      toggle(t);
    }
  }

  void LaurentPoly2::toggle(NcMono const& m) {
    auto canonical = nc_multiply({}, m);
    auto it        = _terms.find(canonical);
    if (it != _terms.end()) {
      _terms.erase(it);
    } else {
      _terms.insert(std::move(canonical));
    }
  }

  LaurentPoly2& LaurentPoly2::operator+=(LaurentPoly2 const& o) {
    for (auto const& t : o._terms) {
      toggle(t);
    }
    return *this;
  }

  LaurentPoly2 operator*(LaurentPoly2 const& a, LaurentPoly2 const& b) {
    LaurentPoly2 out;
    for (auto const& s : a._terms) {
      for (auto const& t : b._terms) {
        out.toggle(nc_multiply(s, t));
      }
    }
    return out;
  }

  std::string LaurentPoly2::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& t : _terms) {
      if (!out.empty()) {
        out += " + ";
      }
      if (t.empty()) {
        out += "1";
      }
      for (auto const& [var, e] : t) {
        out += "x" + std::to_string(var);
        if (e != 1) {
          out += "^" + std::to_string(e);
        }
      }
    }
    return out;
  }

  Rat2 rat_eval(NcMono const& m) {
    static Rat2 const x1 = Rat2(Poly2::one(), Poly2::from_exponents({0, 1}));
    Rat2              out(Poly2::one());
    for (auto const& [var, e] : m) {
      out = out * (var == 1 ? x1.pow(e) : Rat2::w_power(e));
    }
    return out;
  }

  Rat2 rat_eval(LaurentPoly2 const& p) {
    Rat2 out;
    for (auto const& t : p.terms()) {
      out = out + rat_eval(t);
    }
    return out;
  }

  bool vanishes_at_inverse(LaurentPoly2 const& p) {
    return rat_eval(p).is_zero();
  }

  LaurentPoly2 telescope_up(int k) {
    LaurentPoly2 p = LaurentPoly2::x1() * LaurentPoly2::x2(k) + LaurentPoly2::x1();
    for (int i = 0; i < k; ++i) {
      p += LaurentPoly2::x2(i);
    }
    return p;
  }

  LaurentPoly2 telescope_down(int k) {
    LaurentPoly2 p = LaurentPoly2::x1() * LaurentPoly2::x2(-k) + LaurentPoly2::x1();
    for (int i = 1; i <= k; ++i) {
      p += LaurentPoly2::x2(-i);
    }
    return p;
  }

  void spine_push(Spine& s, SpineArc a) {
    if (a.exp == 0) {
      return;
    }
    if (!s.empty() && s.back().cyc == a.cyc) {
      s.back().exp += a.exp;
      if (s.back().exp == 0) {
        s.pop_back();
      }
    } else {
      s.push_back(a);
    }
  }

  NcMono spine_mono(Spine const& s) {
    NcMono out;
    for (auto const& a : s) {
      out = nc_multiply(out, NcMono{{a.cyc == Cyc::V ? 1 : 2, a.exp}});
    }
    return out;
  }

  Spine mono_spine(NcMono const& m) {
    Spine out;
    for (auto const& [var, e] : m) {
      spine_push(out, {var == 1 ? Cyc::V : Cyc::W, e});
    }
    return out;
  }

  Rat2 shadow(Spine const& s) {
    return rat_eval(spine_mono(s));
  }

}  // namespace gfr
