#include "gfr/ring.hpp"

namespace gfr {

  RingElement::RingElement(std::initializer_list<Word> words) {
    for (auto const& w : words) {
      toggle(w);
    }
  }

  void RingElement::toggle(Word const& w) {
    Word r = reduce(w);
    if (!_terms.erase(r)) {
      _terms.insert(std::move(r));
    }
  }

  RingElement& RingElement::operator+=(RingElement const& o) {
    for (auto const& w : o._terms) {
      toggle(w);
    }
    return *this;
  }

  RingElement operator*(RingElement const& a, RingElement const& b) {
    RingElement out;
    for (auto const& x : a._terms) {
      for (auto const& y : b._terms) {
        out.toggle(multiply(x, y));
      }
    }
    return out;
  }

  std::vector<std::string> RingElement::format(Params const& p) const {
    std::vector<std::string> out;
    for (auto const& w : _terms) {
      out.push_back(p.format(w));
    }
    return out;
  }

  std::string RingElement::to_string(Params const& p) const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& s : format(p)) {
      if (!out.empty()) {
        out += " + ";
      }
      out += s.empty() ? "1" : s;
    }
    return out;
  }

  RingElement left_multiply(Word const& l, RingElement const& e) {
    RingElement out;
    for (auto const& w : e.terms()) {
      out.toggle(multiply(l, w));
    }
    return out;
  }

  RingElement right_multiply(RingElement const& e, Word const& r) {
    RingElement out;
    for (auto const& w : e.terms()) {
      out.toggle(multiply(w, r));
    }
    return out;
  }

  Certificate& Certificate::operator+=(Certificate const& o) {
    pairs.insert(pairs.end(), o.pairs.begin(), o.pairs.end());
    return *this;
  }

  Certificate wrap(Certificate const& c, Word const& left, Word const& right) {
    Certificate out;
    for (auto const& [l, r] : c.pairs) {
      out.pairs.emplace_back(multiply(left, l), multiply(r, right));
    }
    return out;
  }

  RingElement expand(Certificate const& c, Params const& p) {
    Word const  vw = multiply(p.v(), p.w());
    RingElement out;
    for (auto const& [l, r] : c.pairs) {
      out.toggle(multiply(l, r));
      out.toggle(multiply({l, p.v(), r}));
      out.toggle(multiply({l, vw, r}));
    }
    return out;
  }

  bool check_certificate(RingElement const& e, Certificate const& c, Params const& p) {
    return expand(c, p) == e;
  }

}  // namespace gfr
