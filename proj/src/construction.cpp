#include "gfr/construction.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace gfr {

  namespace {
    long long parse_integer(std::string const& s, std::string const& what) {
      long long value = 0;
      auto [ptr, ec]  = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("malformed " + what + " '" + s + "'");
      }
      return value;
    }

    std::string trim(std::string const& s) {
      auto first = s.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        return "";
      }
      auto last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }
  }  // namespace

  Rational parse_rational(std::string const& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      return Rational(parse_integer(trim(s), "rational"));
    }
    long long num = parse_integer(trim(s.substr(0, slash)), "rational");
    long long den = parse_integer(trim(s.substr(slash + 1)), "rational");
    if (den == 0) {
      throw DomainError("zero denominator in '" + s + "'");
    }
    return Rational(num, den);
  }

  std::string to_string(Rational const& r) {
    if (r.denominator() == 1) {
      return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }

  RawParams read_config(std::istream& in, RawParams base) {
    std::string line;
    int         lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.erase(hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw DomainError("config line " + std::to_string(lineno)
                          + ": expected key=value");
      }
      auto key   = trim(line.substr(0, eq));
      auto value = trim(line.substr(eq + 1));
      if (key == "alphabet") {
        base.alphabet = value;
      } else if (key == "w") {
        base.w = value;
      } else if (key == "alpha") {
        base.alpha = parse_integer(value, "alpha");
      } else if (key == "beta") {
        base.beta = parse_integer(value, "beta");
      } else if (key == "tau") {
        base.tau = parse_rational(value);
      } else if (key == "lambda") {
        base.lambda = parse_rational(value);
      } else if (key == "w_exponent_bound") {
        base.w_exponent_bound = parse_integer(value, "w_exponent_bound");
      } else {
        throw DomainError("config line " + std::to_string(lineno)
                          + ": unknown key '" + key + "'");
      }
    }
    return base;
  }

  RawParams read_config_file(std::string const& path, RawParams base) {
    std::ifstream in(path);
    if (!in) {
      throw DomainError("cannot open config '" + path + "'");
    }
    return read_config(in, std::move(base));
  }

  VWord build_v(Letter x, Letter y, long long alpha, long long beta) {
    VWord v;
    for (long long i = alpha; i < beta; ++i) {
      v.word.insert(v.word.end(), static_cast<std::size_t>(i), x);
      v.y_positions.push_back(v.word.size());
      v.word.push_back(y);
    }
    v.inverse = invert(v.word);
    v.y_prefix.assign(v.word.size() + 1, 0);
    for (std::size_t i = 0; i < v.word.size(); ++i) {
      v.y_prefix[i + 1] = v.y_prefix[i] + (v.word[i] == y ? 1 : 0);
    }
    return v;
  }

  Params Params::validate(RawParams const& raw) {
    Params p;
    p._raw      = raw;
    p._alphabet = Alphabet(raw.alphabet);
    if (!p._alphabet.has('x') || !p._alphabet.has('y')) {
      throw DomainError("alphabet must contain x and y");
    }
    p._x = p._alphabet.letter('x');
    p._y = p._alphabet.letter('y');

    Word raw_w;
    if (raw.w != "1") {
      for (char c : raw.w) {
        raw_w.push_back(p._alphabet.letter(c));
      }
    }
    if (!is_reduced(raw_w)) {
      throw DomainError("w is not freely reduced");
    }
    if (!is_cyclically_reduced_primitive(raw_w)) {
      throw DomainError(is_cyclically_reduced(raw_w) ? "w is a proper power"
                                                     : "w is not cyclically reduced");
    }
    for (Letter bad : {p._x, p._y, inverse(p._x), inverse(p._y)}) {
      if (raw_w.front() == bad) {
        throw DomainError(std::string("w starts with ") + p._alphabet.to_char(bad));
      }
      if (raw_w.back() == bad) {
        throw DomainError(std::string("w ends with ") + p._alphabet.to_char(bad));
      }
    }
    p._w     = raw_w;
    p._w_inv = invert(raw_w);

    if (raw.alpha <= 0 || raw.beta <= 0) {
      throw DomainError("α and β must be positive");
    }
    if (static_cast<long long>(raw_w.size()) >= raw.alpha) {
      throw DomainError("|w| < α violated");
    }
    if (raw.alpha >= raw.beta) {
      throw DomainError("α < β violated");
    }
    // keeps run lengths inside the letter-count tables
    if (raw.beta > 100000) {
      throw DomainError("β too large");
    }
    Rational eps(1, raw.beta - raw.alpha);
    if (raw.tau < eps * 10) {
      throw DomainError("τ ≥ 10ε violated");
    }
    if (raw.lambda <= Rational(1, 2) || raw.lambda >= 1) {
      throw DomainError("1/2 < λ < 1 violated");
    }
    if (raw.lambda + eps * 2 >= 1) {
      throw DomainError("λ + 2ε < 1 violated");
    }
    if (raw.w_exponent_bound < 0) {
      throw DomainError("w_exponent_bound must be nonnegative");
    }
    p._v = std::make_shared<VWord const>(build_v(p._x, p._y, raw.alpha, raw.beta));

    auto tables   = std::make_shared<PatternTables>();
    tables->words = {p._v->word, p._v->inverse, p._w, p._w_inv};
    for (std::size_t i = 0; i < 4; ++i) {
      tables->index[i] = FactorIndex(tables->words[i]);
    }
    p._patterns = std::move(tables);
    return p;
  }

  Params Params::with_bound(long long k) const {
    if (k < 0) {
      throw DomainError("w_exponent_bound must be nonnegative");
    }
    Params q                 = *this;
    q._raw.w_exponent_bound = k;
    return q;
  }

  std::string Params::format_measure(Rational const& r) const {
    Rational scaled = r * denominator();
    if (scaled.denominator() == 1) {
      return std::to_string(scaled.numerator()) + "/" + std::to_string(denominator());
    }
    return to_string(r);
  }

  Params const& desk_params() {
    static Params const p = [] {
      RawParams raw;
      raw.w_exponent_bound = 3;
      return Params::validate(raw);
    }();
    return p;
  }

}  // namespace gfr
