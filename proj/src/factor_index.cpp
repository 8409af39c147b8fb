#include "gfr/factor_index.hpp"

#include <algorithm>
#include <numeric>

namespace gfr {

  int FactorIndex::next(int s, Letter c) const {
    for (auto const& [l, t] : _st[static_cast<std::size_t>(s)].next) {
      if (l == c) {
        return t;
      }
    }
    return -1;
  }

  FactorIndex::FactorIndex(Word const& pattern) : _m(pattern.size()) {
    Word rev(pattern.rbegin(), pattern.rend());
    _st.reserve(2 * rev.size() + 2);
    _st.push_back({});
    int last = 0;

    auto set_next = [this](int s, Letter c, int t) {
      auto& nx = _st[static_cast<std::size_t>(s)].next;
      for (auto& [l, u] : nx) {
        if (l == c) {
          u = t;
          return;
        }
      }
      nx.emplace_back(c, t);
    };

    for (std::size_t i = 0; i < rev.size(); ++i) {
      Letter c   = rev[i];
      int    cur = static_cast<int>(_st.size());
      _st.push_back({});
      _st.back().len    = _st[static_cast<std::size_t>(last)].len + 1;
      _st.back().maxend = static_cast<int>(i + 1);
      int p             = last;
      while (p != -1 && next(p, c) == -1) {
        set_next(p, c, cur);
        p = _st[static_cast<std::size_t>(p)].link;
      }
      if (p == -1) {
        _st[static_cast<std::size_t>(cur)].link = 0;
      } else {
        int q = next(p, c);
        if (_st[static_cast<std::size_t>(p)].len + 1
            == _st[static_cast<std::size_t>(q)].len) {
          _st[static_cast<std::size_t>(cur)].link = q;
        } else {
          int clone = static_cast<int>(_st.size());
          State copy = _st[static_cast<std::size_t>(q)];
          copy.len    = _st[static_cast<std::size_t>(p)].len + 1;
          copy.maxend = 0;
          _st.push_back(std::move(copy));
          while (p != -1 && next(p, c) == q) {
            set_next(p, c, clone);
            p = _st[static_cast<std::size_t>(p)].link;
          }
          _st[static_cast<std::size_t>(q)].link   = clone;
          _st[static_cast<std::size_t>(cur)].link = clone;
        }
      }
      last = cur;
    }

    // endpos sets are inherited up the suffix-link tree
    std::vector<int> order(_st.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [this](int a, int b) {
      return _st[static_cast<std::size_t>(a)].len > _st[static_cast<std::size_t>(b)].len;
    });
    for (int s : order) {
      int l = _st[static_cast<std::size_t>(s)].link;
      if (l >= 0) {
        auto& up  = _st[static_cast<std::size_t>(l)].maxend;
        up        = std::max(up, _st[static_cast<std::size_t>(s)].maxend);
      }
    }
  }

  std::vector<FactorIndex::Match> FactorIndex::prefix_factors(Word const& text) const {
    std::size_t        n = text.size();
    std::vector<Match> out(n);
    int                s = 0;
    int                l = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Letter c = text[n - 1 - k];
      while (s != 0 && next(s, c) == -1) {
        s = _st[static_cast<std::size_t>(s)].link;
        l = _st[static_cast<std::size_t>(s)].len;
      }
      int t = next(s, c);
      if (t != -1) {
        s = t;
        ++l;
      } else {
        l = 0;
      }
      Match& m = out[n - 1 - k];
      m.length = l;
      m.offset = l > 0 ? static_cast<int>(_m) - _st[static_cast<std::size_t>(s)].maxend : 0;
    }
    return out;
  }

  std::vector<int> z_function(Word const& s) {
    int              n = static_cast<int>(s.size());
    std::vector<int> z(s.size(), 0);
    if (n == 0) {
      return z;
    }
    z[0] = n;
    for (int i = 1, l = 0, r = 0; i < n; ++i) {
      if (i < r) {
        z[static_cast<std::size_t>(i)] = std::min(r - i, z[static_cast<std::size_t>(i - l)]);
      }
      while (i + z[static_cast<std::size_t>(i)] < n
             && s[static_cast<std::size_t>(z[static_cast<std::size_t>(i)])]
                    == s[static_cast<std::size_t>(i + z[static_cast<std::size_t>(i)])]) {
        ++z[static_cast<std::size_t>(i)];
      }
      if (i + z[static_cast<std::size_t>(i)] > r) {
        l = i;
        r = i + z[static_cast<std::size_t>(i)];
      }
    }
    return z;
  }

}  // namespace gfr
