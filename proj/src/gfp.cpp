#include "gfr/gfp.hpp"

#include <algorithm>
#include <queue>
#include <tuple>
#include <unordered_set>

namespace gfr {

  Word const& cycle_word(Cyc cyc, Params const& p) {
    return cyc == Cyc::V ? p.v() : p.w();
  }

  int cycle_length(Cyc cyc, Params const& p) {
    return static_cast<int>(cycle_word(cyc, p).size());
  }

  PathPoint normalize(Cyc cyc, int offset, Params const& p) {
    if (offset == 0 || offset == cycle_length(cyc, p)) {
      return {};
    }
    return {cyc, offset};
  }

  bool GfpPath::on_w_only() const noexcept {
    return !pieces.empty()
           && std::all_of(pieces.begin(), pieces.end(),
                          [](Piece const& pc) { return pc.cyc == Cyc::W; });
  }

  int GfpPath::start_arc(Params const&) const {
    if (start.cyc != Cyc::W) {
      return 0;
    }
    int run = 0;
    while (run < static_cast<int>(pieces.size()) && pieces[run].cyc == Cyc::W) {
      ++run;
    }
    return pieces.front().forward() ? run : -run;
  }

  int GfpPath::end_arc(Params const&) const {
    if (end.cyc != Cyc::W) {
      return 0;
    }
    int run = 0;
    int n   = static_cast<int>(pieces.size());
    while (run < n && pieces[n - 1 - run].cyc == Cyc::W) {
      ++run;
    }
    return pieces.back().forward() ? run : -run;
  }

  Word frame_left(PathPoint const& start, Params const& p) {
    if (start.is_origin()) {
      return {};
    }
    Word const& c = cycle_word(start.cyc, p);
    return subword(c, static_cast<std::size_t>(start.offset), c.size());
  }

  Word frame_right(PathPoint const& end, Params const& p) {
    if (end.is_origin()) {
      return {};
    }
    return subword(cycle_word(end.cyc, p), 0, static_cast<std::size_t>(end.offset));
  }

  Word frame_word(PathPoint const& start, PathPoint const& end, Spine const& spine,
                  Params const& p) {
    Word out = frame_left(start, p);
    for (auto const& a : spine) {
      Word const& base = a.exp > 0 ? cycle_word(a.cyc, p)
                                   : (a.cyc == Cyc::V ? p.v_inverse() : p.w_inverse());
      for (int i = 0; i < std::abs(a.exp); ++i) {
        out = multiply(out, base);
      }
    }
    return multiply(out, frame_right(end, p));
  }

  GfpPath make_path(std::vector<Piece> pieces, Params const& p) {
    GfpPath path;
    path.pieces = std::move(pieces);
    if (path.pieces.empty()) {
      return path;
    }
    auto const& first = path.pieces.front();
    auto const& last  = path.pieces.back();
    path.start        = normalize(first.cyc, first.from, p);
    path.end          = normalize(last.cyc, last.to, p);
    path.prefix       = frame_left(path.start, p);
    path.suffix       = frame_right(path.end, p);

    for (auto const& pc : path.pieces) {
      int m = cycle_length(pc.cyc, p);
      if (!pc.forward()) {
        spine_push(path.spine, {pc.cyc, -1});
      } else if (pc.from == 0 && pc.to == m) {
        spine_push(path.spine, {pc.cyc, 1});
      } else if (pc.from > 0 && pc.to < m) {
        spine_push(path.spine, {pc.cyc, -1});
      }
      // a forward piece touching O at one end only is absorbed by the frame
      if (pc.cyc == Cyc::V) {
        path.ys += p.vword().y_count(static_cast<std::size_t>(std::min(pc.from, pc.to)),
                                     static_cast<std::size_t>(std::max(pc.from, pc.to)));
      }
    }
    return path;
  }

  Word read_word(GfpPath const& path, Params const& p) {
    Word out;
    for (auto const& pc : path.pieces) {
      Word const& c = cycle_word(pc.cyc, p);
      if (pc.forward()) {
        out.insert(out.end(), c.begin() + pc.from, c.begin() + pc.to);
      } else {
        for (int i = pc.from; i > pc.to; --i) {
          out.push_back(inverse(c[static_cast<std::size_t>(i - 1)]));
        }
      }
    }
    return out;
  }

  Rational lambda_measure(GfpPath const& path, Params const& p) {
    return p.measure(path.ys);
  }

  Rational lambda_measure(Occurrence const& o, Params const& p) {
    return p.measure(o.path.ys);
  }

  Rat2 shadow(GfpPath const& path) {
    return shadow(path.spine);
  }

  std::optional<PathPoint> step(PathPoint const& at, Letter l, Params const& p) {
    if (at.is_origin()) {
      for (Cyc cyc : {Cyc::V, Cyc::W}) {
        Word const& c = cycle_word(cyc, p);
        int         m = static_cast<int>(c.size());
        if (c.front() == l) {
          return normalize(cyc, 1, p);
        }
        if (inverse(c.back()) == l) {
          return normalize(cyc, m - 1, p);
        }
      }
      return std::nullopt;
    }
    Word const& c = cycle_word(at.cyc, p);
    if (c[static_cast<std::size_t>(at.offset)] == l) {
      return normalize(at.cyc, at.offset + 1, p);
    }
    if (inverse(c[static_cast<std::size_t>(at.offset - 1)]) == l) {
      return normalize(at.cyc, at.offset - 1, p);
    }
    return std::nullopt;
  }

  std::optional<std::vector<Piece>> walk(PathPoint const& from, Word const& u,
                                         Params const& p) {
    std::vector<Piece> out;
    PathPoint          at   = from;
    bool               open = false;
    Piece              cur{Cyc::V, 0, 0};
    for (Letter l : u) {
      if (at.is_origin()) {
        bool found = false;
        for (Cyc cyc : {Cyc::V, Cyc::W}) {
          Word const& c = cycle_word(cyc, p);
          int         m = static_cast<int>(c.size());
          if (c.front() == l) {
            cur   = {cyc, 0, 0};
            found = true;
            break;
          }
          if (inverse(c.back()) == l) {
            cur   = {cyc, m, m};
            found = true;
            break;
          }
        }
        if (!found) {
          return std::nullopt;
        }
        open = true;
      } else if (!open) {
        cur  = {at.cyc, at.offset, at.offset};
        open = true;
      }
      Word const& c   = cycle_word(cur.cyc, p);
      int         m   = static_cast<int>(c.size());
      int         o   = cur.to;
      bool        fwd = o < m && c[static_cast<std::size_t>(o)] == l;
      bool        bwd = o > 0 && inverse(c[static_cast<std::size_t>(o - 1)]) == l;
      if (!fwd && !bwd) {
        return std::nullopt;
      }
      if (cur.from != cur.to && fwd != cur.forward()) {
        out.push_back(cur);
        cur = {cur.cyc, o, o};
      }
      cur.to += fwd ? 1 : -1;
      at = normalize(cur.cyc, cur.to, p);
      if (cur.to == 0 || cur.to == m) {
        out.push_back(cur);
        open = false;
      }
    }
    if (open && cur.from != cur.to) {
      out.push_back(cur);
    }
    return out;
  }

  namespace {

    enum class Start : std::uint8_t { none, origin, factor, arrival };

    // Longest readable factor starting at each position of a word, with the
    // path that realizes it. Reading from O is deterministic, so the only
    // freedom is the first partial piece: it either reaches O (arrival) or
    // does not (factor).
    class Recognition {
     public:
      Recognition(Word const& u, Params const& p) : _u(u), _p(p), _n(u.size()) {
        auto const& tables = p.patterns();
        for (std::size_t d = 0; d < 4; ++d) {
          Word const& pat = tables.words[d];
          std::size_t m   = pat.size();

          Word joined = pat;
          joined.push_back(0);
          joined.insert(joined.end(), u.begin(), u.end());
          auto z = z_function(joined);
          _pre[d].assign(_n + 1, 0);
          for (std::size_t i = 0; i < _n; ++i) {
            _pre[d][i] = z[m + 1 + i];
          }

          Word rjoined(pat.rbegin(), pat.rend());
          rjoined.push_back(0);
          rjoined.insert(rjoined.end(), u.rbegin(), u.rend());
          auto rz = z_function(rjoined);
          _suf[d].assign(_n + 1, 0);
          for (std::size_t q = 1; q <= _n; ++q) {
            _suf[d][q] = rz[m + 1 + (_n - q)];
          }

          _ms[d] = tables.index[d].prefix_factors(u);
        }

        _g.assign(_n + 1, 0);
        _dir.assign(_n + 1, -1);
        for (std::size_t i = _n; i-- > 0;) {
          for (int d = 0; d < 4; ++d) {
            if (tables.words[d].front() == u[i]) {
              _dir[i] = d;
              break;
            }
          }
          if (_dir[i] < 0) {
            continue;
          }
          int m = static_cast<int>(tables.words[_dir[i]].size());
          int l = _pre[_dir[i]][i];
          _g[i] = l == m ? m + _g[i + m] : l;
        }

        // arrivals: u[i, q) is a proper suffix of a pattern, so the walk
        // started inside a cycle reaches O at q
        struct Arrival {
          std::size_t lo;
          std::size_t q;
          int         d;
        };
        std::vector<Arrival> arrivals;
        for (std::size_t q = 1; q <= _n; ++q) {
          for (int d = 0; d < 4; ++d) {
            Word const& pat = tables.words[d];
            if (pat.back() != u[q - 1]) {
              continue;
            }
            int s = std::min(_suf[d][q], static_cast<int>(pat.size()) - 1);
            if (s >= 1) {
              arrivals.push_back({q - static_cast<std::size_t>(s), q, d});
            }
          }
        }
        std::sort(arrivals.begin(), arrivals.end(),
                  [](Arrival const& a, Arrival const& b) { return a.lo < b.lo; });

        // (end, -q, d): larger end first, then the earliest arrival
        using Entry = std::tuple<std::size_t, long long, int>;
        std::priority_queue<Entry> heap;
        std::size_t                next = 0;

        _reach.assign(_n, 0);
        _start.assign(_n, Start::none);
        _arg.assign(_n, {0, 0});
        for (std::size_t i = 0; i < _n; ++i) {
          while (next < arrivals.size() && arrivals[next].lo <= i) {
            auto const& a = arrivals[next++];
            heap.emplace(a.q + static_cast<std::size_t>(_g[a.q]),
                         -static_cast<long long>(a.q), a.d);
          }
          while (!heap.empty()
                 && static_cast<std::size_t>(-std::get<1>(heap.top())) <= i) {
            heap.pop();
          }

          std::size_t best = i + static_cast<std::size_t>(_g[i]);
          Start       how  = _g[i] > 0 ? Start::origin : Start::none;
          std::pair<long long, int> arg{0, 0};
          for (int d = 0; d < 4; ++d) {
            auto const& mt  = _ms[d][i];
            std::size_t end = i + static_cast<std::size_t>(mt.length);
            if (end > best) {
              best = end;
              how  = Start::factor;
              arg  = {mt.offset, d};
            }
          }
          if (!heap.empty() && std::get<0>(heap.top()) > best) {
            best = std::get<0>(heap.top());
            how  = Start::arrival;
            arg  = {-std::get<1>(heap.top()), std::get<2>(heap.top())};
          }
          _reach[i] = best;
          _start[i] = how;
          _arg[i]   = arg;
        }
      }

      std::vector<std::size_t> const& reach() const noexcept {
        return _reach;
      }

      std::vector<Piece> pieces(std::size_t i) const {
        std::vector<Piece> out;
        std::size_t        end = _reach[i];
        switch (_start[i]) {
          case Start::none:
            break;
          case Start::origin:
            chain(i, end, out);
            break;
          case Start::factor: {
            int q = static_cast<int>(_arg[i].first);
            int d = _arg[i].second;
            out.push_back(pattern_piece(d, q, q + static_cast<int>(end - i)));
            break;
          }
          case Start::arrival: {
            auto q = static_cast<std::size_t>(_arg[i].first);
            int  d = _arg[i].second;
            int  m = static_cast<int>(_p.patterns().words[d].size());
            out.push_back(pattern_piece(d, m - static_cast<int>(q - i), m));
            chain(q, end, out);
            break;
          }
        }
        return out;
      }

     private:
      Piece pattern_piece(int d, int q1, int q2) const {
        Cyc cyc = d < 2 ? Cyc::V : Cyc::W;
        int m   = static_cast<int>(_p.patterns().words[d].size());
        if (d % 2 == 0) {
          return {cyc, q1, q2};
        }
        return {cyc, m - q1, m - q2};
      }

      void chain(std::size_t q, std::size_t end, std::vector<Piece>& out) const {
        while (q < end) {
          int         d = _dir[q];
          auto        m = _p.patterns().words[d].size();
          std::size_t l = std::min(m, end - q);
          out.push_back(pattern_piece(d, 0, static_cast<int>(l)));
          q += l;
        }
      }

      Word const&                              _u;
      Params const&                            _p;
      std::size_t                              _n;
      std::array<std::vector<int>, 4>          _pre;
      std::array<std::vector<int>, 4>          _suf;
      std::array<std::vector<FactorIndex::Match>, 4> _ms;
      std::vector<int>                         _g;
      std::vector<int>                         _dir;
      std::vector<std::size_t>                 _reach;
      std::vector<Start>                       _start;
      std::vector<std::pair<long long, int>>   _arg;
    };

  }  // namespace

  std::vector<std::size_t> reach(Word const& u, Params const& p) {
    return Recognition(u, p).reach();
  }

  std::optional<GfpPath> parse_gfp(Word const& u, Params const& p) {
    if (u.empty()) {
      return make_path({}, p);
    }
    Recognition rec(u, p);
    if (rec.reach()[0] != u.size()) {
      return std::nullopt;
    }
    return make_path(rec.pieces(0), p);
  }

  Recognized recognize(std::shared_ptr<Word const> host, Params const& p, std::size_t first,
                       std::size_t last, bool keep_w_only) {
    last = std::min(last, host->size());
    Recognized out;
    if (first >= last) {
      return out;
    }
    Word const  window(host->begin() + static_cast<std::ptrdiff_t>(first),
                       host->begin() + static_cast<std::ptrdiff_t>(last));
    Recognition rec(window, p);
    auto const& r = rec.reach();
    out.reach.reserve(r.size());
    for (auto x : r) {
      out.reach.push_back(x + first);
    }
    for (std::size_t i = 0; i < window.size(); ++i) {
      if (r[i] <= i || (i > 0 && r[i - 1] >= r[i])) {
        continue;
      }
      Occurrence occ{host, i + first, r[i] + first, make_path(rec.pieces(i), p)};
      if (keep_w_only || !occ.path.on_w_only()) {
        out.occ.push_back(std::move(occ));
      }
    }
    return out;
  }

  std::vector<Occurrence> maximal_occurrences(std::shared_ptr<Word const> u,
                                              Params const&               p) {
    return recognize(std::move(u), p).occ;
  }

  std::vector<Occurrence> maximal_occurrences(Word const& u, Params const& p) {
    return maximal_occurrences(std::make_shared<Word const>(u), p);
  }

  PathType classify_path(GfpPath const& path) {
    bool iv = path.start.cyc == Cyc::V;
    bool fv = path.end.cyc == Cyc::V;
    if (iv) {
      return fv ? PathType::VV : PathType::VW;
    }
    return fv ? PathType::WV : PathType::WW;
  }

  char const* to_string(PathType t) {
    switch (t) {
      case PathType::VV:
        return "VV";
      case PathType::VW:
        return "VW";
      case PathType::WV:
        return "WV";
      case PathType::WW:
        return "WW";
    }
    return "?";
  }

  std::vector<Word> incident_monomials(GfpPath const& path, Params const& p,
                                       int v_blocks) {
    int                                     k = p.bound();
    std::vector<Word>                       out;
    std::unordered_set<Word, WordHash>      seen;
    auto keep = [&](Word w) {
      if (seen.insert(w).second) {
        out.push_back(std::move(w));
      }
    };
    keep(frame_word(path.start, path.end, path.spine, p));

    std::vector<Spine> spines;
    for (int k0 = -k; k0 <= k; ++k0) {
      Spine s;
      spine_push(s, {Cyc::W, k0});
      spines.push_back(s);
    }
    for (int b = 0; b < v_blocks; ++b) {
      std::vector<Spine> grown;
      for (auto const& s : spines) {
        for (int l = -1; l <= k; ++l) {
          for (int k1 = -k; k1 <= k; ++k1) {
            Spine t = s;
            spine_push(t, {Cyc::V, l});
            spine_push(t, {Cyc::W, k1});
            grown.push_back(std::move(t));
          }
        }
      }
      spines = std::move(grown);
    }
    for (auto const& s : spines) {
      keep(frame_word(path.start, path.end, s, p));
    }
    return out;
  }

}  // namespace gfr
