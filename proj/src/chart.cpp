#include "gfr/chart.hpp"

#include <algorithm>
#include <array>

namespace gfr {

  char const* to_string(Relation r) {
    switch (r) {
      case Relation::separated:
        return "separated";
      case Relation::touch:
        return "touch";
      case Relation::overlap:
        return "overlap";
    }
    return "?";
  }

  NeighborRelation neighbor_relation(Occurrence const& a, Occurrence const& b) {
    if (a.host != b.host && (!a.host || !b.host || *a.host != *b.host)) {
      throw DomainError("occurrences come from different words");
    }
    if (b.start < a.start) {
      throw DomainError("the first occurrence must start first");
    }
    if (a.end < b.start) {
      return {Relation::separated, {}};
    }
    if (a.end == b.start) {
      return {Relation::touch, {}};
    }
    return {Relation::overlap, subword(*a.host, b.start, std::min(a.end, b.end))};
  }

  Chart chart_of(Word const& u, Params const& p) {
    Chart c;
    c.host = std::make_shared<Word const>(u);
    for (auto& o : maximal_occurrences(c.host, p)) {
      if (lambda_measure(o, p) >= p.tau()) {
        c.members.push_back(std::move(o));
      }
    }
    for (std::size_t k = 1; k < c.members.size(); ++k) {
      c.relations.push_back(neighbor_relation(c.members[k - 1], c.members[k]));
    }
    return c;
  }

  Layout Layout::build(std::shared_ptr<Word const> u, Params const& p) {
    Layout l;
    auto   rec = recognize(u, p, 0, u->size(), true);
    l.word     = std::move(u);
    l.occ      = std::move(rec.occ);
    l.reach    = std::move(rec.reach);
    auto n     = l.occ.size();
    l.fc.assign(n, false);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      l.fc[i] = l.occ[i - 1].end >= l.occ[i + 1].start;
    }
    l.left.assign(n, -1);
    l.right.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      if (l.fc[i]) {
        continue;
      }
      for (std::size_t j = i; j-- > 0 && l.occ[j].end >= l.occ[i].start;) {
        if (!l.fc[j]) {
          l.left[i] = static_cast<int>(j);
          break;
        }
      }
      for (std::size_t j = i + 1; j < n && l.occ[j].start <= l.occ[i].end; ++j) {
        if (!l.fc[j]) {
          l.right[i] = static_cast<int>(j);
          break;
        }
      }
    }
    return l;
  }

  int Layout::n_min() const {
    int         count = 0;
    std::size_t i     = 0;
    while (i < occ.size()) {
      ++count;
      std::size_t j = i;
      while (j + 1 < occ.size() && occ[j + 1].start <= occ[i].end) {
        ++j;
      }
      i = j == i ? i + 1 : j;
    }
    return count;
  }

  int Layout::find(std::size_t start, std::size_t end) const {
    auto it = std::lower_bound(occ.begin(), occ.end(), start,
                               [](Occurrence const& o, std::size_t s) { return o.start < s; });
    if (it != occ.end() && it->start == start && it->end == end) {
      return static_cast<int>(it - occ.begin());
    }
    return -1;
  }

  Splice splice(Word const& u, std::size_t start, std::size_t end, Word const& with) {
    std::size_t k = 0;
    while (k < start && k < with.size() && u[start - 1 - k] == -with[k]) {
      ++k;
    }
    std::size_t keep = start - k;
    Word        mid(with.begin() + static_cast<std::ptrdiff_t>(k), with.end());
    std::size_t from = end;
    while (from < u.size() && !mid.empty() && mid.back() == -u[from]) {
      mid.pop_back();
      ++from;
    }
    if (mid.empty()) {
      while (keep > 0 && from < u.size() && u[keep - 1] == -u[from]) {
        --keep;
        ++from;
      }
    }
    Word out;
    out.reserve(keep + mid.size() + (u.size() - from));
    out.insert(out.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(keep));
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(from), u.end());
    Splice s;
    s.word    = std::make_shared<Word const>(std::move(out));
    s.keep    = keep;
    s.mid_end = keep + mid.size();
    s.from    = from;
    s.start   = start;
    s.end     = end;
    return s;
  }

  std::vector<Occurrence> local_occurrences(Layout const& before, Splice const& s,
                                            Params const& p) {
    auto const& r  = before.reach;
    auto        ws = static_cast<std::size_t>(std::lower_bound(r.begin(), r.end(), s.keep) - r.begin());
    ws             = std::min(ws, s.keep);
    std::size_t we = s.mid_end;
    if (s.from < r.size()) {
      we += r[s.from] - s.from;
    }
    return recognize(s.word, p, ws, we, true).occ;
  }

  std::vector<Occurrence> images(Occurrence const& b, Splice const& s,
                                 std::vector<Occurrence> const& local) {
    if (b.end < s.keep) {
      return {Occurrence{s.word, b.start, b.end, b.path}};
    }
    if (b.start > s.from) {
      return {Occurrence{s.word, s.map_right(b.start), s.map_right(b.end), b.path}};
    }
    std::size_t lo = 0;
    std::size_t hi = 0;
    if (b.start == s.start && b.end == s.end) {
      lo = s.keep;
      hi = s.mid_end;
    } else if (b.start < s.keep) {
      lo = b.start;
      hi = std::min(b.end, s.keep);
    } else if (b.end > s.from) {
      lo = s.map_right(std::max(b.start, s.from));
      hi = s.map_right(b.end);
    }
    std::vector<Occurrence> out;
    if (lo >= hi) {
      return out;
    }
    for (auto const& o : local) {
      if (o.start <= lo && o.end >= hi) {
        out.push_back(o);
      }
    }
    return out;
  }

  std::vector<Occurrence> image_of(Word const& u_h, Occurrence const& a_h, Word const& a_j,
                                   Occurrence const& b_h, Params const& p) {
    auto layout = Layout::build(std::make_shared<Word const>(u_h), p);
    if (layout.find(a_h.start, a_h.end) < 0) {
      throw DomainError("replaced occurrence is not maximal");
    }
    auto s     = splice(u_h, a_h.start, a_h.end, a_j);
    auto local = local_occurrences(layout, s, p);
    return images(b_h, s, local);
  }

  namespace {

    bool covers(std::vector<std::pair<std::size_t, std::size_t>> spans, std::size_t lo,
                std::size_t hi) {
      std::sort(spans.begin(), spans.end());
      for (auto const& [s, e] : spans) {
        if (s > lo) {
          break;
        }
        lo = std::max(lo, e);
        if (lo >= hi) {
          return true;
        }
      }
      return lo >= hi;
    }

    // a_j after the splice must stick out of every other nfc element's image
    bool admissible(Layout const& layout, std::size_t a, Splice const& s,
                    std::vector<Occurrence> const& local) {
      if (s.mid_end == s.keep) {
        return false;
      }
      std::vector<std::pair<std::size_t, std::size_t>> spans;
      for (std::size_t e = 0; e < layout.occ.size(); ++e) {
        auto const& o = layout.occ[e];
        if (e == a || layout.fc[e] || o.end < s.keep || o.start > s.from) {
          continue;
        }
        for (auto const& img : images(o, s, local)) {
          spans.emplace_back(img.start, img.end);
        }
      }
      return !covers(std::move(spans), s.keep, s.mid_end);
    }

    // Incident monomials of a that differ in the end facing b: the image of b
    // only sees that end, so one spine per shape of it is enough. A w on the
    // far side keeps the frame from cancelling through a short spine.
    std::vector<Word> facing_roster(GfpPath const& a, bool b_on_right, Params const& p) {
      int               k = p.bound();
      std::vector<Word> out;
      Word              self = frame_word(a.start, a.end, a.spine, p);
      for (int far = 0; far <= std::min(k, 1); ++far) {
        for (int l = -1; l <= std::min(k, 1); ++l) {
          for (int e = -k; e <= k; ++e) {
            Spine s;
            if (b_on_right) {
              spine_push(s, {Cyc::W, far});
              spine_push(s, {Cyc::V, l});
              spine_push(s, {Cyc::W, e});
            } else {
              spine_push(s, {Cyc::W, e});
              spine_push(s, {Cyc::V, l});
              spine_push(s, {Cyc::W, far});
            }
            Word w = frame_word(a.start, a.end, s, p);
            if (w != self && std::find(out.begin(), out.end(), w) == out.end()) {
              out.push_back(std::move(w));
            }
          }
        }
      }
      return out;
    }

    struct SideBest {
      Rational                    measure;
      std::shared_ptr<Word const> word;
      Occurrence                  image;
      bool                        found = false;
    };

    SideBest try_side(Layout const& lay, std::size_t b, bool left, Params const& p) {
      SideBest best;
      int      a = left ? lay.left[b] : lay.right[b];
      if (a < 0) {
        return best;
      }
      auto const& occ_a = lay.occ[static_cast<std::size_t>(a)];
      if (lambda_measure(occ_a, p) < p.tau() - 2 * p.epsilon()) {
        return best;
      }
      for (auto const& with : facing_roster(occ_a.path, left, p)) {
        auto s     = splice(*lay.word, occ_a.start, occ_a.end, with);
        auto local = local_occurrences(lay, s, p);
        if (!admissible(lay, static_cast<std::size_t>(a), s, local)) {
          continue;
        }
        for (auto const& img : images(lay.occ[b], s, local)) {
          auto m = lambda_measure(img, p);
          if (!best.found || m > best.measure) {
            best = {m, s.word, img, true};
          }
        }
      }
      return best;
    }

  }  // namespace

  Rational best_image_measure(Layout const& layout, std::size_t b, Params const& p,
                              VirtualSearch opts) {
    Rational base = lambda_measure(layout.occ[b], p);
    Rational best = base;
    if (best >= p.tau() || layout.fc[b]) {
      return best;
    }
    std::array<SideBest, 2> side{try_side(layout, b, true, p), try_side(layout, b, false, p)};
    for (auto const& s : side) {
      if (s.found) {
        best = std::max(best, s.measure);
      }
    }
    if (best >= p.tau() || opts.depth < 2 || !side[0].found || !side[1].found) {
      return best;
    }
    auto gain = side[0].measure - base + side[1].measure - base;
    if (side[0].measure <= base || side[1].measure <= base || base + gain < p.tau()) {
      return best;
    }
    auto next = Layout::build(side[0].word, p);
    int  idx  = next.find(side[0].image.start, side[0].image.end);
    if (idx < 0) {
      return best;
    }
    auto second = try_side(next, static_cast<std::size_t>(idx), false, p);
    if (second.found) {
      best = std::max(best, second.measure);
    }
    return best;
  }

  WordAnalysis::WordAnalysis(Word u, Params const& p, VirtualSearch opts)
      : WordAnalysis(std::make_shared<Word const>(std::move(u)), p, opts) {}

  WordAnalysis::WordAnalysis(std::shared_ptr<Word const> u, Params const& p, VirtualSearch opts)
      : _p(&p), _opts(opts), _layout(Layout::build(std::move(u), p)) {
    classify();
  }

  void WordAnalysis::classify() {
    auto const& occ = _layout.occ;
    _virtual.assign(occ.size(), false);
    Rational floor = _p->tau() - 2 * _p->epsilon();
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (_layout.fc[i]) {
        continue;
      }
      auto m = lambda_measure(occ[i], *_p);
      if (m >= _p->tau()) {
        _virtual[i] = true;
      } else if (m >= floor) {
        _virtual[i] = best_image_measure(_layout, i, *_p, _opts) >= _p->tau();
      }
    }
    _n = _layout.n_min();
    _k = static_cast<int>(std::count(_virtual.begin(), _virtual.end(), true));
  }

  std::vector<std::size_t> WordAnalysis::virtual_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < _virtual.size(); ++i) {
      if (_virtual[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<Occurrence> WordAnalysis::virtual_members() const {
    std::vector<Occurrence> out;
    for (auto i : virtual_indices()) {
      out.push_back(_layout.occ[i]);
    }
    return out;
  }

  CoverStats cover_stats(Word const& u, Params const& p) {
    WordAnalysis wa(u, p);
    CoverStats   cs;
    cs.n_min = wa.n_min();
    cs.k_tau = wa.k_tau();
    auto const& l = wa.layout();
    for (std::size_t i = 0; i < l.occ.size(); ++i) {
      (l.fc[i] ? cs.fc : cs.nfc).push_back(l.occ[i]);
    }
    return cs;
  }

  std::vector<Occurrence> virtual_members(Word const& u, Params const& p) {
    return WordAnalysis(u, p).virtual_members();
  }

  FChar f_char(Word const& u, Params const& p) {
    return WordAnalysis(u, p).f();
  }

}  // namespace gfr
