#ifndef GFR_CHART_HPP
#define GFR_CHART_HPP

#include <compare>
#include <memory>
#include <optional>
#include <vector>

#include "gfr/gfp.hpp"

namespace gfr {

  enum class Relation { separated, touch, overlap };
  char const* to_string(Relation r);

  struct NeighborRelation {
    Relation kind = Relation::separated;
    Word     piece;  // shared letters for an overlap
  };

  // a must start before b; both must live in the same word.
  NeighborRelation neighbor_relation(Occurrence const& a, Occurrence const& b);

  struct Chart {
    std::shared_ptr<Word const>   host;
    std::vector<Occurrence>       members;
    std::vector<NeighborRelation> relations;  // between members k and k+1
  };

  Chart chart_of(Word const& u, Params const& p);

  struct FChar {
    int  n = 0;
    int  k = 0;
    auto operator<=>(FChar const&) const = default;
  };

  // M(U) with the bookkeeping every later step needs: reach, fully covered
  // flags and essential neighbours.
  struct Layout {
    std::shared_ptr<Word const> word;
    std::vector<Occurrence>     occ;
    std::vector<std::size_t>    reach;
    std::vector<bool>           fc;
    std::vector<int>            left;   // essential neighbours, -1 if none
    std::vector<int>            right;

    static Layout build(std::shared_ptr<Word const> u, Params const& p);
    int           n_min() const;
    // index of the element with exactly this span, or -1
    int find(std::size_t start, std::size_t end) const;
  };

  // U' = U[0, keep) · mid · U[from, n), freely reduced, from replacing the
  // occurrence [start, end) by a word.
  struct Splice {
    std::shared_ptr<Word const> word;
    std::size_t                 keep     = 0;
    std::size_t                 mid_end  = 0;
    std::size_t                 from     = 0;
    std::size_t                 start    = 0;  // replaced span in the old word
    std::size_t                 end      = 0;

    std::size_t map_right(std::size_t pos) const {
      return pos - from + mid_end;
    }
  };
  Splice splice(Word const& u, std::size_t start, std::size_t end, Word const& with);

  // Elements of M(U') near the splice, computed on the smallest window that
  // holds every element crossing the changed letters.
  std::vector<Occurrence> local_occurrences(Layout const& before, Splice const& s,
                                            Params const& p);

  // Images (in M(U')) of an element of M(U) after a splice.
  std::vector<Occurrence> images(Occurrence const& b, Splice const& s,
                                 std::vector<Occurrence> const& local);

  std::vector<Occurrence> image_of(Word const& u_h, Occurrence const& a_h, Word const& a_j,
                                   Occurrence const& b_h, Params const& p);

  struct VirtualSearch {
    // 1: replace one essential neighbour; 2: then also the one on the other side
    int depth = 2;
  };

  class WordAnalysis {
   public:
    WordAnalysis(Word u, Params const& p, VirtualSearch opts = {});
    WordAnalysis(std::shared_ptr<Word const> u, Params const& p, VirtualSearch opts = {});

    Layout const& layout() const noexcept {
      return _layout;
    }
    Word const& word() const noexcept {
      return *_layout.word;
    }
    std::vector<Occurrence> const& occurrences() const noexcept {
      return _layout.occ;
    }
    bool is_virtual(std::size_t i) const {
      return _virtual[i];
    }
    std::vector<std::size_t> virtual_indices() const;
    std::vector<Occurrence>  virtual_members() const;
    int                      n_min() const noexcept {
      return _n;
    }
    int k_tau() const noexcept {
      return _k;
    }
    FChar f() const noexcept {
      return {_n, _k};
    }
    Params const& params() const noexcept {
      return *_p;
    }

   private:
    void          classify();
    Params const* _p;
    VirtualSearch _opts;
    Layout        _layout;
    std::vector<bool> _virtual;
    int           _n = 0;
    int           _k = 0;
  };

  struct CoverStats {
    int                     n_min = 0;
    int                     k_tau = 0;
    std::vector<Occurrence> nfc;
    std::vector<Occurrence> fc;
  };

  CoverStats                cover_stats(Word const& u, Params const& p);
  std::vector<Occurrence>   virtual_members(Word const& u, Params const& p);
  FChar                     f_char(Word const& u, Params const& p);

  // Search over replacement sequences next to element b: the best Λ an image
  // of b reaches, stopping as soon as τ is reached. Incident monomials of a
  // neighbour are tried once per shape of the end facing b.
  Rational best_image_measure(Layout const& layout, std::size_t b, Params const& p,
                              VirtualSearch opts = {});

}  // namespace gfr

#endif  // GFR_CHART_HPP
