#ifndef GFR_QUOTIENT_HPP
#define GFR_QUOTIENT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gfr/chart.hpp"
#include "gfr/multiturn.hpp"
#include "gfr/ring.hpp"

namespace gfr {

  // An occurrence of v_m⁻¹ in a word, v = v_i·v_m·v_f, maximal among
  // subwords of v⁻¹. first/last locate v_m inside v.
  struct InverseChunk {
    std::size_t start = 0;
    std::size_t end   = 0;
    std::size_t first = 0;
    std::size_t last  = 0;
    int         ys    = 0;
  };

  std::vector<InverseChunk> inverse_chunks(Word const& u, Params const& p);

  // No v_m⁻¹ with Λ(v_m) > threshold; threshold defaults to λ.
  bool is_lambda_semicanonical(Word const& u, Params const& p);
  bool is_lambda_semicanonical(Word const& u, Params const& p, Rational const& threshold);

  enum class ReduceMode {
    direct,  // v_m⁻¹ ↦ v_f·w·v_i + v_f·v_i
    safe,    // v_m⁻¹ ↦ v_f·v·v_i + v_f·v·w²·v_i
  };

  struct ReduceStep {
    Word              input;
    InverseChunk      chunk;
    std::vector<Word> outputs;
  };

  struct Reduced {
    RingElement             element;
    Certificate             certificate;  // for input + element
    std::vector<ReduceStep> steps;
  };

  Reduced semicanonical_reduce(RingElement const& e, Params const& p,
                               ReduceMode mode = ReduceMode::direct);

  // Virtual members (layout indices) whose part outside the overlaps with
  // neighbouring virtual members is not λ-semicanonical.
  std::vector<std::size_t> stilde_violations(WordAnalysis const& wa);
  bool                     satisfies_stilde(Word const& u, Params const& p);

  struct Derived {
    Word        word;
    FChar       f;
    int         depth  = 0;
    std::size_t parent = 0;  // index of the word it was derived from
  };

  struct DerivedStream {
    std::vector<Derived> words;  // in breadth-first order, u first
    bool                 truncated = false;
  };

  struct DerivedBudget {
    std::size_t nodes     = 200;
    int         max_depth = 3;
  };

  DerivedStream derived_monomials(Word const& u, Params const& p, DerivedBudget budget = {});

  // One choice per virtual member of base, in order.
  struct TensorChoice {
    Word              base;
    std::vector<Word> choices;
  };

  // The image under μ[U]; nullopt stands for 0.
  std::optional<Word> mu_apply(TensorChoice const& t, Params const& p);

  // Replacements at several members at once: the reduced form of U with
  // a⁻¹·b inserted at the right end of every replaced member a.
  Word replace_members(Word const& u, std::vector<Occurrence> const& members,
                       std::vector<Word> const& with);

  struct DiagramNode {
    std::string              id;
    std::string              label;
    std::optional<PathPoint> point;
  };

  struct DiagramSegment {
    std::string from;
    std::string to;
    Word        word;
    std::string role;  // top, bottom, cancel, lens
  };

  // A v-diagram glued along the bottom path at I and F.
  struct Lens {
    PathPoint         in;
    PathPoint         out;
    std::size_t       attach = 0;  // position of I in the word it acts on
    Word              host;
    Word              replaced;
    std::vector<Word> arcs;
  };

  struct Diagram {
    Word              top_left;
    Word              top_right;
    Word              cancelled;  // U₁ = X·C, U₂ = C⁻¹·Y
    Word              product;
    std::vector<Lens> lenses;
    std::vector<Word> bottom;

    std::vector<DiagramNode>    nodes() const;
    std::vector<DiagramSegment> segments() const;
  };

  struct Product {
    RingElement element;
    Diagram     diagram;
    Certificate certificate;  // for u1·u2 + element
  };

  Product multiply_mod_I(Word const& u1, Word const& u2, Params const& p);

  struct Equality {
    bool                     equal = false;
    Certificate              certificate;  // for a + b when equal
    std::vector<std::string> evidence;     // shadow refutations when unknown
  };

  Equality equal_mod_I(RingElement const& a, RingElement const& b, Params const& p);

}  // namespace gfr

#endif  // GFR_QUOTIENT_HPP
