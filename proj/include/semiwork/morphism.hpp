#ifndef SEMIWORK_MORPHISM_HPP_
#define SEMIWORK_MORPHISM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "semiwork/cayley_table.hpp"

namespace semiwork {

  enum class Verdict { yes, no, unknown };

  [[nodiscard]] std::string_view to_string(Verdict v) noexcept;

  // A total map from source elements to target elements. Holding a Morphism
  // does not mean it preserves products; use check_morphism.
  struct Morphism {
    CayleyTable        source;
    CayleyTable        target;
    std::vector<Index> map;
  };

  struct MorphismClass {
    bool                                is_morphism;
    // Lexicographically first pair with map(xy) != map(x) map(y).
    std::optional<std::pair<Index, Index>> violation;
    bool                                injective;
    bool                                surjective;

    [[nodiscard]] bool is_embedding() const noexcept {
      return is_morphism && injective;
    }
    [[nodiscard]] bool is_isomorphism() const noexcept {
      return is_morphism && injective && surjective;
    }
  };

  // Node = one attempted extension of a partial assignment (one candidate
  // image tried for one generator, one subsemigroup built, or one encoding
  // tried). An exhausted budget yields Unknown, never a false No.
  struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
  };

  // Throws ArgError when the map has the wrong length, RangeError for an entry
  // outside the target (the row of a RangeError is the source element).
  [[nodiscard]] MorphismClass check_morphism(Morphism const& m);

  struct MorphismSearch {
    // Sorted by map sequence.
    std::vector<Morphism> found;
    // False when the budget ran out before the search space was covered and
    // the limit was reached; `found` then holds what was found before that.
    bool          complete;
    std::uint64_t nodes;

    [[nodiscard]] Verdict verdict() const noexcept {
      return !found.empty() ? Verdict::yes : complete ? Verdict::no : Verdict::unknown;
    }
  };

  struct SearchOptions {
    // Stop after this many results; 0 means all.
    std::size_t  limit = 0;
    SearchBudget budget{};
    // Results, node counts and verdicts do not depend on this.
    unsigned workers = 1;
  };

  // A small generating sequence of `table`, chosen greedily: each step adds
  // the element that enlarges the generated subsemigroup most (ties to the
  // smaller index).
  [[nodiscard]] std::vector<Index> greedy_generators(CayleyTable const& table);

  // All injective morphisms S -> T (up to opts.limit). Images are chosen for a
  // greedy generating sequence of S; all other images are forced.
  [[nodiscard]] MorphismSearch find_embeddings(CayleyTable const&   source,
                                               CayleyTable const&   target,
                                               SearchOptions const& opts = {});

  // All morphisms S -> T, optionally only the surjective ones.
  [[nodiscard]] MorphismSearch find_morphisms(CayleyTable const&   source,
                                              CayleyTable const&   target,
                                              bool                 require_surjective,
                                              SearchOptions const& opts = {});

  // S is a homomorphic image of the subsemigroup `subsemigroup` of T;
  // map[i] is the image in S of subsemigroup[i].
  struct Division {
    std::vector<Index> subsemigroup;
    std::vector<Index> map;
  };

  struct DivisionResult {
    Verdict                 verdict;
    std::optional<Division> witness;
    std::uint64_t           nodes;
  };

  // Does S divide T? Subsemigroups of T are enumerated by number of
  // generators (deduplicated) and each one with at least |S| elements is
  // searched for a surjective morphism onto S.
  [[nodiscard]] DivisionResult divides(CayleyTable const& s,
                                       CayleyTable const& t,
                                       SearchBudget       budget  = {},
                                       unsigned           workers = 1);

  // Re-checks a division certificate from scratch.
  [[nodiscard]] bool verify_division(CayleyTable const& s,
                                     CayleyTable const& t,
                                     Division const&    d);

  // A binary operation on {0, ..., size-1}, not necessarily associative.
  struct FunctionTable {
    std::size_t        size;
    std::vector<Index> entries;  // row-major, entries[x * size + y] = g(x, y)

    [[nodiscard]] Index operator()(Index x, Index y) const noexcept {
      return entries[x * size + y];
    }
  };

  // Throws ArgError unless size >= 1 and entries has size^2 items,
  // RangeError for an entry >= size.
  void validate_function_table(FunctionTable const& g);

  struct Interpretation {
    std::vector<Index> encode;  // A -> S
    std::vector<Index> decode;  // S -> A
  };

  struct InterpretationResult {
    Verdict                       verdict;
    std::optional<Interpretation> witness;
    std::uint64_t                 nodes;
  };

  inline constexpr std::size_t max_interpretation_domain = 6;
  inline constexpr std::size_t max_interpretation_target = 12;

  // Finds encode: A -> S and decode: S -> A with
  // decode(encode(x) encode(y)) = g(x, y) for all x, y. encode need not be a
  // morphism. The first encode in lexicographic order wins; elements of S
  // that no product reaches decode to 0. Throws ArgError if |A| > 6 or
  // |S| > 12.
  [[nodiscard]] InterpretationResult find_interpretation(FunctionTable const& g,
                                                         CayleyTable const&   s,
                                                         SearchBudget         budget = {});

}  // namespace semiwork

#endif  // SEMIWORK_MORPHISM_HPP_
