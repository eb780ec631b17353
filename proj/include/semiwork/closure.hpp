#ifndef SEMIWORK_CLOSURE_HPP_
#define SEMIWORK_CLOSURE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "semiwork/cayley_table.hpp"
#include "semiwork/transformation.hpp"

namespace semiwork {

  // The semigroup generated by a GenSet, as a list of transformations and its
  // composition table.
  struct ClosureResult {
    std::size_t degree;
    // Distinct; the (deduplicated) generators first, then discovery order.
    std::vector<Transformation> elements;
    // table(i, j) is the index of compose(elements[i], elements[j]).
    CayleyTable table;
    // gen_indices[k] is the index of the k-th input generator in elements.
    std::vector<Index> gen_indices;
    // Row i, column k: index of compose(elements[i], generator k).
    std::vector<Index> right_cayley_graph;

    [[nodiscard]] std::size_t order() const noexcept {
      return elements.size();
    }
  };

  struct ClosureOptions {
    // Default: degree^degree, which always suffices.
    std::optional<std::size_t> max_size;
    // Degrees above 8 are refused unless this is set.
    bool     allow_large_degree = false;
    unsigned workers            = 1;
  };

  inline constexpr std::size_t max_default_degree = 8;

  // Breadth-first closure: discovered elements are processed in discovery
  // order and multiplied on the right by every generator; the table is then
  // filled row by row. Element order does not depend on `workers`.
  // Throws SizeExceeded when more than max_size elements would be produced,
  // ArgError for a degree above 8 without allow_large_degree.
  [[nodiscard]] ClosureResult closure(GenSet const& gens, ClosureOptions const& opts = {});

  // Index of `t` in `c.elements`, if present.
  [[nodiscard]] std::optional<Index> find_element(ClosureResult const& c,
                                                  Transformation const& t);

}  // namespace semiwork

#endif  // SEMIWORK_CLOSURE_HPP_
