#ifndef SEMIWORK_HIERARCHY_HPP_
#define SEMIWORK_HIERARCHY_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "semiwork/cayley_table.hpp"
#include "semiwork/closure.hpp"
#include "semiwork/morphism.hpp"

namespace semiwork {

  // Who changes whom: y influences x when composing x with y moves x, i.e.
  // table(x, y) != x.
  struct InfluenceRelation {
    std::size_t       order;
    std::vector<char> grid;  // grid[y * order + x]
    // (weak, strong): strong influences weak but not the other way around.
    std::vector<std::pair<Index, Index>> one_way;

    [[nodiscard]] bool influences(Index y, Index x) const noexcept {
      return grid[static_cast<std::size_t>(y) * order + x] != 0;
    }
  };

  [[nodiscard]] InfluenceRelation influence_relation(CayleyTable const& table);

  inline constexpr std::size_t default_product_cap = 10'000;

  // Componentwise composition; (s, t) has index s * |T| + t and label
  // "(s,t)". Throws SizeExceeded when |S| * |T| > cap.
  [[nodiscard]] CayleyTable direct_product(CayleyTable const& s,
                                           CayleyTable const& t,
                                           std::size_t        cap = default_product_cap);

  // The two-level cascade of `bottom` (acting on X) under `top` (acting on Y),
  // on the points X x Y with (x, y) at index x * |Y| + y. Generators:
  //   each top generator t:                 (x, y) -> (x, t(y))
  //   each y0 in Y and bottom generator s:  (x, y0) -> (s(x), y0), identity elsewhere
  // The identity transformation is added to a component's generators when
  // that component's element set lacks it.
  [[nodiscard]] ClosureResult wreath_product(ClosureResult const&  bottom,
                                             ClosureResult const&  top,
                                             ClosureOptions const& opts = {});

  // Whether `target` divides the cascade's semigroup.
  [[nodiscard]] DivisionResult cascade_emulates(CayleyTable const&   target,
                                                ClosureResult const& cascade,
                                                SearchBudget         budget  = {},
                                                unsigned             workers = 1);

  // The closure of the right regular representation of `table` (identity point
  // adjoined only when the table has no identity).
  [[nodiscard]] ClosureResult as_transformations(CayleyTable const&    table,
                                                 ClosureOptions const& opts = {});

}  // namespace semiwork

#endif  // SEMIWORK_HIERARCHY_HPP_
