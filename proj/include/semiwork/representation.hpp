#ifndef SEMIWORK_REPRESENTATION_HPP_
#define SEMIWORK_REPRESENTATION_HPP_

#include "semiwork/cayley_table.hpp"
#include "semiwork/transformation.hpp"

namespace semiwork {

  // Events as transformations of states: element y acts on the points by
  // p -> p * y.
  struct RegularRepresentation {
    // images[y] is the transformation of element y; one per element, in
    // element order (so duplicates are possible without an adjoined identity).
    GenSet images;
    // An extra point standing for the identity was added; it is the last
    // point and is sent to y by element y.
    bool adjoined_identity;
    // Distinct elements have distinct transformations.
    bool faithful;
  };

  // The right regular representation. The identity point is adjoined when
  // `adjoin_identity` is set or the table has no two-sided identity; the
  // result is then always faithful.
  [[nodiscard]] RegularRepresentation
  right_regular_representation(CayleyTable const& table, bool adjoin_identity = false);

}  // namespace semiwork

#endif  // SEMIWORK_REPRESENTATION_HPP_
