#include "semiwork/representation.hpp"

#include <set>

namespace semiwork {

  RegularRepresentation right_regular_representation(CayleyTable const& table,
                                                     bool               adjoin_identity) {
    auto const n      = table.order();
    bool const adjoin = adjoin_identity || !identity_element(table).has_value();
    auto const degree = adjoin ? n + 1 : n;

    std::vector<Transformation> images;
    images.reserve(n);
    for (Index y = 0; y < n; ++y) {
      std::vector<Index> img(degree);
      for (Index p = 0; p < n; ++p) {
        img[p] = table(p, y);
      }
      if (adjoin) {
        img[n] = y;
      }
      images.emplace_back(std::move(img));
    }
    std::set<Transformation> distinct(images.begin(), images.end());
    bool const faithful = distinct.size() == images.size();
    return RegularRepresentation{GenSet(std::move(images)), adjoin, faithful};
  }

}  // namespace semiwork
