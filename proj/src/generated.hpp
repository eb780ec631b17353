#ifndef SEMIWORK_SRC_GENERATED_HPP_
#define SEMIWORK_SRC_GENERATED_HPP_

#include <span>
#include <utility>
#include <vector>

#include "semiwork/cayley_table.hpp"

namespace semiwork::detail {

  // Membership flags and size of the subsemigroup generated by `seed` (a
  // subsemigroup, possibly empty, flagged by 1s) together with `gens`, where
  // every element of `seed` is a product of `gens`.
  inline std::pair<std::vector<char>, std::size_t>
  generated_by(CayleyTable const&     t,
               std::vector<char>      seed,
               std::span<const Index> gens) {
    std::vector<Index> queue;
    for (Index x = 0; x < seed.size(); ++x) {
      if (seed[x]) {
        queue.push_back(x);
      }
    }
    for (Index g : gens) {
      if (!seed[g]) {
        seed[g] = 1;
        queue.push_back(g);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Index g : gens) {
        Index const p = t(queue[i], g);
        if (!seed[p]) {
          seed[p] = 1;
          queue.push_back(p);
        }
      }
    }
    return {std::move(seed), queue.size()};
  }

}  // namespace semiwork::detail

#endif  // SEMIWORK_SRC_GENERATED_HPP_
