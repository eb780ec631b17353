#include <limits>
#include <string>

#include "semiwork/morphism.hpp"

namespace semiwork {

  InterpretationResult find_interpretation(FunctionTable const& g,
                                           CayleyTable const&   s,
                                           SearchBudget         budget) {
    validate_function_table(g);
    if (g.size > max_interpretation_domain) {
      throw ArgError("function domain of size " + std::to_string(g.size)
                     + " exceeds the cap of "
                     + std::to_string(max_interpretation_domain));
    }
    if (s.order() > max_interpretation_target) {
      throw ArgError("semigroup of order " + std::to_string(s.order())
                     + " exceeds the cap of "
                     + std::to_string(max_interpretation_target));
    }
    constexpr Index    unset = std::numeric_limits<Index>::max();
    auto const         a     = g.size;
    auto const         n     = s.order();
    std::vector<Index> encode(a, 0);
    std::vector<Index> decode(n);
    std::uint64_t      nodes = 0;

    while (true) {
      if (++nodes > budget.max_nodes) {
        return {Verdict::unknown, std::nullopt, budget.max_nodes};
      }
      std::fill(decode.begin(), decode.end(), unset);
      bool ok = true;
      for (Index x = 0; x < a && ok; ++x) {
        for (Index y = 0; y < a; ++y) {
          Index const p = s(encode[x], encode[y]);
          if (decode[p] == unset) {
            decode[p] = g(x, y);
          } else if (decode[p] != g(x, y)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        for (auto& d : decode) {
          if (d == unset) {
            d = 0;
          }
        }
        return {Verdict::yes, Interpretation{encode, decode}, nodes};
      }
      // Next encode in lexicographic order (last position fastest).
      std::size_t i = a;
      while (i > 0 && encode[i - 1] + 1 == n) {
        encode[--i] = 0;
      }
      if (i == 0) {
        return {Verdict::no, std::nullopt, nodes};
      }
      ++encode[i - 1];
    }
  }

}  // namespace semiwork
