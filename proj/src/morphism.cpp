#include "semiwork/morphism.hpp"

#include <string>

#include "generated.hpp"

namespace semiwork {

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::yes:
        return "yes";
      case Verdict::no:
        return "no";
      case Verdict::unknown:
        break;
    }
    return "unknown";
  }

  MorphismClass check_morphism(Morphism const& m) {
    auto const& s = m.source;
    auto const& t = m.target;
    if (m.map.size() != s.order()) {
      throw ArgError("map has " + std::to_string(m.map.size())
                     + " entries, source has order " + std::to_string(s.order()));
    }
    for (std::size_t i = 0; i < m.map.size(); ++i) {
      if (m.map[i] >= t.order()) {
        throw RangeError(i, 0, m.map[i]);
      }
    }
    MorphismClass out{true, std::nullopt, true, true};
    for (Index x = 0; x < s.order() && out.is_morphism; ++x) {
      for (Index y = 0; y < s.order(); ++y) {
        if (m.map[s(x, y)] != t(m.map[x], m.map[y])) {
          out.is_morphism = false;
          out.violation   = std::pair{x, y};
          break;
        }
      }
    }
    std::vector<char> hit(t.order(), 0);
    std::size_t       distinct = 0;
    for (Index v : m.map) {
      if (hit[v]) {
        out.injective = false;
      } else {
        hit[v] = 1;
        ++distinct;
      }
    }
    out.surjective = distinct == t.order();
    return out;
  }

  std::vector<Index> greedy_generators(CayleyTable const& table) {
    auto const         n = table.order();
    std::vector<Index> gens;
    std::vector<char>  known(n, 0);
    std::size_t        known_size = 0;
    while (known_size < n) {
      Index             best = 0;
      std::vector<char> best_set;
      std::size_t       best_size = 0;
      for (Index x = 0; x < n; ++x) {
        if (known[x]) {
          continue;
        }
        gens.push_back(x);
        auto [set, size] = detail::generated_by(table, known, gens);
        gens.pop_back();
        if (size > best_size) {
          best      = x;
          best_size = size;
          best_set  = std::move(set);
        }
      }
      gens.push_back(best);
      known      = std::move(best_set);
      known_size = best_size;
    }
    return gens;
  }

  void validate_function_table(FunctionTable const& g) {
    if (g.size == 0) {
      throw ArgError("function table must have at least one element");
    }
    if (g.entries.size() != g.size * g.size) {
      throw ArgError("expected " + std::to_string(g.size * g.size)
                     + " entries, got " + std::to_string(g.entries.size()));
    }
    for (std::size_t i = 0; i < g.entries.size(); ++i) {
      if (g.entries[i] >= g.size) {
        throw RangeError(i / g.size, i % g.size, g.entries[i]);
      }
    }
  }

}  // namespace semiwork
