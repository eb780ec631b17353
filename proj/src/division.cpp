#include <set>
#include <string>

#include "generated.hpp"
#include "semiwork/morphism.hpp"

namespace semiwork {

  namespace {
    struct Sub {
      std::vector<char>  members;
      std::vector<Index> gens;
    };

    std::vector<Index> sorted_members(std::vector<char> const& members) {
      std::vector<Index> out;
      for (Index i = 0; i < members.size(); ++i) {
        if (members[i]) {
          out.push_back(i);
        }
      }
      return out;
    }
  }  // namespace

  DivisionResult divides(CayleyTable const& s,
                         CayleyTable const& t,
                         SearchBudget       budget,
                         unsigned           workers) {
    if (s.order() > t.order()) {
      return {Verdict::no, std::nullopt, 0};
    }
    std::uint64_t                 nodes = 0;
    std::set<std::vector<char>>   seen;
    std::vector<Sub>              level;
    std::optional<DivisionResult> decided;

    auto unknown = [&] { return DivisionResult{Verdict::unknown, std::nullopt, budget.max_nodes}; };

    // Returns true once the answer is settled.
    auto visit = [&](std::vector<char> members, std::size_t size, std::vector<Index> gens,
                     std::vector<Sub>& next) {
      if (!seen.insert(members).second) {
        return false;
      }
      if (size >= s.order()) {
        auto const sub   = sorted_members(members);
        auto const table = subtable(t, sub);
        auto       found = find_morphisms(
            table, s, true, {1, {budget.max_nodes - nodes}, workers});
        nodes += found.nodes;
        if (!found.found.empty()) {
          decided = DivisionResult{
              Verdict::yes, Division{sub, std::move(found.found.front().map)}, nodes};
          return true;
        }
        if (!found.complete) {
          decided = unknown();
          return true;
        }
      }
      next.push_back(Sub{std::move(members), std::move(gens)});
      return false;
    };

    auto tick = [&] {
      if (++nodes > budget.max_nodes) {
        decided = unknown();
        return false;
      }
      return true;
    };

    for (Index x = 0; x < t.order(); ++x) {
      if (!tick()) {
        return *decided;
      }
      std::vector<Index> gens{x};
      auto [members, size] = detail::generated_by(t, std::vector<char>(t.order(), 0), gens);
      if (visit(std::move(members), size, std::move(gens), level)) {
        return *decided;
      }
    }
    while (!level.empty()) {
      std::vector<Sub> next;
      for (auto const& u : level) {
        for (Index x = 0; x < t.order(); ++x) {
          if (u.members[x]) {
            continue;
          }
          if (!tick()) {
            return *decided;
          }
          auto gens = u.gens;
          gens.push_back(x);
          auto [members, size] = detail::generated_by(t, u.members, gens);
          if (visit(std::move(members), size, std::move(gens), next)) {
            return *decided;
          }
        }
      }
      level = std::move(next);
    }
    return {Verdict::no, std::nullopt, nodes};
  }

  bool verify_division(CayleyTable const& s, CayleyTable const& t, Division const& d) {
    if (d.subsemigroup.empty() || d.map.size() != d.subsemigroup.size()) {
      return false;
    }
    std::set<Index> distinct(d.subsemigroup.begin(), d.subsemigroup.end());
    if (distinct.size() != d.subsemigroup.size() || *distinct.rbegin() >= t.order()
        || !is_subsemigroup(t, d.subsemigroup)) {
      return false;
    }
    for (Index v : d.map) {
      if (v >= s.order()) {
        return false;
      }
    }
    auto const cls = check_morphism({subtable(t, d.subsemigroup), s, d.map});
    return cls.is_morphism && cls.surjective;
  }

}  // namespace semiwork
