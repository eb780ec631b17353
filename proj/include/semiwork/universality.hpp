#ifndef SEMIWORK_UNIVERSALITY_HPP_
#define SEMIWORK_UNIVERSALITY_HPP_

#include <cstddef>
#include <optional>

#include "semiwork/cayley_table.hpp"
#include "semiwork/morphism.hpp"

namespace semiwork {

  enum class UniversalityMode {
    // T_n embeds into the model.
    embed,
    // T_n divides the model (homomorphic image of a subsemigroup).
    divide
  };

  struct UniversalityVerdict {
    std::size_t             n;
    UniversalityMode        mode;
    Verdict                 verdict;
    std::optional<Morphism> embedding;  // mode == embed, verdict == yes
    std::optional<Division> division;   // mode == divide, verdict == yes
    std::uint64_t           nodes;
  };

  struct UniversalityOptions {
    SearchBudget budget{};
    unsigned     workers = 1;
    // Degrees above 4 are refused unless this is set.
    bool allow_large_degree = false;
  };

  inline constexpr std::size_t max_default_universality_degree = 4;

  // The full transformation monoid on n points as a table (closure of
  // make_tn_generators(n)).
  [[nodiscard]] CayleyTable full_transformation_monoid(std::size_t n,
                                                       bool allow_large_degree = false);

  // Does `model` implement T_n? Embed mode answers No without search when
  // model.order() < n^n. Throws ArgError on n = 0, or n > 4 without
  // allow_large_degree.
  [[nodiscard]] UniversalityVerdict is_universal(CayleyTable const&         model,
                                                 std::size_t                n,
                                                 UniversalityMode           mode = UniversalityMode::embed,
                                                 UniversalityOptions const& opts = {});

  // is_universal in divide mode.
  [[nodiscard]] UniversalityVerdict is_computer(CayleyTable const&         model,
                                                std::size_t                n,
                                                UniversalityOptions const& opts = {});

  // Re-checks the witness carried by a Yes verdict against model and T_n.
  [[nodiscard]] bool verify_universality(CayleyTable const&         model,
                                         UniversalityVerdict const& v);

}  // namespace semiwork

#endif  // SEMIWORK_UNIVERSALITY_HPP_
