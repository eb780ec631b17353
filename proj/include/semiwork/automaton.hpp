#ifndef SEMIWORK_AUTOMATON_HPP_
#define SEMIWORK_AUTOMATON_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "semiwork/closure.hpp"
#include "semiwork/transformation.hpp"

namespace semiwork {

  // A deterministic complete automaton without initial, accepting or output
  // states: each letter is a transformation of the states.
  class Automaton {
   public:
    // Throws ArgError on no letters or bad labels, DegreeMismatch when a letter
    // does not act on state_count states.
    Automaton(std::size_t                 state_count,
              std::vector<Transformation> delta,
              std::vector<std::string>    letter_labels = {});

    [[nodiscard]] std::size_t state_count() const noexcept {
      return _states;
    }
    [[nodiscard]] std::size_t letter_count() const noexcept {
      return _delta.size();
    }
    [[nodiscard]] Transformation const& letter(Index a) const {
      return _delta.at(a);
    }
    [[nodiscard]] std::vector<Transformation> const& delta() const noexcept {
      return _delta;
    }
    // Defaults "a0", "a1", ...
    [[nodiscard]] std::vector<std::string> const& letter_labels() const noexcept {
      return _labels;
    }

   private:
    std::size_t                 _states;
    std::vector<Transformation> _delta;
    std::vector<std::string>    _labels;
  };

  struct TransitionSemigroup {
    ClosureResult closure;
    // letter_elements[a] is the element of letter a; equal letters share one.
    std::vector<Index> letter_elements;
  };

  [[nodiscard]] TransitionSemigroup transition_semigroup(Automaton const&      a,
                                                         ClosureOptions const& opts = {});

  // The state reached from `start` reading `word` left to right. Throws
  // IndexError on a bad state or letter.
  [[nodiscard]] Index run(Automaton const& a, Index start, std::span<const Index> word);

}  // namespace semiwork

#endif  // SEMIWORK_AUTOMATON_HPP_
