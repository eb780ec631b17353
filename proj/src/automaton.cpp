#include "semiwork/automaton.hpp"

#include <set>

namespace semiwork {

  Automaton::Automaton(std::size_t                 state_count,
                       std::vector<Transformation> delta,
                       std::vector<std::string>    letter_labels)
      : _states(state_count), _delta(std::move(delta)), _labels(std::move(letter_labels)) {
    if (_states == 0) {
      throw ArgError("an automaton needs at least one state");
    }
    if (_delta.empty()) {
      throw ArgError("an automaton needs at least one letter");
    }
    for (auto const& t : _delta) {
      if (t.degree() != _states) {
        throw DegreeMismatch(_states, t.degree());
      }
    }
    if (_labels.empty()) {
      for (std::size_t i = 0; i < _delta.size(); ++i) {
        _labels.push_back("a" + std::to_string(i));
      }
    }
    if (_labels.size() != _delta.size()) {
      throw ArgError("expected " + std::to_string(_delta.size()) + " letter labels");
    }
    if (std::set<std::string>(_labels.begin(), _labels.end()).size() != _labels.size()) {
      throw ArgError("letter labels must be distinct");
    }
  }

  TransitionSemigroup transition_semigroup(Automaton const& a, ClosureOptions const& opts) {
    auto c       = closure(GenSet(a.delta()), opts);
    auto letters = c.gen_indices;
    return {std::move(c), std::move(letters)};
  }

  Index run(Automaton const& a, Index start, std::span<const Index> word) {
    if (start >= a.state_count()) {
      throw IndexError("state " + std::to_string(start) + " out of range");
    }
    Index state = start;
    for (Index letter : word) {
      if (letter >= a.letter_count()) {
        throw IndexError("letter " + std::to_string(letter) + " out of range");
      }
      state = a.letter(letter)(state);
    }
    return state;
  }

}  // namespace semiwork
