#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "semiwork/automaton.hpp"
#include "semiwork/morphism.hpp"
#include "semiwork/representation.hpp"
#include "support.hpp"

using namespace semiwork;

namespace {
  Automaton flip_flop_automaton() {
    return Automaton(2, {Transformation({0, 1}), Transformation({0, 0}), Transformation({1, 1})},
                     {"read", "set0", "set1"});
  }

  Automaton cycle_automaton(std::size_t k) {
    return Automaton(k, {Transformation::cycle(k)});
  }

  // run() replayed through the transition semigroup's table.
  Index run_via_table(TransitionSemigroup const& ts, Index start, std::vector<Index> const& word) {
    if (word.empty()) {
      return start;
    }
    Index e = ts.letter_elements[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) {
      e = ts.closure.table(e, ts.letter_elements[word[i]]);
    }
    return ts.closure.elements[e](start);
  }

  std::vector<Index> random_word(std::mt19937& rng, std::size_t letters, std::size_t max_len) {
    std::vector<Index> w(rng() % (max_len + 1));
    for (auto& a : w) {
      a = static_cast<Index>(rng() % letters);
    }
    return w;
  }
}  // namespace

TEST_CASE("Automaton construction") {
  auto const a = flip_flop_automaton();
  CHECK(a.state_count() == 2);
  CHECK(a.letter_count() == 3);
  CHECK(a.letter(1) == Transformation({0, 0}));
  CHECK(cycle_automaton(3).letter_labels() == std::vector<std::string>{"a0"});
  CHECK_THROWS_AS(Automaton(2, {}), ArgError);
  CHECK_THROWS_AS(Automaton(2, {Transformation({0, 1, 2})}), DegreeMismatch);
  CHECK_THROWS_AS(Automaton(2, {Transformation({0, 1}), Transformation({1, 0})}, {"x", "x"}),
                  ArgError);
  CHECK_THROWS_AS(Automaton(2, {Transformation({0, 1})}, {"x", "y"}), ArgError);
}

TEST_CASE("flip-flop automaton gives the flip-flop") {
  auto const ts = transition_semigroup(flip_flop_automaton());
  auto const& t = ts.closure.table;
  REQUIRE(t.order() == 3);
  CHECK(ts.letter_elements == std::vector<Index>{0, 1, 2});
  auto const ff = make_flip_flop();
  CHECK_FALSE(find_embeddings(ff, t).found.empty());
  CHECK_FALSE(find_embeddings(t, ff).found.empty());
  CHECK(oracle::isomorphic(test::raw(t), oracle::flip_flop()));
  // read -> r, set0 -> s0, set1 -> s1
  CHECK(check_morphism({ff, t, ts.letter_elements}).is_isomorphism());
}

TEST_CASE("a single k-cycle letter gives Z_k") {
  for (std::size_t k : {2u, 3u, 5u}) {
    auto const ts = transition_semigroup(cycle_automaton(k));
    CHECK(ts.closure.order() == k);
    CHECK(oracle::isomorphic(test::raw(ts.closure.table), oracle::cyclic(static_cast<int>(k))));
    CHECK_FALSE(find_embeddings(make_cyclic(k), ts.closure.table).found.empty());
  }
}

TEST_CASE("single non-permutation letter gives a monogenic semigroup") {
  // 0 -> 1 -> 2 -> 2: index 2, period 1
  auto const ts = transition_semigroup(Automaton(3, {Transformation({1, 2, 2})}));
  CHECK(ts.closure.order() == 2);
  CHECK(oracle::monogenic_size(test::raw(ts.closure.table), 0) == 2);
}

TEST_CASE("identity letter gives the trivial semigroup; equal letters share an element") {
  auto const ts = transition_semigroup(Automaton(4, {Transformation::identity(4)}));
  CHECK(ts.closure.order() == 1);
  auto const dup = transition_semigroup(
      Automaton(2, {Transformation({1, 0}), Transformation({0, 0}), Transformation({1, 0})}));
  CHECK(dup.letter_elements[0] == dup.letter_elements[2]);
  CHECK(dup.letter_elements[0] != dup.letter_elements[1]);
}

TEST_CASE("run examples") {
  auto const ff = flip_flop_automaton();
  std::vector<Index> const set1_read{2, 0};
  CHECK(run(ff, 0, set1_read) == 1);
  CHECK(run(ff, 1, std::vector<Index>{}) == 1);
  CHECK(run(cycle_automaton(3), 0, std::vector<Index>{0, 0, 0}) == 0);
  CHECK(run(cycle_automaton(3), 0, std::vector<Index>{0}) == 1);
  CHECK_THROWS_AS((void) run(ff, 2, std::vector<Index>{}), IndexError);
  CHECK_THROWS_AS((void) run(ff, 0, std::vector<Index>{3}), IndexError);
}

TEST_CASE("run is an action and the table reproduces it") {
  std::mt19937           rng(99);
  std::vector<Automaton> fixtures{flip_flop_automaton(), cycle_automaton(3), cycle_automaton(5)};
  for (int i = 0; i < 4; ++i) {
    std::size_t const           n = 2 + i;
    std::vector<Transformation> letters;
    for (int k = 0; k < 2 + i % 2; ++k) {
      letters.push_back(test::random_transformation(rng, n));
    }
    fixtures.emplace_back(n, letters);
  }
  for (auto const& a : fixtures) {
    auto const ts = transition_semigroup(a);
    for (int trial = 0; trial < 1000; ++trial) {
      auto const start = static_cast<Index>(rng() % a.state_count());
      auto const u     = random_word(rng, a.letter_count(), 8);
      auto const v     = random_word(rng, a.letter_count(), 8);
      auto       uv    = u;
      uv.insert(uv.end(), v.begin(), v.end());
      REQUIRE(run(a, start, uv) == run(a, run(a, start, u), v));
      REQUIRE(run_via_table(ts, start, uv) == run(a, start, uv));
    }
  }
}

TEST_CASE("automaton of a right regular representation contains the table") {
  for (auto const& t : {make_flip_flop(), make_cyclic(4), make_left_zero(3), test::t_n(2)}) {
    auto const rep = right_regular_representation(t, true);
    Automaton  a(rep.images.degree(), rep.images.gens());
    auto const ts = transition_semigroup(a);
    auto const c  = check_morphism({t, ts.closure.table, ts.letter_elements});
    CHECK(c.is_embedding());
    CHECK(is_subsemigroup(ts.closure.table, ts.letter_elements));
  }
}
