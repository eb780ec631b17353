#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "semiwork/hierarchy.hpp"
#include "semiwork/universality.hpp"
#include "support.hpp"

using namespace semiwork;

namespace {
  // Small models: named tables plus random transformation semigroups.
  std::vector<CayleyTable> models() {
    std::vector<CayleyTable> out{make_cyclic(1),    make_cyclic(2),     make_cyclic(3),
                                 make_cyclic(8),    make_left_zero(2),  make_left_zero(5),
                                 make_flip_flop(),  test::t_n(2),
                                 direct_product(make_flip_flop(), make_cyclic(2)),
                                 direct_product(make_cyclic(2), make_cyclic(2)),
                                 direct_product(test::t_n(2), make_cyclic(2)),
                                 direct_product(make_left_zero(2), make_cyclic(2))};
    std::mt19937 rng(5);
    while (out.size() < 40) {
      std::vector<Transformation> gens{test::random_transformation(rng, 3),
                                       test::random_transformation(rng, 3)};
      auto const c = closure(GenSet(gens));
      if (c.order() <= 8) {
        out.push_back(c.table);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("full_transformation_monoid") {
  CHECK(full_transformation_monoid(1).order() == 1);
  CHECK(full_transformation_monoid(2).order() == 4);
  CHECK(full_transformation_monoid(3).order() == 27);
  CHECK(full_transformation_monoid(4).order() == 256);
  CHECK_THROWS_AS((void) full_transformation_monoid(0), ArgError);
}

TEST_CASE("is_universal examples") {
  auto const t2 = test::t_n(2);
  auto const v  = is_universal(t2, 2);
  CHECK(v.verdict == Verdict::yes);
  CHECK(v.mode == UniversalityMode::embed);
  CHECK(v.n == 2);
  REQUIRE(v.embedding);
  CHECK(verify_universality(t2, v));

  auto const ff = is_universal(make_flip_flop(), 2);
  CHECK(ff.verdict == Verdict::no);
  CHECK(ff.nodes == 0);
  CHECK_FALSE(ff.embedding);

  auto const t3 = test::t_n(3);
  auto const v3 = is_universal(t3, 2);
  CHECK(v3.verdict == Verdict::yes);
  CHECK(verify_universality(t3, v3));
  CHECK_FALSE(oracle::all_morphisms(test::raw(t2), test::raw(t3), true).empty());
}

TEST_CASE("is_universal argument checks") {
  CHECK_THROWS_AS((void) is_universal(make_cyclic(2), 0), ArgError);
  CHECK_THROWS_AS((void) is_universal(make_cyclic(2), 5), ArgError);
  CHECK_THROWS_AS((void) is_computer(make_cyclic(2), 0), ArgError);
  // allowed, and decided by cardinality alone
  auto const big = is_universal(make_cyclic(2), 5, UniversalityMode::embed, {{}, 1, true});
  CHECK(big.verdict == Verdict::no);
}

TEST_CASE("T_n implements itself") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const t = test::t_n(n);
    CHECK(is_universal(t, n).verdict == Verdict::yes);
    auto const c = is_computer(t, n);
    CHECK(c.verdict == Verdict::yes);
    CHECK(c.mode == UniversalityMode::divide);
    REQUIRE(c.division);
    CHECK(verify_universality(t, c));
  }
}

TEST_CASE("is_computer examples") {
  CHECK(is_computer(test::t_n(2), 2).verdict == Verdict::yes);
  CHECK(is_computer(make_cyclic(3), 2).verdict == Verdict::no);

  auto const product = direct_product(make_flip_flop(), make_cyclic(2));
  REQUIRE(product.order() == 6);
  // frozen from the brute-force division over all 2^6 subsets
  bool const oracle_says = oracle::divides(test::raw(test::t_n(2)), test::raw(product));
  CHECK_FALSE(oracle_says);
  auto const v = is_computer(product, 2);
  CHECK(v.verdict == Verdict::no);
}

TEST_CASE("verdicts agree with brute force on models of order <= 8, n = 2") {
  auto const t2  = test::t_n(2);
  auto const rt2 = test::raw(t2);
  for (auto const& m : models()) {
    CAPTURE(m.order());
    auto const rm        = test::raw(m);
    bool const embeds    = !oracle::all_morphisms(rt2, rm, true).empty();
    bool const divides_o = oracle::divides(rt2, rm);
    auto const e         = is_universal(m, 2);
    auto const d         = is_computer(m, 2);
    REQUIRE(e.verdict == (embeds ? Verdict::yes : Verdict::no));
    REQUIRE(d.verdict == (divides_o ? Verdict::yes : Verdict::no));
    if (e.verdict == Verdict::yes) {
      REQUIRE(d.verdict == Verdict::yes);
      REQUIRE(verify_universality(m, e));
    }
    if (d.verdict == Verdict::yes) {
      REQUIRE(verify_universality(m, d));
    }
  }
}

TEST_CASE("universality is inherited along embeddings") {
  auto const t2 = test::t_n(2);
  auto const t3 = test::t_n(3);
  REQUIRE_FALSE(find_embeddings(t2, t3).found.empty());
  CHECK(is_universal(t2, 2).verdict == Verdict::yes);
  CHECK(is_universal(t3, 2).verdict == Verdict::yes);
  CHECK(is_universal(direct_product(t3, make_cyclic(2)), 2).verdict == Verdict::yes);
}

TEST_CASE("budget and workers") {
  auto const t3 = test::t_n(3);
  auto const u  = is_universal(t3, 3, UniversalityMode::embed, {{3}, 1, false});
  CHECK(u.verdict == Verdict::unknown);
  CHECK_FALSE(verify_universality(t3, u));
  auto const one   = is_universal(t3, 2, UniversalityMode::embed, {{}, 1, false});
  auto const eight = is_universal(t3, 2, UniversalityMode::embed, {{}, 8, false});
  CHECK(one.verdict == eight.verdict);
  CHECK(one.nodes == eight.nodes);
  CHECK(one.embedding->map == eight.embedding->map);
}

TEST_CASE("verify_universality rejects a doctored witness") {
  auto const t2 = test::t_n(2);
  auto       v  = is_universal(t2, 2);
  REQUIRE(v.embedding);
  std::swap(v.embedding->map[0], v.embedding->map[1]);
  bool const still_morphism = check_morphism({v.embedding->source, t2, v.embedding->map}).is_morphism;
  CHECK(verify_universality(t2, v) == still_morphism);
  v.embedding->map.assign(4, 0);
  CHECK_FALSE(verify_universality(t2, v));
}
