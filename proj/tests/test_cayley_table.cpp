#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "semiwork/cayley_table.hpp"
#include "semiwork/closure.hpp"
#include "semiwork/representation.hpp"
#include "support.hpp"

using namespace semiwork;

TEST_CASE("validate_table accepts the flip-flop and the trivial table") {
  std::vector<Index> ff{0, 1, 2, 1, 1, 2, 2, 1, 2};
  auto const         t = validate_table(3, ff, {"r", "s0", "s1"});
  CHECK(t == make_flip_flop());
  CHECK(t.order() == 3);
  CHECK(validate_table(1, std::vector<Index>{0}).order() == 1);
  CHECK(validate_table(1, std::vector<Index>{0}).label(0) == "e0");
}

TEST_CASE("validate_table reports the lexicographically first violating triple") {
  auto mutated = oracle::flip_flop();
  mutated[0 * 3 + 1] = 0;  // r then s0 := r
  auto const expected = oracle::first_assoc_violation(mutated);
  REQUIRE(expected);
  // frozen from the 27-triple scan: (r, s1, s0)
  CHECK(*expected == std::array<int, 3>{0, 2, 1});
  try {
    (void) test::table(mutated);
    FAIL("expected AssocError");
  } catch (AssocError const& e) {
    CHECK(e.x == 0);
    CHECK(e.y == 2);
    CHECK(e.z == 1);
  }
}

TEST_CASE("validate_table input errors") {
  CHECK_THROWS_AS((void) validate_table(0, std::vector<Index>{}), ArgError);
  CHECK_THROWS_AS((void) validate_table(2, std::vector<Index>{0, 0, 0}), ArgError);
  CHECK_THROWS_AS((void) validate_table(2, std::vector<Index>{0, 0, 0, 0}, {"a", "a"}), ArgError);
  CHECK_THROWS_AS((void) validate_table(2, std::vector<Index>{0, 0, 0, 0}, {"a"}), ArgError);
  try {
    std::vector<std::int64_t> e{0, 1, 1, -1};
    (void) validate_table(2, e);
    FAIL("expected RangeError");
  } catch (RangeError const& e) {
    CHECK(e.row == 1);
    CHECK(e.col == 1);
    CHECK(e.value == -1);
  }
  try {
    (void) validate_table(2, std::vector<Index>{0, 2, 1, 0});
    FAIL("expected RangeError");
  } catch (RangeError const& e) {
    CHECK(e.row == 0);
    CHECK(e.col == 1);
    CHECK(e.value == 2);
  }
}

TEST_CASE("check_associativity examples") {
  CHECK_FALSE(check_associativity(make_cyclic(3)));
  CHECK_FALSE(check_associativity(make_cyclic(1)));
  CHECK_FALSE(check_associativity(make_left_zero(2)));
  std::vector<Index> bad{1, 0, 0, 0};  // 0*0 = 1, everything else 0
  auto const         w = check_associativity(2, bad);
  REQUIRE(w);
  auto const o = oracle::first_assoc_violation({1, 0, 0, 0});
  CHECK(w->x == static_cast<Index>((*o)[0]));
  CHECK(w->y == static_cast<Index>((*o)[1]));
  CHECK(w->z == static_cast<Index>((*o)[2]));
}

TEST_CASE("make_flip_flop is the 1-bit memory") {
  auto const t = make_flip_flop();
  REQUIRE(t.labels() == std::vector<std::string>{"r", "s0", "s1"});
  Index const r = 0, s0 = 1, s1 = 2;
  for (Index x = 0; x < 3; ++x) {
    CHECK(t(r, x) == x);
    CHECK(t(x, r) == x);
    CHECK(t(x, x) == x);
  }
  CHECK(t(s0, s1) == s1);
  CHECK(t(s1, s0) == s0);
  CHECK(test::raw(t) == oracle::flip_flop());
}

TEST_CASE("make_cyclic") {
  CHECK(test::raw(make_cyclic(3)) == oracle::Table{0, 1, 2, 1, 2, 0, 2, 0, 1});
  CHECK(make_cyclic(3).labels() == std::vector<std::string>{"+0", "+1", "+2"});
  CHECK(make_cyclic(1).order() == 1);
  CHECK(make_cyclic(4)(3, 2) == 1);
  CHECK_THROWS_AS((void) make_cyclic(0), ArgError);
  for (std::size_t n = 1; n <= 64; ++n) {
    auto const z = make_cyclic(n);
    CHECK_NOTHROW((void) validate_table(n, std::vector<Index>(z.entries().begin(), z.entries().end())));
  }
}

TEST_CASE("element_info") {
  auto ff = element_info(make_flip_flop());
  CHECK(ff[0].is_identity);
  CHECK_FALSE(ff[1].is_identity);
  CHECK_FALSE(ff[2].is_identity);
  for (auto const& i : ff) {
    CHECK(i.is_idempotent);
  }
  auto z3 = element_info(make_cyclic(3));
  CHECK(z3[0].is_identity);
  CHECK(z3[0].is_idempotent);
  CHECK_FALSE(z3[1].is_idempotent);
  CHECK_FALSE(z3[2].is_idempotent);
  auto lz = element_info(make_left_zero(2));
  for (auto const& i : lz) {
    CHECK(i.is_idempotent);
    CHECK_FALSE(i.is_identity);
    CHECK(i.is_right_identity);  // x y = x
    CHECK_FALSE(i.is_left_identity);
  }
}

TEST_CASE("is_subsemigroup") {
  std::vector<Index> writes{1, 2};
  CHECK(is_subsemigroup(make_flip_flop(), writes));
  std::vector<Index> zero_one{0, 1};
  CHECK_FALSE(is_subsemigroup(make_cyclic(3), zero_one));
  std::vector<Index> all{0, 1, 2};
  CHECK(is_subsemigroup(make_cyclic(3), all));
  CHECK(is_subsemigroup(make_flip_flop(), all));
  std::vector<Index> bad{3};
  CHECK_THROWS_AS((void) is_subsemigroup(make_flip_flop(), bad), IndexError);
}

TEST_CASE("right_regular_representation examples") {
  SUBCASE("Z_3: identity, the 3-cycle and its square") {
    auto const rep = right_regular_representation(make_cyclic(3));
    CHECK_FALSE(rep.adjoined_identity);
    CHECK(rep.faithful);
    // column y of the table: p -> p + y mod 3
    CHECK(rep.images[0].image() == std::vector<Index>{0, 1, 2});
    CHECK(rep.images[1].image() == std::vector<Index>{1, 2, 0});
    CHECK(rep.images[2].image() == std::vector<Index>{2, 0, 1});
  }
  SUBCASE("flip-flop: identity and the two constants") {
    auto const rep = right_regular_representation(make_flip_flop());
    CHECK_FALSE(rep.adjoined_identity);
    CHECK(rep.faithful);
    CHECK(rep.images[0].image() == std::vector<Index>{0, 1, 2});
    CHECK(rep.images[1].image() == std::vector<Index>{1, 1, 1});
    CHECK(rep.images[2].image() == std::vector<Index>{2, 2, 2});
  }
  SUBCASE("left zero: not faithful without the adjoined point") {
    auto const plain = right_regular_representation(make_left_zero(2), false);
    // no identity, so the point is adjoined anyway
    CHECK(plain.adjoined_identity);
    CHECK(plain.faithful);
    CHECK(plain.images[0].image() == std::vector<Index>{0, 1, 0});
    CHECK(plain.images[1].image() == std::vector<Index>{0, 1, 1});
  }
}

TEST_CASE("left-zero columns collapse to the identity on the original points") {
  // Restricted to the two original points both elements act as the identity.
  auto const rep = right_regular_representation(make_left_zero(2), true);
  for (Index y = 0; y < 2; ++y) {
    CHECK(rep.images[y](0) == 0);
    CHECK(rep.images[y](1) == 1);
  }
}

TEST_CASE("exhaustive order <= 3: faithful representation, unique identity") {
  std::size_t tables = 0;
  for (int n = 1; n <= 3; ++n) {
    for (auto const& raw : oracle::all_associative_tables(n)) {
      ++tables;
      auto const t   = test::table(raw);
      auto const rep = right_regular_representation(t, true);
      REQUIRE(rep.faithful);
      auto const c = closure(rep.images);
      for (Index x = 0; x < t.order(); ++x) {
        for (Index y = 0; y < t.order(); ++y) {
          REQUIRE(c.gen_indices[t(x, y)] == c.table(c.gen_indices[x], c.gen_indices[y]));
        }
      }
      int identities = 0;
      for (auto const& i : element_info(t)) {
        identities += i.is_identity;
        REQUIRE(i.is_identity == (i.is_left_identity && i.is_right_identity));
      }
      REQUIRE(identities <= 1);
    }
  }
  // 1 + 8 + 113 labelled semigroups of order 1, 2, 3
  CHECK(tables == 122);
}

TEST_CASE("Light's test agrees with the naive scan on every table of order <= 3") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Index> t(static_cast<std::size_t>(n * n), 0);
    while (true) {
      auto const naive = check_associativity(n, t, AssocMode::naive);
      auto const light = check_associativity(n, t, AssocMode::light);
      REQUIRE(naive.has_value() == light.has_value());
      if (light) {
        auto const [x, y, z] = *light;
        REQUIRE(t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]);
      }
      std::size_t i = 0;
      while (i < t.size() && t[i] == static_cast<Index>(n - 1)) {
        t[i++] = 0;
      }
      if (i == t.size()) {
        break;
      }
      ++t[i];
    }
  }
}

TEST_CASE("Light's test on order 4: every associative table and each single-entry mutation") {
  for (int n = 1; n <= 3; ++n) {
    auto a = oracle::associative_tables_backtrack(n);
    auto b = oracle::all_associative_tables(n);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    REQUIRE(a == b);
  }
  auto const tables = oracle::associative_tables_backtrack(4);
  CHECK(tables.size() == 3492);
  std::size_t rejected = 0;
  for (auto const& raw : tables) {
    std::vector<Index> t(raw.begin(), raw.end());
    REQUIRE_FALSE(check_associativity(4, t, AssocMode::light));
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto const keep = t[i];
      for (Index v = 0; v < 4; ++v) {
        if (v == keep) {
          continue;
        }
        t[i]             = v;
        auto const naive = check_associativity(4, t, AssocMode::naive);
        auto const light = check_associativity(4, t, AssocMode::light);
        REQUIRE(naive.has_value() == light.has_value());
        rejected += naive.has_value();
      }
      t[i] = keep;
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("Light's test agrees with the naive scan on random tables of order <= 6") {
  std::mt19937 rng(20240501);
  int          associative = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::size_t        n = 1 + trial % 6;
    std::vector<Index> t;
    if (trial % 3 == 0) {
      // an associative table: a random transformation semigroup, if small
      std::vector<Transformation> gens{test::random_transformation(rng, 3),
                                       test::random_transformation(rng, 3)};
      auto const c = closure(GenSet(gens));
      n = c.order();
      t.assign(c.table.entries().begin(), c.table.entries().end());
      if (trial % 2 == 0 && n > 1) {
        // ... possibly with one entry changed
        std::uniform_int_distribution<std::size_t> pos(0, t.size() - 1);
        t[pos(rng)] = static_cast<Index>(rng() % n);
      }
    } else {
      t.resize(n * n);
      for (auto& v : t) {
        v = static_cast<Index>(rng() % n);
      }
    }
    auto const naive = check_associativity(n, t, AssocMode::naive);
    auto const light = check_associativity(n, t, AssocMode::light);
    REQUIRE(naive.has_value() == light.has_value());
    associative += !naive;
  }
  CHECK(associative > 500);
}

TEST_CASE("parallel associativity scan reports the same witness") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t const  n = 20 + trial % 7;
    std::vector<Index> t(n * n);
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = static_cast<Index>(i % n == 0 ? i / n : rng() % n);
    }
    if (trial % 2 == 0) {
      // left-zero, mutated deep inside
      for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = static_cast<Index>(i / n);
      }
      t[(n - 3) * n + 5] = 1;
    }
    auto const seq = check_associativity(n, t, AssocMode::naive, 1);
    for (unsigned w : {2u, 8u}) {
      CHECK(check_associativity(n, t, AssocMode::naive, w) == seq);
    }
  }
}

TEST_CASE("subtable") {
  std::vector<Index> writes{1, 2};
  auto const         sub = subtable(make_flip_flop(), writes);
  CHECK(sub.order() == 2);
  CHECK(sub.labels() == std::vector<std::string>{"s0", "s1"});
  CHECK(test::raw(sub) == oracle::Table{0, 1, 0, 1});
  std::vector<Index> open{1, 2, 0, 1};
  CHECK_THROWS_AS((void) subtable(make_flip_flop(), open), ArgError);
}
