#ifndef SEMIWORK_TESTS_SUPPORT_HPP_
#define SEMIWORK_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semiwork/cayley_table.hpp"
#include "semiwork/closure.hpp"
#include "semiwork/transformation.hpp"

namespace test {

  inline oracle::Table raw(semiwork::CayleyTable const& t) {
    return {t.entries().begin(), t.entries().end()};
  }

  inline oracle::Map raw(std::vector<semiwork::Index> const& m) {
    return {m.begin(), m.end()};
  }

  inline semiwork::CayleyTable table(oracle::Table const& t) {
    std::vector<semiwork::Index> e(t.begin(), t.end());
    return semiwork::validate_table(static_cast<std::size_t>(oracle::order(t)), e);
  }

  inline semiwork::CayleyTable t_n(std::size_t n) {
    return semiwork::closure(semiwork::make_tn_generators(n)).table;
  }

  inline std::string data(std::string const& name) {
    return std::string(SEMIWORK_DATA_DIR) + "/" + name;
  }

  inline semiwork::Transformation random_transformation(std::mt19937& rng, std::size_t degree) {
    std::uniform_int_distribution<semiwork::Index> pick(0, static_cast<semiwork::Index>(degree - 1));
    std::vector<semiwork::Index>                   img(degree);
    for (auto& v : img) {
      v = pick(rng);
    }
    return semiwork::Transformation(std::move(img));
  }

}  // namespace test

#endif  // SEMIWORK_TESTS_SUPPORT_HPP_
