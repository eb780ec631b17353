#ifndef SEMIWORK_ERRORS_HPP_
#define SEMIWORK_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semiwork {

  // Dense 0-based element / point index.
  using Index = std::uint32_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A table entry lies outside [0, order).
  class RangeError : public Error {
   public:
    RangeError(std::size_t row, std::size_t col, std::int64_t value);

    std::size_t  row;
    std::size_t  col;
    std::int64_t value;
  };

  // (x y) z != x (y z); the triple is the lexicographically first violation.
  class AssocError : public Error {
   public:
    AssocError(Index x, Index y, Index z);

    Index x;
    Index y;
    Index z;
  };

  class ArgError : public Error {
   public:
    using Error::Error;
  };

  class DegreeMismatch : public Error {
   public:
    DegreeMismatch(std::size_t expected, std::size_t actual);

    std::size_t expected;
    std::size_t actual;
  };

  class SizeExceeded : public Error {
   public:
    explicit SizeExceeded(std::size_t limit);

    std::size_t limit;
  };

  class IndexError : public Error {
   public:
    using Error::Error;
  };

}  // namespace semiwork

#endif  // SEMIWORK_ERRORS_HPP_
