#ifndef SEMIWORK_TRANSFORMATION_HPP_
#define SEMIWORK_TRANSFORMATION_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "semiwork/errors.hpp"

namespace semiwork {

  // A total self-map of the points {0, ..., degree - 1}.
  class Transformation {
   public:
    // Throws ArgError if `image` is empty or has an entry >= image.size().
    explicit Transformation(std::vector<Index> image);

    static Transformation identity(std::size_t degree);
    static Transformation constant(std::size_t degree, Index value);
    // Swaps a and b, fixes everything else.
    static Transformation transposition(std::size_t degree, Index a, Index b);
    // i -> i + 1 mod degree.
    static Transformation cycle(std::size_t degree);
    // from -> to, everything else fixed.
    static Transformation collapsing(std::size_t degree, Index from, Index to);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _image.size();
    }

    [[nodiscard]] Index operator()(Index p) const noexcept {
      return _image[p];
    }

    [[nodiscard]] std::vector<Index> const& image() const noexcept {
      return _image;
    }

    // "[1,0,2]"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Transformation const&, Transformation const&) = default;
    friend auto operator<=>(Transformation const&, Transformation const&) = default;

   private:
    std::vector<Index> _image;
  };

  // "x then y": the result sends p to y(x(p)). Throws DegreeMismatch.
  [[nodiscard]] Transformation compose(Transformation const& x,
                                       Transformation const& y);

  [[nodiscard]] bool is_permutation(Transformation const& t);

  // Generators on a common point set. Duplicates are allowed; see
  // has_duplicates().
  class GenSet {
   public:
    // Throws ArgError when empty, DegreeMismatch on mixed degrees.
    explicit GenSet(std::vector<Transformation> gens);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _gens.front().degree();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _gens.size();
    }

    [[nodiscard]] Transformation const& operator[](std::size_t i) const {
      return _gens[i];
    }

    [[nodiscard]] std::vector<Transformation> const& gens() const noexcept {
      return _gens;
    }

    [[nodiscard]] bool has_duplicates() const noexcept {
      return _has_duplicates;
    }

   private:
    std::vector<Transformation> _gens;
    bool                        _has_duplicates;
  };

  // Generators of the full transformation monoid on n points:
  // n >= 3: transposition (0 1), the cycle i -> i+1, collapsing 0 -> 1;
  // n == 2: transposition, collapsing 0 -> 1; n == 1: the identity.
  // Throws ArgError on n = 0.
  [[nodiscard]] GenSet make_tn_generators(std::size_t n);

  struct TransformationHash {
    std::size_t operator()(std::span<const Index> image) const noexcept;
    std::size_t operator()(Transformation const& t) const noexcept {
      return (*this)(std::span<const Index>(t.image()));
    }
  };

}  // namespace semiwork

#endif  // SEMIWORK_TRANSFORMATION_HPP_
