#include "semiwork/transformation.hpp"

#include <algorithm>
#include <set>

namespace semiwork {

  Transformation::Transformation(std::vector<Index> image) : _image(std::move(image)) {
    if (_image.empty()) {
      throw ArgError("transformation degree must be positive");
    }
    for (std::size_t i = 0; i < _image.size(); ++i) {
      if (_image[i] >= _image.size()) {
        throw ArgError("point " + std::to_string(i) + " maps to "
                       + std::to_string(_image[i]) + ", outside degree "
                       + std::to_string(_image.size()));
      }
    }
  }

  Transformation Transformation::identity(std::size_t degree) {
    std::vector<Index> img(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      img[i] = static_cast<Index>(i);
    }
    return Transformation(std::move(img));
  }

  Transformation Transformation::constant(std::size_t degree, Index value) {
    return Transformation(std::vector<Index>(degree, value));
  }

  Transformation Transformation::transposition(std::size_t degree, Index a, Index b) {
    auto img = identity(degree)._image;
    if (a >= degree || b >= degree) {
      throw ArgError("transposition point out of range");
    }
    std::swap(img[a], img[b]);
    return Transformation(std::move(img));
  }

  Transformation Transformation::cycle(std::size_t degree) {
    std::vector<Index> img(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      img[i] = static_cast<Index>((i + 1) % degree);
    }
    return Transformation(std::move(img));
  }

  Transformation Transformation::collapsing(std::size_t degree, Index from, Index to) {
    auto img = identity(degree)._image;
    if (from >= degree || to >= degree) {
      throw ArgError("collapsing point out of range");
    }
    img[from] = to;
    return Transformation(std::move(img));
  }

  std::string Transformation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _image.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(_image[i]);
    }
    out += ']';
    return out;
  }

  Transformation compose(Transformation const& x, Transformation const& y) {
    if (x.degree() != y.degree()) {
      throw DegreeMismatch(x.degree(), y.degree());
    }
    std::vector<Index> img(x.degree());
    for (std::size_t p = 0; p < img.size(); ++p) {
      img[p] = y(x(static_cast<Index>(p)));
    }
    return Transformation(std::move(img));
  }

  bool is_permutation(Transformation const& t) {
    std::vector<char> hit(t.degree(), 0);
    for (Index v : t.image()) {
      if (hit[v]) {
        return false;
      }
      hit[v] = 1;
    }
    return true;
  }

  GenSet::GenSet(std::vector<Transformation> gens) : _gens(std::move(gens)) {
    if (_gens.empty()) {
      throw ArgError("generator set must be nonempty");
    }
    for (auto const& g : _gens) {
      if (g.degree() != _gens.front().degree()) {
        throw DegreeMismatch(_gens.front().degree(), g.degree());
      }
    }
    std::set<Transformation> distinct(_gens.begin(), _gens.end());
    _has_duplicates = distinct.size() != _gens.size();
  }

  GenSet make_tn_generators(std::size_t n) {
    if (n == 0) {
      throw ArgError("degree must be positive");
    }
    if (n == 1) {
      return GenSet({Transformation::identity(1)});
    }
    auto swap     = Transformation::transposition(n, 0, 1);
    auto collapse = Transformation::collapsing(n, 0, 1);
    if (n == 2) {
      return GenSet({swap, collapse});
    }
    return GenSet({swap, Transformation::cycle(n), collapse});
  }

  std::size_t TransformationHash::operator()(std::span<const Index> image) const noexcept {
    // FNV-1a over the image entries.
    std::size_t h = 1469598103934665603ULL;
    for (Index v : image) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }

}  // namespace semiwork
