#include "semiwork/closure.hpp"

#include <algorithm>
#include <limits>

#include "parallel.hpp"

namespace semiwork {

  namespace {
    constexpr Index npos = std::numeric_limits<Index>::max();

    std::size_t saturating_power(std::size_t base, std::size_t exp) {
      std::size_t out = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<std::size_t>::max() / base) {
          return std::numeric_limits<std::size_t>::max();
        }
        out *= base;
      }
      return out;
    }

    // Transformations stored back to back, with an open-addressing index.
    class ElementStore {
     public:
      explicit ElementStore(std::size_t degree) : _degree(degree), _slots(64, npos) {}

      [[nodiscard]] std::size_t size() const noexcept {
        return _data.size() / _degree;
      }

      [[nodiscard]] std::span<const Index> at(std::size_t i) const noexcept {
        return {_data.data() + i * _degree, _degree};
      }

      [[nodiscard]] Index find(std::span<const Index> img) const noexcept {
        std::size_t mask = _slots.size() - 1;
        for (std::size_t s = TransformationHash{}(img) & mask;; s = (s + 1) & mask) {
          Index const i = _slots[s];
          if (i == npos || std::ranges::equal(at(i), img)) {
            return i;
          }
        }
      }

      Index insert(std::span<const Index> img) {
        if ((size() + 1) * 2 > _slots.size()) {
          grow();
        }
        auto const i = static_cast<Index>(size());
        _data.insert(_data.end(), img.begin(), img.end());
        place(i);
        return i;
      }

     private:
      void place(Index i) {
        std::size_t mask = _slots.size() - 1;
        std::size_t s    = TransformationHash{}(at(i)) & mask;
        while (_slots[s] != npos) {
          s = (s + 1) & mask;
        }
        _slots[s] = i;
      }

      void grow() {
        _slots.assign(_slots.size() * 2, npos);
        for (std::size_t i = 0; i < size(); ++i) {
          place(static_cast<Index>(i));
        }
      }

      std::size_t        _degree;
      std::vector<Index> _data;
      std::vector<Index> _slots;
    };
  }  // namespace

  ClosureResult closure(GenSet const& gens, ClosureOptions const& opts) {
    auto const degree = gens.degree();
    if (degree > max_default_degree && !opts.allow_large_degree) {
      throw ArgError("degree " + std::to_string(degree)
                     + " exceeds 8; an explicit override is required");
    }
    std::size_t const max_size = opts.max_size.value_or(saturating_power(degree, degree));
    auto const        ngens    = gens.size();

    ElementStore       store(degree);
    std::vector<Index> gen_indices(ngens);
    // For non-generator element j: elements[j] = elements[parent[j]] * gen[via[j]].
    std::vector<Index> parent;
    std::vector<Index> via;

    auto add = [&](std::span<const Index> img, Index p, Index g) {
      if (store.size() + 1 > max_size) {
        throw SizeExceeded(max_size);
      }
      parent.push_back(p);
      via.push_back(g);
      return store.insert(img);
    };

    for (std::size_t k = 0; k < ngens; ++k) {
      std::span<const Index> img(gens[k].image());
      Index                  i = store.find(img);
      gen_indices[k]           = i == npos ? add(img, npos, static_cast<Index>(k)) : i;
    }

    std::vector<Index> graph;
    std::vector<Index> buf(degree);
    for (std::size_t i = 0; i < store.size(); ++i) {
      for (std::size_t k = 0; k < ngens; ++k) {
        auto const x = store.at(i);
        auto const& g = gens[k].image();
        for (std::size_t p = 0; p < degree; ++p) {
          buf[p] = g[x[p]];
        }
        Index j = store.find(buf);
        if (j == npos) {
          j = add(buf, static_cast<Index>(i), static_cast<Index>(k));
        }
        graph.push_back(j);
      }
    }

    auto const         n = store.size();
    std::vector<Index> entries(n * n);
    detail::parallel_for(n, opts.workers, [&](std::size_t i) {
      Index* row = entries.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        row[j] = parent[j] == npos ? graph[i * ngens + via[j]]
                                   : graph[row[parent[j]] * ngens + via[j]];
      }
    });

    std::vector<Transformation> elements;
    std::vector<std::string>    labels;
    elements.reserve(n);
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto const img = store.at(i);
      elements.emplace_back(std::vector<Index>(img.begin(), img.end()));
      labels.push_back(elements.back().to_string());
    }
    return ClosureResult{
        degree,
        std::move(elements),
        detail::TrustedFactory::make(n, std::move(entries), std::move(labels)),
        std::move(gen_indices),
        std::move(graph)};
  }

  std::optional<Index> find_element(ClosureResult const& c, Transformation const& t) {
    auto it = std::find(c.elements.begin(), c.elements.end(), t);
    if (it == c.elements.end()) {
      return std::nullopt;
    }
    return static_cast<Index>(it - c.elements.begin());
  }

}  // namespace semiwork
