#include "semiwork/hierarchy.hpp"

#include <algorithm>

#include "semiwork/representation.hpp"

namespace semiwork {

  InfluenceRelation influence_relation(CayleyTable const& t) {
    auto const        n = t.order();
    InfluenceRelation out{n, std::vector<char>(n * n, 0), {}};
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        out.grid[y * n + x] = t(x, y) != x;
      }
    }
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (out.influences(y, x) && !out.influences(x, y)) {
          out.one_way.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  CayleyTable direct_product(CayleyTable const& s, CayleyTable const& t, std::size_t cap) {
    auto const ns = s.order();
    auto const nt = t.order();
    if (ns * nt > cap) {
      throw SizeExceeded(cap);
    }
    auto const               n = ns * nt;
    std::vector<Index>       entries(n * n);
    std::vector<std::string> labels(n);
    for (Index a = 0; a < ns; ++a) {
      for (Index b = 0; b < nt; ++b) {
        auto const i = a * nt + b;
        labels[i]    = "(" + s.label(a) + "," + t.label(b) + ")";
        for (Index c = 0; c < ns; ++c) {
          for (Index d = 0; d < nt; ++d) {
            entries[i * n + c * nt + d] = static_cast<Index>(s(a, c) * nt + t(b, d));
          }
        }
      }
    }
    return detail::TrustedFactory::make(n, std::move(entries), std::move(labels));
  }

  namespace {
    std::vector<Transformation> generators_of(ClosureResult const& c) {
      std::vector<Transformation> out;
      for (Index i : c.gen_indices) {
        out.push_back(c.elements[i]);
      }
      auto const id = Transformation::identity(c.degree);
      if (std::find(c.elements.begin(), c.elements.end(), id) == c.elements.end()) {
        out.push_back(id);
      }
      return out;
    }
  }  // namespace

  ClosureResult wreath_product(ClosureResult const&  bottom,
                               ClosureResult const&  top,
                               ClosureOptions const& opts) {
    auto const nx     = bottom.degree;
    auto const ny     = top.degree;
    auto const degree = nx * ny;
    auto       point  = [ny](std::size_t x, std::size_t y) {
      return static_cast<Index>(x * ny + y);
    };

    std::vector<Transformation> gens;
    for (auto const& t : generators_of(top)) {
      std::vector<Index> img(degree);
      for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < ny; ++y) {
          img[point(x, y)] = point(x, t(static_cast<Index>(y)));
        }
      }
      gens.emplace_back(std::move(img));
    }
    auto const bottom_gens = generators_of(bottom);
    for (std::size_t y0 = 0; y0 < ny; ++y0) {
      for (auto const& s : bottom_gens) {
        std::vector<Index> img(degree);
        for (std::size_t x = 0; x < nx; ++x) {
          for (std::size_t y = 0; y < ny; ++y) {
            img[point(x, y)] = y == y0 ? point(s(static_cast<Index>(x)), y) : point(x, y);
          }
        }
        gens.emplace_back(std::move(img));
      }
    }
    return closure(GenSet(std::move(gens)), opts);
  }

  DivisionResult cascade_emulates(CayleyTable const&   target,
                                  ClosureResult const& cascade,
                                  SearchBudget         budget,
                                  unsigned             workers) {
    return divides(target, cascade.table, budget, workers);
  }

  ClosureResult as_transformations(CayleyTable const& table, ClosureOptions const& opts) {
    return closure(right_regular_representation(table, false).images, opts);
  }

}  // namespace semiwork
