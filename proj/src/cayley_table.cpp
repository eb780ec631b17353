#include "semiwork/cayley_table.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>

#include "parallel.hpp"

namespace semiwork {

  RangeError::RangeError(std::size_t r, std::size_t c, std::int64_t v)
      : Error("entry (" + std::to_string(r) + ", " + std::to_string(c)
              + ") = " + std::to_string(v) + " is out of range"),
        row(r),
        col(c),
        value(v) {}

  AssocError::AssocError(Index a, Index b, Index c)
      : Error("not associative: (xy)z != x(yz) at x = " + std::to_string(a)
              + ", y = " + std::to_string(b) + ", z = " + std::to_string(c)),
        x(a),
        y(b),
        z(c) {}

  DegreeMismatch::DegreeMismatch(std::size_t e, std::size_t a)
      : Error("degree mismatch: expected " + std::to_string(e) + ", got "
              + std::to_string(a)),
        expected(e),
        actual(a) {}

  SizeExceeded::SizeExceeded(std::size_t l)
      : Error("size limit " + std::to_string(l) + " exceeded"), limit(l) {}

  std::vector<std::string> default_labels(std::size_t order) {
    std::vector<std::string> out;
    out.reserve(order);
    for (std::size_t i = 0; i < order; ++i) {
      out.push_back("e" + std::to_string(i));
    }
    return out;
  }

  namespace {
    void check_labels(std::size_t order, std::vector<std::string> const& labels) {
      if (labels.size() != order) {
        throw ArgError("expected " + std::to_string(order) + " labels, got "
                       + std::to_string(labels.size()));
      }
      std::set<std::string> seen;
      for (auto const& l : labels) {
        if (l.empty()) {
          throw ArgError("empty label");
        }
        if (!seen.insert(l).second) {
          throw ArgError("duplicate label \"" + l + "\"");
        }
      }
    }

    std::optional<Triple> scan_row(std::size_t            n,
                                   std::span<const Index> t,
                                   Index                  x) {
      auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
      for (Index y = 0; y < n; ++y) {
        Index const xy = at(x, y);
        for (Index z = 0; z < n; ++z) {
          if (at(xy, z) != at(x, at(y, z))) {
            return Triple{x, y, z};
          }
        }
      }
      return std::nullopt;
    }

    std::optional<Triple> naive_scan(std::size_t            n,
                                     std::span<const Index> t,
                                     unsigned               workers) {
      if (workers <= 1 || n < 16) {
        for (Index x = 0; x < n; ++x) {
          if (auto w = scan_row(n, t, x)) {
            return w;
          }
        }
        return std::nullopt;
      }
      std::vector<std::optional<Triple>> found(n);
      std::atomic<std::size_t>           first_bad{n};
      detail::parallel_for(n, workers, [&](std::size_t x) {
        if (x > first_bad.load()) {
          return;
        }
        found[x] = scan_row(n, t, static_cast<Index>(x));
        if (found[x]) {
          std::size_t cur = first_bad.load();
          while (x < cur && !first_bad.compare_exchange_weak(cur, x)) {
          }
        }
      });
      for (auto const& w : found) {
        if (w) {
          return w;
        }
      }
      return std::nullopt;
    }

    // A generating set of the magma (closure under the operation, which need
    // not be associative here).
    std::vector<Index> magma_generators(std::size_t n, std::span<const Index> t) {
      std::vector<Index> gens;
      std::vector<char>  in(n, 0);
      std::vector<Index> elts;
      for (Index c = 0; c < n; ++c) {
        if (in[c]) {
          continue;
        }
        gens.push_back(c);
        in[c]     = 1;
        auto done = elts.size();
        elts.push_back(c);
        // Products of every pair where at least one factor is new.
        for (std::size_t i = done; i < elts.size(); ++i) {
          for (std::size_t j = 0; j <= i; ++j) {
            for (Index p : {t[elts[i] * n + elts[j]], t[elts[j] * n + elts[i]]}) {
              if (!in[p]) {
                in[p] = 1;
                elts.push_back(p);
              }
            }
          }
        }
      }
      return gens;
    }

    std::optional<Triple> light_test(std::size_t n, std::span<const Index> t) {
      auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
      for (Index g : magma_generators(n, t)) {
        for (Index x = 0; x < n; ++x) {
          Index const xg = at(x, g);
          for (Index z = 0; z < n; ++z) {
            if (at(xg, z) != at(x, at(g, z))) {
              return Triple{x, g, z};
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  CayleyTable::CayleyTable(Trusted,
                           std::size_t              order,
                           std::vector<Index>       entries,
                           std::vector<std::string> labels)
      : _data(std::make_shared<Data const>(Data{
          order,
          std::move(entries),
          labels.empty() ? default_labels(order) : std::move(labels)})) {}

  bool operator==(CayleyTable const& a, CayleyTable const& b) {
    return a._data == b._data
           || (a._data->order == b._data->order
               && a._data->entries == b._data->entries
               && a._data->labels == b._data->labels);
  }

  std::optional<Triple> check_associativity(std::size_t            order,
                                            std::span<const Index> entries,
                                            AssocMode              mode,
                                            unsigned               workers) {
    if (entries.size() != order * order) {
      throw ArgError("expected " + std::to_string(order * order)
                     + " entries, got " + std::to_string(entries.size()));
    }
    return mode == AssocMode::light ? light_test(order, entries)
                                    : naive_scan(order, entries, workers);
  }

  std::optional<Triple> check_associativity(CayleyTable const& table,
                                            AssocMode          mode,
                                            unsigned           workers) {
    return check_associativity(table.order(), table.entries(), mode, workers);
  }

  CayleyTable validate_table(std::size_t                   order,
                             std::span<const std::int64_t> entries,
                             std::vector<std::string>      labels,
                             unsigned                      workers) {
    if (order == 0) {
      throw ArgError("order must be positive");
    }
    if (entries.size() != order * order) {
      throw ArgError("expected " + std::to_string(order * order)
                     + " entries, got " + std::to_string(entries.size()));
    }
    if (!labels.empty()) {
      check_labels(order, labels);
    }
    std::vector<Index> packed(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      auto const v = entries[i];
      if (v < 0 || static_cast<std::uint64_t>(v) >= order) {
        throw RangeError(i / order, i % order, v);
      }
      packed[i] = static_cast<Index>(v);
    }
    if (auto w = naive_scan(order, packed, workers)) {
      throw AssocError(w->x, w->y, w->z);
    }
    return detail::TrustedFactory::make(order, std::move(packed), std::move(labels));
  }

  CayleyTable validate_table(std::size_t               order,
                             std::vector<Index> const& entries,
                             std::vector<std::string>  labels,
                             unsigned                  workers) {
    std::vector<std::int64_t> wide(entries.begin(), entries.end());
    return validate_table(order, wide, std::move(labels), workers);
  }

  CayleyTable make_flip_flop() {
    // r  s0 s1
    return detail::TrustedFactory::make(3,
                                        {0, 1, 2,   // r
                                         1, 1, 2,   // s0
                                         2, 1, 2},  // s1
                                        {"r", "s0", "s1"});
  }

  CayleyTable make_cyclic(std::size_t n) {
    if (n == 0) {
      throw ArgError("cyclic group order must be positive");
    }
    std::vector<Index>       entries(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = "+" + std::to_string(i);
      for (std::size_t j = 0; j < n; ++j) {
        entries[i * n + j] = static_cast<Index>((i + j) % n);
      }
    }
    return detail::TrustedFactory::make(n, std::move(entries), std::move(labels));
  }

  CayleyTable make_left_zero(std::size_t n) {
    if (n == 0) {
      throw ArgError("order must be positive");
    }
    std::vector<Index> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill_n(entries.begin() + i * n, n, static_cast<Index>(i));
    }
    return detail::TrustedFactory::make(n, std::move(entries));
  }

  std::vector<ElementInfo> element_info(CayleyTable const& t) {
    auto const               n = t.order();
    std::vector<ElementInfo> out;
    out.reserve(n);
    for (Index e = 0; e < n; ++e) {
      ElementInfo info{e, t(e, e) == e, true, true, false};
      for (Index x = 0; x < n && (info.is_left_identity || info.is_right_identity);
           ++x) {
        info.is_left_identity  = info.is_left_identity && t(e, x) == x;
        info.is_right_identity = info.is_right_identity && t(x, e) == x;
      }
      info.is_identity = info.is_left_identity && info.is_right_identity;
      out.push_back(info);
    }
    return out;
  }

  std::optional<Index> identity_element(CayleyTable const& t) {
    for (auto const& info : element_info(t)) {
      if (info.is_identity) {
        return info.index;
      }
    }
    return std::nullopt;
  }

  bool is_subsemigroup(CayleyTable const& t, std::span<const Index> subset) {
    std::vector<char> in(t.order(), 0);
    for (Index s : subset) {
      if (s >= t.order()) {
        throw IndexError("element " + std::to_string(s) + " not in table of order "
                         + std::to_string(t.order()));
      }
      in[s] = 1;
    }
    for (Index a : subset) {
      for (Index b : subset) {
        if (!in[t(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  CayleyTable subtable(CayleyTable const& t, std::span<const Index> subset) {
    if (subset.empty()) {
      throw ArgError("empty subset");
    }
    if (!is_subsemigroup(t, subset)) {
      throw ArgError("subset is not closed under composition");
    }
    std::vector<Index> local(t.order(), static_cast<Index>(-1));
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (local[subset[i]] != static_cast<Index>(-1)) {
        throw ArgError("repeated element in subset");
      }
      local[subset[i]] = static_cast<Index>(i);
    }
    auto const               k = subset.size();
    std::vector<Index>       entries(k * k);
    std::vector<std::string> labels(k);
    for (std::size_t i = 0; i < k; ++i) {
      labels[i] = t.label(subset[i]);
      for (std::size_t j = 0; j < k; ++j) {
        entries[i * k + j] = local[t(subset[i], subset[j])];
      }
    }
    return detail::TrustedFactory::make(k, std::move(entries), std::move(labels));
  }

}  // namespace semiwork
