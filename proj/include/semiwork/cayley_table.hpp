#ifndef SEMIWORK_CAYLEY_TABLE_HPP_
#define SEMIWORK_CAYLEY_TABLE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiwork/errors.hpp"

namespace semiwork {

  namespace detail {
    class TrustedFactory;
  }

  // A finite semigroup given by its composition table.
  //
  // Entry (x, y) is the composite "x then y". Elements are dense indices
  // 0..order()-1; labels are for display only. Every CayleyTable in existence
  // has been checked for closure and associativity, and it is immutable, so
  // copies share storage and may be read concurrently.
  class CayleyTable {
   public:
    // Passkey for library code that builds tables which are associative by
    // construction (closures of transformations, products).
    class Trusted {
      Trusted() = default;
      friend class detail::TrustedFactory;
    };

    CayleyTable(Trusted,
                std::size_t              order,
                std::vector<Index>       entries,
                std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t order() const noexcept {
      return _data->order;
    }

    [[nodiscard]] Index operator()(Index x, Index y) const noexcept {
      return _data->entries[static_cast<std::size_t>(x) * _data->order + y];
    }

    [[nodiscard]] std::span<const Index> row(Index x) const noexcept {
      return {_data->entries.data() + static_cast<std::size_t>(x) * _data->order,
              _data->order};
    }

    // Row-major, order() * order() items.
    [[nodiscard]] std::span<const Index> entries() const noexcept {
      return _data->entries;
    }

    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _data->labels;
    }

    [[nodiscard]] std::string const& label(Index x) const {
      return _data->labels.at(x);
    }

    // Entries and labels both equal.
    friend bool operator==(CayleyTable const& a, CayleyTable const& b);

   private:
    struct Data {
      std::size_t              order;
      std::vector<Index>       entries;
      std::vector<std::string> labels;
    };
    std::shared_ptr<Data const> _data;
  };

  struct Triple {
    Index x;
    Index y;
    Index z;

    friend bool operator==(Triple const&, Triple const&) = default;
    friend auto operator<=>(Triple const&, Triple const&) = default;
  };

  enum class AssocMode {
    // Scan all n^3 triples; the witness is the lexicographic minimum.
    naive,
    // Light's test: only triples (x, g, z) with g in a generating set of the
    // magma are checked. Same verdict; the witness may differ.
    light
  };

  // Entries must already be in range. Returns the violating triple, if any.
  // With mode == naive the scan may be split by x-row across `workers`
  // threads; the reported witness is still the lexicographic minimum.
  [[nodiscard]] std::optional<Triple>
  check_associativity(std::size_t            order,
                      std::span<const Index> entries,
                      AssocMode              mode    = AssocMode::naive,
                      unsigned               workers = 1);

  [[nodiscard]] std::optional<Triple>
  check_associativity(CayleyTable const& table,
                      AssocMode          mode    = AssocMode::naive,
                      unsigned           workers = 1);

  // Builds a CayleyTable from a row-major entry list. Throws ArgError (order
  // 0, wrong entry count, bad labels), RangeError (first out-of-range entry in
  // row-major order) or AssocError (lexicographically first violating triple).
  // Empty `labels` means the defaults "e0", "e1", ...
  [[nodiscard]] CayleyTable validate_table(std::size_t                     order,
                                           std::span<const std::int64_t>   entries,
                                           std::vector<std::string>        labels = {},
                                           unsigned                        workers = 1);

  [[nodiscard]] CayleyTable validate_table(std::size_t              order,
                                           std::vector<Index> const& entries,
                                           std::vector<std::string>  labels = {},
                                           unsigned                  workers = 1);

  [[nodiscard]] std::vector<std::string> default_labels(std::size_t order);

  // The 1-bit memory: r (read, identity), s0 and s1 (destructive writes).
  [[nodiscard]] CayleyTable make_flip_flop();

  // Z_n, addition mod n, labels "+0".."+{n-1}". Throws ArgError on n = 0.
  [[nodiscard]] CayleyTable make_cyclic(std::size_t n);

  // xy = x for all x, y. Throws ArgError on n = 0.
  [[nodiscard]] CayleyTable make_left_zero(std::size_t n);

  struct ElementInfo {
    Index index;
    bool  is_idempotent;
    bool  is_left_identity;
    bool  is_right_identity;
    bool  is_identity;
  };

  [[nodiscard]] std::vector<ElementInfo> element_info(CayleyTable const& table);

  // The unique two-sided identity, if there is one.
  [[nodiscard]] std::optional<Index> identity_element(CayleyTable const& table);

  // True iff `subset` is closed under composition. Throws IndexError on an
  // index outside the table.
  [[nodiscard]] bool is_subsemigroup(CayleyTable const&     table,
                                     std::span<const Index> subset);

  // The table restricted to `subset` (which must be closed), elements
  // renumbered in the given order; labels carried over.
  [[nodiscard]] CayleyTable subtable(CayleyTable const&     table,
                                     std::span<const Index> subset);

  namespace detail {
    // Library-internal: skips validation.
    class TrustedFactory {
     public:
      static CayleyTable make(std::size_t              order,
                              std::vector<Index>       entries,
                              std::vector<std::string> labels = {}) {
        return CayleyTable(CayleyTable::Trusted{}, order, std::move(entries),
                           std::move(labels));
      }
    };
  }  // namespace detail

}  // namespace semiwork

#endif  // SEMIWORK_CAYLEY_TABLE_HPP_
