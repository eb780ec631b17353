#ifndef SEMIWORK_CLI_FORMATS_HPP_
#define SEMIWORK_CLI_FORMATS_HPP_

// Flat text formats. In all of them, lines whose first non-blank character is
// '#' are ignored.
//
//   .sgp   order n, then n*n integers row-major, optional "labels: a b c"
//   .gens  degree p, then one transformation (p integers) per line
//   .fsa   "states n", "letters m", m lines of n integers, optional
//          "letterlabels: ..."
//   .fn    size k, then k*k integers row-major (any binary operation)

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "semiwork/automaton.hpp"
#include "semiwork/cayley_table.hpp"
#include "semiwork/morphism.hpp"
#include "semiwork/transformation.hpp"

namespace semiwork::cli {

  // Malformed input text.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what);

    std::size_t line;
  };

  // A .sgp file before validation.
  struct RawTable {
    std::size_t               order;
    std::vector<std::int64_t> entries;
    std::vector<std::string>  labels;
  };

  [[nodiscard]] RawTable      parse_sgp(std::istream& in);
  [[nodiscard]] GenSet        parse_gens(std::istream& in);
  [[nodiscard]] Automaton     parse_fsa(std::istream& in);
  [[nodiscard]] FunctionTable parse_function_table(std::istream& in);

  // Validates the parsed table (RangeError / AssocError / ArgError).
  [[nodiscard]] CayleyTable to_table(RawTable const& raw);

  void write_sgp(std::ostream& out, CayleyTable const& table);
  void write_gens(std::ostream& out, GenSet const& gens);

  // One "x y -> xy" line per ordered pair, using labels.
  void write_lut(std::ostream& out, CayleyTable const& table);

  // Right Cayley graph: an edge x -> x*g labelled g for every generator g
  // (every element when `generators` is empty).
  void write_dot(std::ostream&             out,
                 CayleyTable const&        table,
                 std::vector<Index> const& generators = {});

  // Reads a whole file; throws ParseError(0, ...) when it cannot be opened.
  [[nodiscard]] std::string read_file(std::filesystem::path const& path);

}  // namespace semiwork::cli

#endif  // SEMIWORK_CLI_FORMATS_HPP_
