#include "semiwork/cli/formats.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace semiwork::cli {

  ParseError::ParseError(std::size_t l, std::string const& what)
      : Error(l == 0 ? what : "line " + std::to_string(l) + ": " + what), line(l) {}

  namespace {
    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    // Non-blank, non-comment lines split on whitespace.
    std::vector<Line> read_lines(std::istream& in) {
      std::vector<Line> out;
      std::string       text;
      for (std::size_t number = 1; std::getline(in, text); ++number) {
        std::istringstream ss(text);
        Line               line{number, {}};
        for (std::string tok; ss >> tok;) {
          line.tokens.push_back(tok);
        }
        if (!line.tokens.empty() && line.tokens.front().front() != '#') {
          out.push_back(std::move(line));
        }
      }
      return out;
    }

    std::int64_t to_int(std::string const& tok, std::size_t line) {
      std::int64_t v   = 0;
      auto const   end = tok.data() + tok.size();
      auto [ptr, ec]   = std::from_chars(tok.data(), end, v);
      if (ec != std::errc() || ptr != end) {
        throw ParseError(line, "expected an integer, got \"" + tok + "\"");
      }
      return v;
    }

    std::size_t to_count(std::string const& tok, std::size_t line, char const* what) {
      auto const v = to_int(tok, line);
      if (v <= 0) {
        throw ParseError(line, std::string(what) + " must be positive");
      }
      return static_cast<std::size_t>(v);
    }

    // True and strips the keyword when the line starts with it.
    bool keyword(Line& line, std::string const& key) {
      if (line.tokens.front() == key) {
        line.tokens.erase(line.tokens.begin());
        return true;
      }
      if (line.tokens.front().rfind(key, 0) == 0) {
        line.tokens.front().erase(0, key.size());
        return true;
      }
      return false;
    }

    // Reads an order followed by order^2 integers.
    std::pair<std::size_t, std::vector<std::int64_t>>
    read_square(std::vector<Line> const& lines, std::size_t& pos, char const* what) {
      if (pos == lines.size()) {
        throw ParseError(0, std::string("empty ") + what);
      }
      std::vector<std::pair<std::size_t, std::int64_t>> values;
      for (; pos < lines.size(); ++pos) {
        auto const& line = lines[pos];
        if (line.tokens.front().rfind("labels:", 0) == 0) {
          break;
        }
        for (auto const& tok : line.tokens) {
          values.emplace_back(line.number, to_int(tok, line.number));
        }
      }
      if (values.empty()) {
        throw ParseError(0, std::string("missing order in ") + what);
      }
      if (values.front().second <= 0) {
        throw ParseError(values.front().first, "order must be positive");
      }
      auto const n = static_cast<std::size_t>(values.front().second);
      if (n > 65'536 || values.size() - 1 != n * n) {
        throw ParseError(values.back().first,
                         "expected " + std::to_string(n * n) + " entries, got "
                             + std::to_string(values.size() - 1));
      }
      std::vector<std::int64_t> entries;
      entries.reserve(n * n);
      for (std::size_t i = 1; i < values.size(); ++i) {
        entries.push_back(values[i].second);
      }
      return {n, std::move(entries)};
    }
  }  // namespace

  RawTable parse_sgp(std::istream& in) {
    auto        lines    = read_lines(in);
    std::size_t pos      = 0;
    auto [n, entries]    = read_square(lines, pos, "table");
    RawTable out{n, std::move(entries), {}};
    if (pos < lines.size()) {
      auto line = lines[pos];
      keyword(line, "labels:");
      out.labels = line.tokens;
      if (out.labels.size() != n) {
        throw ParseError(line.number, "expected " + std::to_string(n) + " labels, got "
                                          + std::to_string(out.labels.size()));
      }
      if (pos + 1 < lines.size()) {
        throw ParseError(lines[pos + 1].number, "unexpected content after labels");
      }
    }
    return out;
  }

  CayleyTable to_table(RawTable const& raw) {
    return validate_table(raw.order, raw.entries, raw.labels);
  }

  GenSet parse_gens(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty()) {
      throw ParseError(0, "empty generator file");
    }
    if (lines.front().tokens.size() != 1) {
      throw ParseError(lines.front().number, "first line must hold only the degree");
    }
    auto const                  p = to_count(lines.front().tokens.front(),
                                             lines.front().number, "degree");
    std::vector<Transformation> gens;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const& line = lines[i];
      if (line.tokens.size() != p) {
        throw ParseError(line.number, "expected " + std::to_string(p) + " points, got "
                                          + std::to_string(line.tokens.size()));
      }
      std::vector<Index> img;
      for (auto const& tok : line.tokens) {
        auto const v = to_int(tok, line.number);
        if (v < 0 || static_cast<std::size_t>(v) >= p) {
          throw ParseError(line.number, "point " + tok + " out of range");
        }
        img.push_back(static_cast<Index>(v));
      }
      gens.emplace_back(std::move(img));
    }
    if (gens.empty()) {
      throw ParseError(lines.back().number, "no generators");
    }
    return GenSet(std::move(gens));
  }

  Automaton parse_fsa(std::istream& in) {
    auto lines = read_lines(in);
    auto header = [&](std::size_t i, std::string const& key) {
      if (i >= lines.size()) {
        throw ParseError(0, "missing \"" + key + "\" line");
      }
      auto line = lines[i];
      if (!keyword(line, key) || line.tokens.size() != 1) {
        throw ParseError(line.number, "expected \"" + key + " <count>\"");
      }
      return to_count(line.tokens.front(), line.number, key.c_str());
    };
    auto const                  n = header(0, "states");
    auto const                  m = header(1, "letters");
    std::vector<Transformation> delta;
    std::size_t                 i = 2;
    for (; i < lines.size() && delta.size() < m; ++i) {
      auto const& line = lines[i];
      if (line.tokens.size() != n) {
        throw ParseError(line.number, "expected " + std::to_string(n) + " states, got "
                                          + std::to_string(line.tokens.size()));
      }
      std::vector<Index> img;
      for (auto const& tok : line.tokens) {
        auto const v = to_int(tok, line.number);
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw ParseError(line.number, "state " + tok + " out of range");
        }
        img.push_back(static_cast<Index>(v));
      }
      delta.emplace_back(std::move(img));
    }
    if (delta.size() != m) {
      throw ParseError(0, "expected " + std::to_string(m) + " letter lines");
    }
    std::vector<std::string> labels;
    if (i < lines.size()) {
      auto line = lines[i];
      if (!keyword(line, "letterlabels:")) {
        throw ParseError(line.number, "unexpected content after letters");
      }
      if (line.tokens.size() != m) {
        throw ParseError(line.number, "expected " + std::to_string(m) + " letter labels");
      }
      labels = line.tokens;
      if (i + 1 < lines.size()) {
        throw ParseError(lines[i + 1].number, "unexpected content after letter labels");
      }
    }
    try {
      return Automaton(n, std::move(delta), std::move(labels));
    } catch (ArgError const& e) {
      throw ParseError(0, e.what());
    }
  }

  FunctionTable parse_function_table(std::istream& in) {
    auto        lines = read_lines(in);
    std::size_t pos   = 0;
    auto [n, entries] = read_square(lines, pos, "function table");
    if (pos < lines.size()) {
      throw ParseError(lines[pos].number, "unexpected content");
    }
    FunctionTable out{n, {}};
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] < 0 || static_cast<std::uint64_t>(entries[i]) >= n) {
        throw RangeError(i / n, i % n, entries[i]);
      }
      out.entries.push_back(static_cast<Index>(entries[i]));
    }
    return out;
  }

  void write_sgp(std::ostream& out, CayleyTable const& t) {
    out << t.order() << '\n';
    for (Index x = 0; x < t.order(); ++x) {
      auto const row = t.row(x);
      for (std::size_t y = 0; y < row.size(); ++y) {
        out << (y == 0 ? "" : " ") << row[y];
      }
      out << '\n';
    }
    out << "labels:";
    for (auto const& l : t.labels()) {
      out << ' ' << l;
    }
    out << '\n';
  }

  void write_gens(std::ostream& out, GenSet const& gens) {
    out << gens.degree() << '\n';
    for (auto const& g : gens.gens()) {
      auto const& img = g.image();
      for (std::size_t p = 0; p < img.size(); ++p) {
        out << (p == 0 ? "" : " ") << img[p];
      }
      out << '\n';
    }
  }

  void write_lut(std::ostream& out, CayleyTable const& t) {
    for (Index x = 0; x < t.order(); ++x) {
      for (Index y = 0; y < t.order(); ++y) {
        out << t.label(x) << ' ' << t.label(y) << " -> " << t.label(t(x, y)) << '\n';
      }
    }
  }

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + '"';
    }
  }  // namespace

  void write_dot(std::ostream& out, CayleyTable const& t, std::vector<Index> const& generators) {
    std::vector<Index> gens = generators;
    if (gens.empty()) {
      for (Index i = 0; i < t.order(); ++i) {
        gens.push_back(i);
      }
    }
    out << "digraph cayley {\n";
    for (Index x = 0; x < t.order(); ++x) {
      out << "  n" << x << " [label=" << quoted(t.label(x)) << "];\n";
    }
    for (Index x = 0; x < t.order(); ++x) {
      for (Index g : gens) {
        out << "  n" << x << " -> n" << t(x, g) << " [label=" << quoted(t.label(g))
            << "];\n";
      }
    }
    out << "}\n";
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError(0, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

}  // namespace semiwork::cli
