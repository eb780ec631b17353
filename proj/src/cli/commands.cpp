#include "semiwork/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "semiwork/automaton.hpp"
#include "semiwork/cli/formats.hpp"
#include "semiwork/closure.hpp"
#include "semiwork/hierarchy.hpp"
#include "semiwork/morphism.hpp"
#include "semiwork/universality.hpp"

namespace semiwork::cli {

  namespace {
    using json = nlohmann::json;

    // A file that could not be read, parsed or validated.
    class InputError : public Error {
     public:
      using Error::Error;
    };

    // A bad argument value noticed after parsing the command line.
    class UsageError : public Error {
     public:
      using Error::Error;
    };

    struct Globals {
      bool          json    = false;
      bool          timing  = false;
      std::uint64_t budget  = SearchBudget{}.max_nodes;
      unsigned      workers = 1;
    };

    // What a command produces: a JSON body and the human-readable rendering.
    struct Report {
      json                     body = json::object();
      std::vector<std::string> lines;
      // Raw text (a table, a DOT graph) printed after the lines.
      std::string payload;

      void say(std::string s) {
        lines.push_back(std::move(s));
      }
    };

    template <typename F>
    auto load(std::string const& path, F&& parse) {
      try {
        std::istringstream in(read_file(path));
        return parse(in);
      } catch (Error const& e) {
        throw InputError(path + ": " + e.what());
      }
    }

    CayleyTable load_table(std::string const& path) {
      return load(path, [](std::istream& in) { return to_table(parse_sgp(in)); });
    }

    bool is_gens_path(std::string const& path) {
      return std::filesystem::path(path).extension() == ".gens";
    }

    // A .gens file is closed directly; a table goes through its right regular
    // representation.
    ClosureResult load_transformations(std::string const& path, ClosureOptions const& opts) {
      if (is_gens_path(path)) {
        auto gens = load(path, [](std::istream& in) { return parse_gens(in); });
        return closure(gens, opts);
      }
      return as_transformations(load_table(path), opts);
    }

    std::vector<std::string> labels_of(CayleyTable const& t, std::span<const Index> xs) {
      std::vector<std::string> out;
      for (Index x : xs) {
        out.push_back(t.label(x));
      }
      return out;
    }

    std::string join(std::vector<std::string> const& xs, std::string const& sep = " ") {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : sep) + xs[i];
      }
      return out;
    }

    json table_json(CayleyTable const& t) {
      return {{"order", t.order()},
              {"entries", std::vector<Index>(t.entries().begin(), t.entries().end())},
              {"labels", t.labels()}};
    }

    std::string render_map(CayleyTable const&        s,
                           CayleyTable const&        t,
                           std::vector<Index> const& map) {
      std::vector<std::string> parts;
      for (Index x = 0; x < map.size(); ++x) {
        parts.push_back(s.label(x) + "->" + t.label(map[x]));
      }
      return join(parts);
    }

    int verdict_code(Verdict v) {
      switch (v) {
        case Verdict::yes:
          return exit_yes;
        case Verdict::no:
          return exit_no;
        case Verdict::unknown:
          break;
      }
      return exit_unknown;
    }

    void emit_or_write(Report& r, std::string const& text, std::string const& out_path) {
      if (out_path.empty()) {
        r.payload = text;
        r.body["text"] = text;
        return;
      }
      std::ofstream f(out_path, std::ios::binary);
      if (!f || !(f << text)) {
        throw InputError("cannot write " + out_path);
      }
      r.body["output"] = out_path;
      r.say("wrote " + out_path);
    }

    std::string sgp_text(CayleyTable const& t) {
      std::ostringstream ss;
      write_sgp(ss, t);
      return ss.str();
    }

    // ---------------------------------------------------------------- commands

    int cmd_validate(Report& r, std::string const& path, bool light, Globals const& g) {
      auto raw = load(path, [](std::istream& in) { return parse_sgp(in); });
      try {
        if (light) {
          std::vector<Index> packed;
          for (std::size_t i = 0; i < raw.entries.size(); ++i) {
            auto const v = raw.entries[i];
            if (v < 0 || static_cast<std::uint64_t>(v) >= raw.order) {
              throw RangeError(i / raw.order, i % raw.order, v);
            }
            packed.push_back(static_cast<Index>(v));
          }
          if (!check_associativity(raw.order, packed, AssocMode::light)) {
            r.body["verdict"] = "associative";
            r.body["order"]   = raw.order;
            r.say("associative, order " + std::to_string(raw.order));
            return exit_yes;
          }
        }
        auto const t = validate_table(raw.order, raw.entries, raw.labels, g.workers);
        r.body["verdict"] = "associative";
        r.body["order"]   = t.order();
        r.say("associative, order " + std::to_string(t.order()));
        auto const id = identity_element(t);
        r.body["identity"] = id ? json(t.label(*id)) : json(nullptr);
        r.say("identity: " + (id ? t.label(*id) : std::string("none")));
        std::vector<Index> idem;
        for (auto const& info : element_info(t)) {
          if (info.is_idempotent) {
            idem.push_back(info.index);
          }
        }
        r.body["idempotents"] = labels_of(t, idem);
        r.say("idempotents: " + join(labels_of(t, idem)));
        return exit_yes;
      } catch (RangeError const& e) {
        r.body["verdict"] = "out_of_range";
        r.body["row"]     = e.row;
        r.body["col"]     = e.col;
        r.body["value"]   = e.value;
        r.say(std::string("not a table: ") + e.what());
        return exit_no;
      } catch (AssocError const& e) {
        r.body["verdict"] = "not_associative";
        r.body["witness"] = {e.x, e.y, e.z};
        auto const label  = [&](Index i) {
          return raw.labels.empty() ? "e" + std::to_string(i) : raw.labels[i];
        };
        r.say("not associative: (" + label(e.x) + " " + label(e.y) + ") " + label(e.z)
              + " != " + label(e.x) + " (" + label(e.y) + " " + label(e.z) + ")");
        return exit_no;
      } catch (ArgError const& e) {
        throw InputError(path + ": " + e.what());
      }
    }

    int cmd_closure(Report&            r,
                    std::string const& path,
                    std::optional<std::size_t> max_size,
                    bool               allow_large,
                    std::string const& out,
                    Globals const&     g) {
      auto gens = load(path, [](std::istream& in) { return parse_gens(in); });
      ClosureOptions opts{max_size, allow_large, g.workers};
      try {
        auto const c = closure(gens, opts);
        r.body["verdict"]    = "closed";
        r.body["order"]      = c.order();
        r.body["degree"]     = c.degree;
        r.body["generators"] = labels_of(c.table, c.gen_indices);
        r.body["duplicate_generators"] = gens.has_duplicates();
        r.say("order " + std::to_string(c.order()));
        if (gens.has_duplicates()) {
          r.say("warning: duplicate generators");
        }
        if (!out.empty()) {
          emit_or_write(r, sgp_text(c.table), out);
        }
        return exit_yes;
      } catch (SizeExceeded const& e) {
        r.body["verdict"] = "size_exceeded";
        r.body["limit"]   = e.limit;
        r.say(e.what());
        return exit_unknown;
      }
    }

    int cmd_embed(Report&            r,
                  std::string const& src,
                  std::string const& dst,
                  std::size_t        limit,
                  Globals const&     g) {
      auto const s = load_table(src);
      auto const t = load_table(dst);
      auto const found
          = find_embeddings(s, t, {limit, {g.budget}, g.workers});
      json maps = json::array();
      for (auto const& m : found.found) {
        maps.push_back(m.map);
      }
      r.body["verdict"]    = std::string(to_string(found.verdict()));
      r.body["count"]      = found.found.size();
      r.body["complete"]   = found.complete;
      r.body["embeddings"] = maps;
      r.body["nodes"]      = found.nodes;
      r.say(std::to_string(found.found.size()) + " embeddings"
            + (found.complete ? "" : " (budget exhausted)"));
      for (auto const& m : found.found) {
        r.say("  " + render_map(s, t, m.map));
      }
      return verdict_code(found.verdict());
    }

    int cmd_morph_check(Report&                         r,
                        std::string const&              src,
                        std::string const&              dst,
                        std::vector<std::string> const& pairs) {
      auto const         s = load_table(src);
      auto const         t = load_table(dst);
      std::vector<Index> map(s.order(), static_cast<Index>(-1));
      for (auto const& p : pairs) {
        auto const colon = p.find(':');
        std::size_t i = 0, j = 0;
        try {
          if (colon == std::string::npos) {
            throw std::invalid_argument(p);
          }
          std::size_t used = 0;
          i = std::stoul(p.substr(0, colon), &used);
          if (used != colon) {
            throw std::invalid_argument(p);
          }
          j = std::stoul(p.substr(colon + 1), &used);
          if (used != p.size() - colon - 1) {
            throw std::invalid_argument(p);
          }
        } catch (std::exception const&) {
          throw UsageError("bad map pair \"" + p + "\", expected i:j");
        }
        if (i >= s.order() || j >= t.order()) {
          throw UsageError("map pair \"" + p + "\" out of range");
        }
        if (map[i] != static_cast<Index>(-1)) {
          throw UsageError("element " + std::to_string(i) + " mapped twice");
        }
        map[i] = static_cast<Index>(j);
      }
      for (Index i = 0; i < map.size(); ++i) {
        if (map[i] == static_cast<Index>(-1)) {
          throw UsageError("no image given for element " + std::to_string(i));
        }
      }
      auto const cls = check_morphism({s, t, map});
      std::string kind = !cls.is_morphism      ? "not a morphism"
                         : cls.is_isomorphism() ? "isomorphism"
                         : cls.is_embedding()   ? "embedding"
                                                : "morphism";
      r.body["verdict"]    = cls.is_morphism ? "morphism" : "not_morphism";
      r.body["class"]      = kind;
      r.body["injective"]  = cls.injective;
      r.body["surjective"] = cls.surjective;
      r.body["violation"]  = cls.violation
                                 ? json{cls.violation->first, cls.violation->second}
                                 : json(nullptr);
      r.say(kind);
      r.say(std::string("injective: ") + (cls.injective ? "yes" : "no")
            + ", surjective: " + (cls.surjective ? "yes" : "no"));
      if (cls.violation) {
        auto const [x, y] = *cls.violation;
        r.say("violation at (" + s.label(x) + ", " + s.label(y) + "): "
              + t.label(map[s(x, y)]) + " != " + t.label(t(map[x], map[y])));
      }
      return cls.is_morphism ? exit_yes : exit_no;
    }

    void division_json(Report&                     r,
                       CayleyTable const&          s,
                       CayleyTable const&          t,
                       DivisionResult const&       d) {
      r.body["verdict"] = std::string(to_string(d.verdict));
      r.body["nodes"]   = d.nodes;
      r.say(std::string("divides: ") + std::string(to_string(d.verdict)));
      if (d.witness) {
        r.body["subsemigroup"] = d.witness->subsemigroup;
        r.body["map"]          = d.witness->map;
        r.say("subsemigroup: " + join(labels_of(t, d.witness->subsemigroup)));
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < d.witness->map.size(); ++i) {
          parts.push_back(t.label(d.witness->subsemigroup[i]) + "->"
                          + s.label(d.witness->map[i]));
        }
        r.say("map: " + join(parts));
      }
    }

    int cmd_divides(Report& r, std::string const& src, std::string const& dst, Globals const& g) {
      auto const s = load_table(src);
      auto const t = load_table(dst);
      auto const d = divides(s, t, {g.budget}, g.workers);
      division_json(r, s, t, d);
      return verdict_code(d.verdict);
    }

    int cmd_universal(Report&            r,
                      std::string const& path,
                      std::size_t        n,
                      std::string const& mode,
                      bool               allow_large,
                      Globals const&     g) {
      auto const model = load_table(path);
      auto const m     = mode == "divide" ? UniversalityMode::divide : UniversalityMode::embed;
      auto const v = [&] {
        try {
          return is_universal(model, n, m, {{g.budget}, g.workers, allow_large});
        } catch (ArgError const& e) {
          throw UsageError(e.what());
        }
      }();
      r.body["verdict"] = std::string(to_string(v.verdict));
      r.body["n"]       = n;
      r.body["mode"]    = mode;
      r.body["nodes"]   = v.nodes;
      r.say("universal for T_" + std::to_string(n) + " (" + mode
            + "): " + std::string(to_string(v.verdict)));
      if (v.embedding) {
        r.body["embedding"] = v.embedding->map;
        r.say("embedding: " + render_map(v.embedding->source, model, v.embedding->map));
      }
      if (v.division) {
        r.body["subsemigroup"] = v.division->subsemigroup;
        r.body["map"]          = v.division->map;
        r.say("subsemigroup: " + join(labels_of(model, v.division->subsemigroup)));
      }
      return verdict_code(v.verdict);
    }

    int cmd_interpret(Report&            r,
                      std::string const& fn_path,
                      std::string const& sgp_path,
                      Globals const&     g) {
      auto const fn = load(fn_path, [](std::istream& in) { return parse_function_table(in); });
      auto const s  = load_table(sgp_path);
      auto const res = [&] {
        try {
          return find_interpretation(fn, s, {g.budget});
        } catch (ArgError const& e) {
          throw UsageError(e.what());
        }
      }();
      r.body["verdict"] = std::string(to_string(res.verdict));
      r.body["nodes"]   = res.nodes;
      r.say("interpretation: " + std::string(to_string(res.verdict)));
      if (res.witness) {
        r.body["encode"] = res.witness->encode;
        r.body["decode"] = res.witness->decode;
        std::vector<std::string> enc, dec;
        for (std::size_t a = 0; a < res.witness->encode.size(); ++a) {
          enc.push_back(std::to_string(a) + "->" + s.label(res.witness->encode[a]));
        }
        for (Index x = 0; x < s.order(); ++x) {
          dec.push_back(s.label(x) + "->" + std::to_string(res.witness->decode[x]));
        }
        r.say("encode: " + join(enc));
        r.say("decode: " + join(dec));
      }
      return verdict_code(res.verdict);
    }

    int cmd_automaton(Report& r, std::string const& path, std::string const& out, Globals const& g) {
      auto const a  = load(path, [](std::istream& in) { return parse_fsa(in); });
      auto const ts = transition_semigroup(a, {std::nullopt, false, g.workers});
      auto const& t = ts.closure.table;
      json letters  = json::object();
      r.body["verdict"] = "closed";
      r.body["order"]   = t.order();
      r.say("transition semigroup of order " + std::to_string(t.order()));
      for (std::size_t i = 0; i < a.letter_count(); ++i) {
        letters[a.letter_labels()[i]] = ts.letter_elements[i];
        r.say("  " + a.letter_labels()[i] + " -> " + t.label(ts.letter_elements[i]));
      }
      r.body["letters"] = letters;
      r.body["table"]   = table_json(t);
      emit_or_write(r, sgp_text(t), out);
      return exit_yes;
    }

    int cmd_wreath(Report&            r,
                   std::string const& bottom,
                   std::string const& top,
                   std::string const& out,
                   Globals const&     g) {
      ClosureOptions opts{std::nullopt, false, g.workers};
      auto const     b = load_transformations(bottom, opts);
      auto const     t = load_transformations(top, opts);
      try {
        auto const w = wreath_product(b, t, opts);
        r.body["verdict"] = "closed";
        r.body["order"]   = w.order();
        r.body["degree"]  = w.degree;
        r.say("wreath product of order " + std::to_string(w.order()) + " on "
              + std::to_string(w.degree) + " points");
        emit_or_write(r, sgp_text(w.table), out);
        return exit_yes;
      } catch (SizeExceeded const& e) {
        r.body["verdict"] = "size_exceeded";
        r.say(e.what());
        return exit_unknown;
      }
    }

    int cmd_product(Report& r, std::string const& a, std::string const& b, std::string const& out) {
      auto const s = load_table(a);
      auto const t = load_table(b);
      try {
        auto const p      = direct_product(s, t);
        r.body["verdict"] = "closed";
        r.body["order"]   = p.order();
        r.say("direct product of order " + std::to_string(p.order()));
        emit_or_write(r, sgp_text(p), out);
        return exit_yes;
      } catch (SizeExceeded const& e) {
        r.body["verdict"] = "size_exceeded";
        r.say(e.what());
        return exit_unknown;
      }
    }

    int cmd_influence(Report& r, std::string const& path) {
      auto const t   = load_table(path);
      auto const rel = influence_relation(t);
      json       inf = json::object();
      r.body["verdict"] = "computed";
      for (Index y = 0; y < t.order(); ++y) {
        std::vector<Index> moved;
        for (Index x = 0; x < t.order(); ++x) {
          if (rel.influences(y, x)) {
            moved.push_back(x);
          }
        }
        inf[t.label(y)] = labels_of(t, moved);
        r.say(t.label(y) + " influences: "
              + (moved.empty() ? std::string("nothing") : join(labels_of(t, moved))));
      }
      json one_way = json::array();
      for (auto const& [weak, strong] : rel.one_way) {
        one_way.push_back({t.label(weak), t.label(strong)});
        r.say("one-way: " + t.label(strong) + " influences " + t.label(weak)
              + " but not conversely");
      }
      r.body["influences"] = inf;
      r.body["one_way"]    = one_way;
      return exit_yes;
    }

    int cmd_export(Report& r, std::string const& path, std::string const& out, bool dot, Globals const& g) {
      std::ostringstream ss;
      if (is_gens_path(path)) {
        auto const c = load_transformations(path, {std::nullopt, false, g.workers});
        dot ? write_dot(ss, c.table, c.gen_indices) : write_lut(ss, c.table);
      } else {
        auto const t = load_table(path);
        dot ? write_dot(ss, t) : write_lut(ss, t);
      }
      r.body["verdict"] = "exported";
      r.body["format"]  = dot ? "dot" : "lut";
      emit_or_write(r, ss.str(), out);
      return exit_yes;
    }

    // The command line minus options that must not change the report.
    std::vector<std::string> echo_of(std::vector<std::string> const& args) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < args.size(); ++i) {
        auto const& a = args[i];
        if (a == "--workers") {
          ++i;
          continue;
        }
        if (a.rfind("--workers=", 0) == 0 || a == "--json" || a == "--timing") {
          continue;
        }
        out.push_back(a);
      }
      return out;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"semiwork: finite semigroups, morphisms and cascades"};
    app.name("semiwork");
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_flag("--timing", g.timing, "Report elapsed time");
    app.add_option("--budget", g.budget, "Search node budget")->check(CLI::PositiveNumber);
    app.add_option("--workers", g.workers, "Worker threads (output does not depend on it)")
        ->check(CLI::Range(1u, 1024u));

    std::string                file, file2, out_path, mode = "embed";
    std::vector<std::string>   pairs;
    std::optional<std::size_t> max_size;
    std::size_t                limit = 0, degree = 0;
    bool                       light = false, allow_large = false;

    auto* validate = app.add_subcommand("validate", "Check a .sgp table");
    validate->add_option("table", file, "Table file")->required();
    validate->add_flag("--light", light, "Use Light's associativity test");

    auto* clos = app.add_subcommand("closure", "Close a .gens generator set");
    clos->add_option("gens", file, "Generator file")->required();
    clos->add_option("--max-size", max_size, "Element cap");
    clos->add_flag("--allow-large", allow_large, "Permit degree above 8");
    clos->add_option("--out", out_path, "Write the table as .sgp");

    auto* embed = app.add_subcommand("embed", "Find embeddings of one table into another");
    embed->add_option("source", file, "Source table")->required();
    embed->add_option("target", file2, "Target table")->required();
    embed->add_option("--limit", limit, "Stop after this many (0 = all)");

    auto* mcheck = app.add_subcommand("morph-check", "Classify an explicit map");
    mcheck->add_option("source", file, "Source table")->required();
    mcheck->add_option("target", file2, "Target table")->required();
    mcheck->add_option("pairs", pairs, "i:j pairs")->required();

    auto* div = app.add_subcommand("divides", "Does the first table divide the second?");
    div->add_option("source", file, "Divisor table")->required();
    div->add_option("target", file2, "Dividend table")->required();

    auto* uni = app.add_subcommand("universal", "Does a model implement T_n?");
    uni->add_option("model", file, "Model table")->required();
    uni->add_option("--n", degree, "Degree n")->required();
    uni->add_option("--mode", mode, "embed or divide")
        ->check(CLI::IsMember({"embed", "divide"}));
    uni->add_flag("--allow-large", allow_large, "Permit n above 4");

    auto* interp = app.add_subcommand("interpret", "Realize a function through encodings");
    interp->add_option("function", file, "Function table")->required();
    interp->add_option("table", file2, "Semigroup table")->required();

    auto* fsa = app.add_subcommand("automaton", "Transition semigroup of an .fsa");
    fsa->add_option("fsa", file, "Automaton file")->required();
    fsa->add_option("--out", out_path, "Write the table as .sgp");

    auto* wreath = app.add_subcommand("wreath", "Two-level cascade (bottom under top)");
    wreath->add_option("bottom", file, "Bottom component (.sgp or .gens)")->required();
    wreath->add_option("top", file2, "Top component (.sgp or .gens)")->required();
    wreath->add_option("--out", out_path, "Write the table as .sgp");

    auto* prod = app.add_subcommand("product", "Direct product");
    prod->add_option("a", file, "First table")->required();
    prod->add_option("b", file2, "Second table")->required();
    prod->add_option("--out", out_path, "Write the table as .sgp");

    auto* infl = app.add_subcommand("influence", "Influence relation of a table");
    infl->add_option("table", file, "Table file")->required();

    auto* lut = app.add_subcommand("export-lut", "Composition table as x y -> xy lines");
    lut->add_option("table", file, "Table (.sgp) or generators (.gens)")->required();
    lut->add_option("--out", out_path, "Output file");

    auto* dot = app.add_subcommand("export-dot", "Right Cayley graph in DOT");
    dot->add_option("table", file, "Table (.sgp) or generators (.gens)")->required();
    dot->add_option("--out", out_path, "Output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_yes;
    } catch (CLI::ParseError const& e) {
      err << "semiwork: " << e.what() << '\n';
      return e.get_exit_code() == 0 ? exit_yes : exit_usage;
    }

    auto const start = std::chrono::steady_clock::now();
    Report     r;
    int        code;
    try {
      if (validate->parsed()) {
        code = cmd_validate(r, file, light, g);
      } else if (clos->parsed()) {
        code = cmd_closure(r, file, max_size, allow_large, out_path, g);
      } else if (embed->parsed()) {
        code = cmd_embed(r, file, file2, limit, g);
      } else if (mcheck->parsed()) {
        code = cmd_morph_check(r, file, file2, pairs);
      } else if (div->parsed()) {
        code = cmd_divides(r, file, file2, g);
      } else if (uni->parsed()) {
        code = cmd_universal(r, file, degree, mode, allow_large, g);
      } else if (interp->parsed()) {
        code = cmd_interpret(r, file, file2, g);
      } else if (fsa->parsed()) {
        code = cmd_automaton(r, file, out_path, g);
      } else if (wreath->parsed()) {
        code = cmd_wreath(r, file, file2, out_path, g);
      } else if (prod->parsed()) {
        code = cmd_product(r, file, file2, out_path);
      } else if (infl->parsed()) {
        code = cmd_influence(r, file);
      } else if (lut->parsed()) {
        code = cmd_export(r, file, out_path, false, g);
      } else {
        code = cmd_export(r, file, out_path, true, g);
      }
    } catch (InputError const& e) {
      err << "semiwork: " << e.what() << '\n';
      return exit_malformed;
    } catch (UsageError const& e) {
      err << "semiwork: " << e.what() << '\n';
      return exit_usage;
    } catch (SizeExceeded const& e) {
      err << "semiwork: " << e.what() << '\n';
      return exit_unknown;
    } catch (ArgError const& e) {
      err << "semiwork: " << e.what() << '\n';
      return exit_usage;
    }
    auto const elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    r.body["command"] = echo_of(args);
    if (g.budget != SearchBudget{}.max_nodes || r.body.contains("nodes")) {
      r.body["budget"] = g.budget;
    }
    if (g.timing) {
      r.body["elapsed_ms"] = elapsed;
    }
    if (g.json) {
      out << r.body.dump(2) << '\n';
    } else {
      for (auto const& line : r.lines) {
        out << line << '\n';
      }
      out << r.payload;
      if (g.timing) {
        out << "elapsed: " << elapsed << " ms\n";
      }
    }
    return code;
  }

}  // namespace semiwork::cli
