#pragma once

// Subcommand dispatch for the morseflow command-line tool. Exit codes:
// 0 success, 1 inadmissible flow or oracle mismatch, 2 malformed input.

#include "morseflow/morseflow.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace morseflow::cli {

enum class Format { Human, Json };

namespace detail {

inline std::string describe_group(const Integer& rank, const std::vector<Integer>& torsion) {
  std::string out;
  if (rank == 1)
    out = "Z";
  else if (rank > 1)
    out = "Z^" + rank.str();
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  return out.empty() ? "0" : out;
}

inline void print_groups(std::ostream& out, const GradedGroup& h, int top) {
  for (int i = 0; i <= top; ++i)
    out << "H_" << i << " = " << describe_group(h.rank(i), h.torsion(i)) << '\n';
}

inline Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": malformed JSON: " + e.what());
  }
}

} // namespace detail

/// Runs one invocation. `args` excludes the program name. When no --format
/// is given, human output is used on a terminal and JSON otherwise.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               bool stdout_is_terminal = false) {
  CLI::App app{"Homology of sphere-bundle connected sums and constraints on gradient-like flows",
               "morseflow"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format_name = "auto";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"auto", "human", "json"}));

  std::string expr_text;
  std::string path;
  int degree = 0;
  int n = 0, index = 0;
  std::int64_t g = 0, k_max = 0;

  auto* homology_cmd = app.add_subcommand("homology", "Integer homology of an expression");
  homology_cmd->add_option("expr", expr_text, "Manifold expression, e.g. \"Sng(4,2)\"")->required();
  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial of an expression");
  poincare_cmd->add_option("expr", expr_text)->required();
  auto* betti_cmd = app.add_subcommand("betti", "Single Betti number");
  betti_cmd->add_option("expr", expr_text)->required();
  betti_cmd->add_option("--degree", degree)->required();
  auto* check_cmd = app.add_subcommand("check-flow", "Validate a FlowSpec JSON document");
  check_cmd->add_option("spec", path, "Path to FlowSpec JSON, '-' for stdin")->required();
  auto* enum_cmd = app.add_subcommand("enumerate", "Combinatorially admissible count vectors");
  enum_cmd->add_option("--n", n)->required();
  enum_cmd->add_option("--g", g)->required();
  enum_cmd->add_option("--k-max", k_max)->required();
  auto* obstruction_cmd = app.add_subcommand("obstruction", "Middle-index saddle obstruction");
  obstruction_cmd->add_option("--n", n)->required();
  obstruction_cmd->add_option("--index", index)->required();
  obstruction_cmd->add_option("--g", g, "Genus")->capture_default_str();
  auto* oracle_cmd = app.add_subcommand("oracle", "Simplicial homology of a triangulated expression");
  oracle_cmd->add_option("expr", expr_text)->required();
  auto* complex_cmd = app.add_subcommand("oracle-complex", "Simplicial homology of a complex JSON");
  complex_cmd->add_option("complex", path, "Path to complex JSON, '-' for stdin")->required();
  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare closed-form and simplicial homology");
  cross_cmd->add_option("expr", expr_text)->required();

  std::vector<std::string> argv_store{"morseflow"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const Format format = format_name == "json"    ? Format::Json
                        : format_name == "human" ? Format::Human
                        : stdout_is_terminal     ? Format::Human
                                                 : Format::Json;
  const bool json = format == Format::Json;

  try {
    if (homology_cmd->parsed()) {
      const auto expr = parse_manifold(expr_text);
      const auto h = homology(expr);
      if (json)
        out << to_json(h).dump() << '\n';
      else
        detail::print_groups(out, h, expr.dimension());
      return 0;
    }
    if (poincare_cmd->parsed()) {
      const auto p = poincare_polynomial(parse_manifold(expr_text));
      if (json) {
        out << to_json(p).dump() << '\n';
      } else {
        out << "p(t) = " << p.to_string() << "\ncoefficients:";
        for (const auto& c : p.coefficients()) out << ' ' << c;
        out << '\n';
      }
      return 0;
    }
    if (betti_cmd->parsed()) {
      out << betti(parse_manifold(expr_text), degree) << '\n';
      return 0;
    }
    if (check_cmd->parsed()) {
      const auto spec = flow_spec_from_json(detail::read_json(path));
      const auto report = validate_flow(spec);
      if (json) {
        out << to_json(report).dump() << '\n';
      } else {
        out << "genus: "
            << (report.genus ? std::to_string(*report.genus)
                             : std::string(genus_error_tag(*report.genus_error)))
            << "\nk: " << report.k << '\n';
        for (const auto& c : report.checks)
          out << (c.pass ? "  pass  " : "  FAIL  ") << c.name
              << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
        out << (report.admissible ? "admissible" : "inadmissible") << '\n';
      }
      return report.admissible ? 0 : 1;
    }
    if (enum_cmd->parsed()) {
      const auto flows = enumerate_flows(n, g, k_max);
      if (!json)
        out << "# combinatorially admissible count vectors on S^" << n << "_" << g
            << " (necessary conditions only)\n";
      for (const auto& f : flows) {
        if (json) {
          out << to_json(f).dump() << '\n';
        } else {
          out << "k=" << f.k << "  c=(";
          for (std::size_t i = 0; i < f.counts.size(); ++i) out << (i ? "," : "") << f.counts[i];
          out << ")\n";
        }
      }
      return 0;
    }
    if (obstruction_cmd->parsed()) {
      const auto r = obstruction_check(n, index, g);
      const char* verdict = r.verdict == Verdict::Forbidden ? "Forbidden" : "Admissible";
      if (json)
        out << Json{{"n", n}, {"index", index}, {"g", g}, {"result", verdict}, {"reason", r.reason}}.dump()
            << '\n';
      else
        out << verdict << ": " << r.reason << '\n';
      return 0;
    }
    if (oracle_cmd->parsed() || cross_cmd->parsed()) {
      const auto expr = parse_manifold(expr_text);
      if (!oracle_constructible(expr)) {
        err << "error: '" << render(expr)
            << "' is outside the oracle's constructible family (dimension <= "
            << kOracleMaxDimension << " and at most " << kOracleMaxTopSimplices
            << " top simplices; this one has dimension " << expr.dimension() << " and needs "
            << triangulation_size(expr) << ")\n";
        return 2;
      }
      const auto complex = triangulate(expr);
      const auto oracle_h = simplicial_homology(complex);
      if (oracle_cmd->parsed()) {
        if (json) {
          auto doc = to_json(oracle_h);
          Json f_vector = Json::array();
          for (int i = 0; i <= complex.dimension(); ++i) f_vector.push_back(complex.count(i));
          doc["f_vector"] = f_vector;
          out << doc.dump() << '\n';
        } else {
          out << "triangulation: " << complex.vertices().size() << " vertices, "
              << complex.facets().size() << " facets\n";
          detail::print_groups(out, oracle_h, complex.dimension());
        }
        return 0;
      }
      const auto engine_h = homology(expr);
      bool all_match = true;
      Json degrees = Json::array();
      for (int i = 0; i <= expr.dimension(); ++i) {
        const bool match = engine_h.rank(i) == oracle_h.rank(i) && oracle_h.torsion(i).empty();
        all_match = all_match && match;
        if (json) {
          degrees.push_back(Json{{"degree", i},
                                 {"engine", integer_to_json(engine_h.rank(i))},
                                 {"oracle", integer_to_json(oracle_h.rank(i))},
                                 {"status", match ? "MATCH" : "MISMATCH"}});
        } else {
          out << "H_" << i << ": engine "
              << detail::describe_group(engine_h.rank(i), engine_h.torsion(i)) << ", oracle "
              << detail::describe_group(oracle_h.rank(i), oracle_h.torsion(i)) << "  "
              << (match ? "MATCH" : "MISMATCH") << '\n';
        }
      }
      if (json)
        out << Json{{"expression", render(expr)}, {"match", all_match}, {"degrees", degrees}}.dump()
            << '\n';
      return all_match ? 0 : 1;
    }
    if (complex_cmd->parsed()) {
      const auto complex = simplicial_complex_from_json(detail::read_json(path));
      const auto h = simplicial_homology(complex);
      if (json)
        out << to_json(h).dump() << '\n';
      else
        detail::print_groups(out, h, complex.dimension());
      return 0;
    }
  } catch (const std::exception& e) {
    // Every library error here stems from the input: grammar, domain, schema.
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

} // namespace morseflow::cli
