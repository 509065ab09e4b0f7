#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nestplan/bubbles.hpp"
#include "nestplan/errors.hpp"
#include "nestplan/export.hpp"
#include "nestplan/generators.hpp"
#include "nestplan/oracle.hpp"
#include "nestplan/pmfg.hpp"

namespace nestplan::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read file '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

PlanarGraph load_graph(const std::string& path, std::istream& in) {
  PlanarGraph g = parse_edge_list(read_input(path, in));
  auto report = validate_maximal_planar(g);
  if (!report.accepted()) throw ValidationError("invalid graph: " + report.message);
  return g;
}

/// First token that is neither a flag nor the value of a global option.
std::optional<std::string> first_word(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--format" || a == "--tie-break" || a == "--out") {
      ++i;
      continue;
    }
    if (!a.empty() && a[0] != '-') return a;
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nested 3-clique and bubble hierarchies of maximal planar graphs", "nestplan"};
  app.require_subcommand(1);

  std::optional<io::Format> format;
  std::string tie_break = "min";
  std::string out_path;
  const std::map<std::string, io::Format> formats{
      {"json", io::Format::Json}, {"dot", io::Format::Dot}, {"edgelist", io::Format::EdgeList}};
  app.add_option("--format", format, "Output format: json, dot or edgelist")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--tie-break", tie_break, "Interior on equal split: min or max")
      ->check(CLI::IsMember({"min", "max"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "Print a summary of the decomposition");
  analyze->add_option("file", input, "Edge-list file, '-' for stdin")->required();
  auto* hierarchy = app.add_subcommand("hierarchy", "Emit the 3-clique hierarchy H");
  hierarchy->add_option("file", input, "Edge-list file, '-' for stdin")->required();
  auto* bubbles = app.add_subcommand("bubbles", "Emit the bubbles and their tree");
  bubbles->add_option("file", input, "Edge-list file, '-' for stdin")->required();
  auto* verify = app.add_subcommand("verify", "Run the brute-force invariant suite");
  verify->add_option("file", input, "Edge-list file, '-' for stdin")->required();
  auto* pmfg = app.add_subcommand("pmfg", "Build a PMFG from a CSV weight matrix");
  pmfg->add_option("csv", input, "CSV file, '-' for stdin")->required();

  std::string kind;
  int gen = 3;
  int n = 10;
  std::uint64_t seed = 1;
  std::string name = "k4";
  auto* generate = app.add_subcommand("generate", "Write a generated maximal planar graph");
  generate->add_option("kind", kind, "apollonian, two-bubble, equal-split, random or named")
      ->required()
      ->check(CLI::IsMember({"apollonian", "two-bubble", "equal-split", "random", "named"}));
  generate->add_option("--gen", gen, "Apollonian generation");
  generate->add_option("--n", n, "Vertex count for random");
  generate->add_option("--seed", seed, "Seed for random");
  generate->add_option("--name", name, "k4, octahedron or icosahedron");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (auto word = first_word(args); word && !app.get_subcommand_no_throw(*word)) {
      err << "error: unknown subcommand '" << *word << "'\n";
      return kUsage;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const TieBreakPolicy policy =
      tie_break == "max" ? TieBreakPolicy::LargestMinVertexIn : TieBreakPolicy::SmallestMinVertexIn;

  try {
    std::string result;
    int status = kOk;
    if (analyze->parsed()) {
      PlanarGraph g = load_graph(input, in);
      auto summary = io::summarize(g, decompose(g, policy));
      if (format && *format != io::Format::Json) throw UsageError("analyze supports only --format json");
      result = format ? io::summary_json(summary) : io::summary_text(summary);
    } else if (hierarchy->parsed()) {
      PlanarGraph g = load_graph(input, in);
      result = io::write_hierarchy(g, analyze_hierarchy(g, policy), format.value_or(io::Format::Json));
    } else if (bubbles->parsed()) {
      PlanarGraph g = load_graph(input, in);
      result = io::write_bubbles(g, decompose(g, policy), format.value_or(io::Format::Json));
    } else if (verify->parsed()) {
      PlanarGraph g = load_graph(input, in);
      for (const auto& report : oracle::verify_all(g, policy)) {
        nlohmann::json line{{"check", report.name}, {"ok", report.ok()}, {"violations", report.violations}};
        result += line.dump() + "\n";
        if (!report.ok()) status = kValidationFailure;
      }
    } else if (pmfg->parsed()) {
      WeightMatrix m = parse_weight_csv(read_input(input, in));
      result = io::write_graph(build_pmfg(m), format.value_or(io::Format::EdgeList));
    } else if (generate->parsed()) {
      PlanarGraph g;
      if (kind == "apollonian") g = apollonian(gen);
      else if (kind == "two-bubble") g = two_bubble_example();
      else if (kind == "equal-split") g = equal_split_example();
      else if (kind == "random") g = random_triangulation(n, seed);
      else g = named_graph(name);
      result = io::write_graph(g, format.value_or(io::Format::EdgeList));
    }

    if (out_path.empty()) {
      out << result;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write file '" + out_path + "'");
      file << result;
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const ParseError& e) {
    err << "error: parse failed: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
}

}  // namespace nestplan::cli
