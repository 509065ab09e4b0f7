#include <algorithm>
#include <set>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = nestplan::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string generated(std::vector<std::string> args) {
  args.insert(args.begin(), "generate");
  auto r = run(args);
  REQUIRE(r.code == 0);
  return r.out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nestplan_cli_" + name);
}

}  // namespace

TEST_CASE("two-bubble summary") {
  auto r = run({"analyze", "-"}, generated({"two-bubble"}));
  CHECK(r.code == 0);
  CHECK(r.out.find("bubbles: 2\n") != std::string::npos);
  CHECK(r.out.find("separating: 1\n") != std::string::npos);
  CHECK(r.out.find("vertices: 7\n") != std::string::npos);

  auto j = run({"analyze", "-", "--format", "json"}, generated({"two-bubble"}));
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["bubbles"] == 2);
  CHECK(parsed["max_depth"] == 1);
  CHECK(run({"analyze", "-", "--format", "dot"}, generated({"named", "--name", "k4"})).code == 2);
}

TEST_CASE("k4 bubbles as json") {
  auto r = run({"bubbles", "-", "--format", "json"}, generated({"named", "--name", "k4"}));
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["bubbles"].size() == 1);
  CHECK(j["bubbles"][0]["id"] == 0);
  CHECK(j["bubbles"][0]["root_clique"] == "imaginary");
  CHECK(j["bubbles"][0]["vertices"].size() == 4);
  CHECK(j["bubbles"][0]["cliques"].size() == 4);
  CHECK(j["tree"].empty());
}

TEST_CASE("two-bubble tree edge carries the shared clique") {
  auto r = run({"bubbles", "-"}, generated({"two-bubble"}));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["tree"].size() == 1);
  CHECK(j["tree"][0]["parent"] == 0);
  CHECK(j["tree"][0]["child"] == 1);
  CHECK(j["tree"][0]["shared_clique"] == nlohmann::json::array({"a", "c", "d"}));

  auto dot = run({"bubbles", "-", "--format", "dot"}, generated({"two-bubble"}));
  CHECK(dot.out.rfind("digraph Hb {", 0) == 0);
  CHECK(dot.out.find("b0 -> b1 [label=\"a,c,d\"];") != std::string::npos);
  auto edges = run({"bubbles", "-", "--format", "edgelist"}, generated({"two-bubble"}));
  CHECK(edges.out == "0 1\n");
}

TEST_CASE("hierarchy output") {
  auto r = run({"hierarchy", "-"}, generated({"two-bubble"}));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 11);
  int separating = 0, with_parent = 0;
  for (const auto& node : j) {
    separating += node["separating"].get<bool>() ? 1 : 0;
    if (!node["parent"].is_null()) {
      ++with_parent;
      CHECK(node["parent"] == nlohmann::json::array({"a", "c", "d"}));
      CHECK(node["depth"] == 1);
    }
  }
  CHECK(separating == 1);
  CHECK(with_parent == 3);

  auto dot = run({"hierarchy", "-", "--format", "dot"}, generated({"named", "--name", "k4"}));
  CHECK(dot.out.rfind("digraph H {", 0) == 0);
  CHECK(dot.out.find("->") == std::string::npos);
  auto el = run({"hierarchy", "-", "--format", "edgelist"}, generated({"apollonian", "--gen", "2"}));
  CHECK(std::count(el.out.begin(), el.out.end(), '\n') == 9);
}

TEST_CASE("verify") {
  auto r = run({"verify", "-"}, generated({"apollonian", "--gen", "3"}));
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["ok"] == true);
    CHECK(j["violations"].empty());
    ++count;
  }
  CHECK(count == 5);
  auto small = run({"verify", "-", "--tie-break", "max"}, generated({"two-bubble"}));
  CHECK(small.code == 0);
  CHECK(std::count(small.out.begin(), small.out.end(), '\n') == 6);
}

TEST_CASE("generate formats and round trip") {
  for (std::vector<std::string> kind :
       {std::vector<std::string>{"apollonian", "--gen", "4"}, {"two-bubble"}, {"equal-split"},
        {"random", "--n", "25", "--seed", "3"}, {"named", "--name", "octahedron"},
        {"named", "--name", "icosahedron"}}) {
    auto text = generated(kind);
    CHECK(run({"analyze", "-"}, text).code == 0);
  }
  CHECK(generated({"random", "--n", "20", "--seed", "5"}) == generated({"random", "--n", "20", "--seed", "5"}));
  auto j = nlohmann::json::parse(generated({"named", "--name", "k4", "--format", "json"}));
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 6);
  auto dot = generated({"named", "--name", "k4", "--format", "dot"});
  CHECK(dot.rfind("graph G {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 12);
}

TEST_CASE("tie-break flag changes orientation but not bubbles") {
  auto text = generated({"equal-split"});
  auto a = nlohmann::json::parse(run({"bubbles", "-", "--tie-break", "min"}, text).out);
  auto b = nlohmann::json::parse(run({"bubbles", "-", "--tie-break", "max"}, text).out);
  std::set<std::vector<std::string>> va, vb;
  for (const auto& x : a["bubbles"]) va.insert(x["vertices"].get<std::vector<std::string>>());
  for (const auto& x : b["bubbles"]) vb.insert(x["vertices"].get<std::vector<std::string>>());
  CHECK(va == vb);
  auto ha = run({"hierarchy", "-", "--tie-break", "min"}, text).out;
  auto hb = run({"hierarchy", "-", "--tie-break", "max"}, text).out;
  CHECK(ha != hb);
  CHECK(run({"bubbles", "-", "--tie-break", "median"}, text).code == 2);
}

TEST_CASE("pmfg subcommand") {
  const std::string csv =
      ",w,x,y,z,v\n"
      "w,1,0.9,0.1,0.2,0.3\n"
      "x,0.9,1,0.4,0.5,0.6\n"
      "y,0.1,0.4,1,0.7,0.8\n"
      "z,0.2,0.5,0.7,1,0.35\n"
      "v,0.3,0.6,0.8,0.35,1\n";
  auto r = run({"pmfg", "-"}, csv);
  REQUIRE(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);
  CHECK(r.out.find("w y") == std::string::npos);  // weakest pair
  CHECK(run({"analyze", "-"}, r.out).code == 0);
  CHECK(run({"pmfg", "-"}, "1,0.9\n0.8,1\n").code == 1);
  CHECK(run({"pmfg", "-"}, "1,0,0\n0,1,0\n0,0,1\n").code == 2);
}

TEST_CASE("exit codes and messages") {
  auto bad_graph = run({"analyze", "-"}, "0 1\n1 2\n2 0\n");
  CHECK(bad_graph.code == 1);
  CHECK(bad_graph.err.find("invalid graph") != std::string::npos);

  auto parse = run({"analyze", "-"}, "0 1\n1 1\n");
  CHECK(parse.code == 1);
  CHECK(parse.err.find("line 2") != std::string::npos);

  auto missing = run({"analyze", "/nonexistent/graph.txt"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot read") != std::string::npos);

  auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown subcommand 'frobnicate'") != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"generate", "hexagon"}).code == 2);
  CHECK(run({"generate", "apollonian", "--gen", "0"}).code == 2);
  CHECK(run({"generate", "named", "--name", "cube"}).code == 2);
  CHECK(run({"bubbles", "-", "--format", "svg"}, generated({"named", "--name", "k4"})).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output file") {
  auto path = temp_path("out.txt");
  std::filesystem::remove(path);
  auto r = run({"generate", "two-bubble", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  auto from_file = run({"analyze", path.string()});
  CHECK(from_file.code == 0);
  CHECK(from_file.out.find("bubbles: 2") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(run({"generate", "two-bubble", "--out", "/nonexistent/dir/x"}).code == 2);
}
