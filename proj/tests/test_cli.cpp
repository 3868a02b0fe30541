#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "wpc/cli.hpp"
#include "wpc/constructions.hpp"

using namespace wpc;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  for (std::string l; std::getline(ss, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("construct emits graph6") {
  const auto r = run({"construct", "bt", "--n", "8"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == to_graph6(bt(8)) + "\n");
  CHECK(run({"construct", "kst", "--s", "2", "--t", "3"}).out == to_graph6(complete_bipartite(2, 3)) + "\n");
  CHECK(run({"construct", "cycle", "--k", "5"}).out == "Dhc\n");
  CHECK(run({"construct", "gn", "--n", "9"}).out == to_graph6(gn(9)) + "\n");
  CHECK(run({"construct", "bt"}).code == kExitUsage);
  CHECK(run({"construct", "bt", "--n", "3"}).code == kExitUsage);
  CHECK(run({"construct", "wheel", "--n", "6"}).code == kExitUsage);
}

TEST_CASE("analyze reports spectra per line") {
  const std::string input = to_graph6(bt(8)) + "\n\nDhc\n";
  const auto r = run({"analyze", "-"}, input);
  REQUIRE(r.code == kExitOk);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  const auto b8 = json::parse(lines[0]);
  CHECK(b8["order"] == 8);
  CHECK(b8["size"] == b_threshold(8));
  CHECK(b8["girth"] == 3);
  CHECK(b8["circumference"] == 7);
  CHECK(b8["bipartite"] == false);
  CHECK(b8["wp_vertices"].size() == 2);
  CHECK(b8["per_vertex_lengths"].size() == 8);
  CHECK_FALSE(b8.contains("per_edge_lengths"));
  const auto c5 = json::parse(lines[1]);
  CHECK(c5["per_vertex_lengths"][0] == json::array({5}));
  CHECK(c5["graph_weakly_pancyclic"] == true);
  CHECK(c5["graph_pancyclic"] == false);

  const auto tree = json::parse(run({"analyze", "-"}, "Bg\n").out);
  CHECK(tree["girth"].is_null());
  CHECK(tree["circumference"].is_null());

  const auto detail = json::parse(run({"analyze", "--vertex-spectra", "-"}, "C~\n").out);
  CHECK(detail["per_edge_lengths"].size() == 6);
  CHECK(detail["per_edge_lengths"][0]["lengths"] == json::array({3, 4}));
  CHECK(detail["wp_edges"].size() == 6);

  const auto table = run({"--format", "table", "analyze", "-"}, "Dhc\n");
  CHECK(table.out.find("girth=5") != std::string::npos);
}

TEST_CASE("analyze rejects malformed graph6 with its line number") {
  const auto r = run({"analyze", "-"}, "C~\nDhd\n");
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run({"analyze", "/nonexistent/graphs.g6"}).code == kExitUsage);
}

TEST_CASE("enumerate counts and emits") {
  const auto c = run({"enumerate", "--n", "5", "--count"});
  REQUIRE(c.code == kExitOk);
  const auto j = json::parse(c.out);
  CHECK(j["count"] == 34);
  CHECK(j["size_max"] == 10);

  const auto parallel = run({"--jobs", "3", "enumerate", "--n", "5", "--count"});
  CHECK(json::parse(parallel.out)["count"] == 34);

  CHECK(json::parse(run({"enumerate", "--n", "4", "--nonbipartite", "--count"}).out)["count"] == 4);
  CHECK(json::parse(run({"enumerate", "--n", "4", "--edges", "3:3", "--count"}).out)["count"] == 3);

  const auto emitted = run({"enumerate", "--n", "4", "--emit"});
  const auto lines = lines_of(emitted.out);
  CHECK(lines.size() == 11);
  for (const auto& l : lines) CHECK(from_graph6(l).order() == 4);
  CHECK(lines_of(run({"--jobs", "2", "enumerate", "--n", "4", "--emit"}).out).size() == 11);

  CHECK(run({"enumerate", "--n", "13", "--count"}).code == kExitUsage);
  CHECK(run({"enumerate", "--n", "4", "--edges", "5:2", "--count"}).code == kExitUsage);
  CHECK(run({"enumerate", "--n", "4", "--edges", "banana", "--count"}).code == kExitUsage);
}

TEST_CASE("verify subcommands") {
  const auto r = run({"verify", "thm3", "--n", "7"});
  CHECK(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["claim"] == "thm3");
  CHECK(j["n"] == 7);
  CHECK(j["counterexamples"].empty());
  CHECK(j["verified"] == true);
  CHECK(j["facts"]["bt_wp_vertices"] == 2);
  CHECK(j["scanned"].get<int>() >= j["in_hypothesis"].get<int>());

  CHECK(run({"verify", "thm4", "--n", "12"}).code == kExitOk);
  CHECK(run({"verify", "lemma7", "--k", "3"}).code == kExitOk);
  CHECK(run({"verify", "lemma7", "--k", "5", "--samples", "50", "--seed", "4"}).code == kExitOk);
  CHECK(run({"verify", "thm1", "--n", "4"}).code == kExitUsage);
  CHECK(run({"verify", "thm9", "--n", "6"}).code == kExitUsage);
  CHECK(run({"verify", "thm1"}).code == kExitUsage);
  CHECK(run({"--format", "table", "verify", "thm2", "--n", "6"}).out.find("verified") != std::string::npos);
}

TEST_CASE("search-f and conjecture") {
  const auto f = run({"search-f", "--n", "6"});
  REQUIRE(f.code == kExitOk);
  const auto j = json::parse(f.out);
  CHECK(j["f"] == 8);
  CHECK(j["b"] == 8);
  CHECK_FALSE(j["witnesses"].empty());
  CHECK(f.err.find("size=") != std::string::npos);
  CHECK(run({"search-f", "--n", "2"}).code == kExitUsage);

  const auto c = run({"conjecture", "pancyclic-edge", "--n", "7"});
  CHECK(c.code == kExitOk);
  CHECK(json::parse(c.out)["asserted"] == false);
  CHECK(run({"conjecture", "other", "--n", "7"}).code == kExitUsage);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "construct", "bt", "--n", "6"}).code == kExitUsage);
  const auto h = run({"--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.err.find("search-f") != std::string::npos);
}
