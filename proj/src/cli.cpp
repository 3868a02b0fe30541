#include "wpc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wpc/canon.hpp"
#include "wpc/constructions.hpp"
#include "wpc/enumerate.hpp"
#include "wpc/harness.hpp"
#include "wpc/parallel.hpp"
#include "wpc/report_json.hpp"
#include "wpc/spectrum.hpp"

namespace wpc {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  int jobs = 0;
  std::string format = "json";
  bool table() const { return format == "table"; }
};

std::pair<int, int> parse_edge_range(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("bad --edges value '" + text + "'");
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const std::string_view all(text);
  const auto lo = all.substr(0, colon), hi = all.substr(colon + 1);
  return {lo.empty() ? 0 : parse_int(lo), hi.empty() ? -1 : parse_int(hi)};
}

void print_report(const VerificationReport& r, const Globals& g, std::ostream& out) {
  if (!g.table()) {
    out << report_json(r) << '\n';
    return;
  }
  out << "claim          " << r.claim << "\n"
      << "n              " << r.n << "\n"
      << "scanned        " << r.scanned << "\n"
      << "in hypothesis  " << r.in_hypothesis << "\n"
      << "counterexamples " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) out << "  " << c << "\n";
  for (const auto& [k, v] : r.facts) out << k << " = " << v << "\n";
  out << (r.verified() ? "verified" : (r.asserted ? "FAILED" : "reported")) << " in " << r.elapsed_ms << " ms\n";
}

std::string read_all(const std::string& file, std::istream& in) {
  if (file == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(file);
  if (!f) throw UsageError("cannot open " + file);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cmd_analyze(const std::string& file, bool edge_detail, const Globals& g, std::istream& in,
                std::ostream& out) {
  const std::string text = read_all(file, in);
  std::vector<Graph> graphs;
  std::istringstream lines(text);
  std::string line;
  for (int lineno = 1; std::getline(lines, line); ++lineno) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(from_graph6(line));
    } catch (const Graph6Error& e) {
      throw UsageError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (graphs.back().order() > kMaxSpectrumOrder) {
      throw UsageError("line " + std::to_string(lineno) + ": order above " + std::to_string(kMaxSpectrumOrder) +
                       " is beyond the exact spectrum limit");
    }
  }
  for (const auto& graph : graphs) {
    const auto rep = classify_pancyclicity(graph);
    if (!g.table()) {
      out << analysis_json(graph, rep, edge_detail) << '\n';
      continue;
    }
    auto show = [](std::optional<int> v) { return v ? std::to_string(*v) : std::string("-"); };
    out << to_graph6(graph) << "  n=" << graph.order() << " m=" << graph.size()
        << " girth=" << show(rep.spectrum.girth()) << " circumference=" << show(rep.spectrum.circumference())
        << " wp=" << set_size(rep.weakly_pancyclic_vertices) << " pancyclic=" << set_size(rep.pancyclic_vertices)
        << " pancyclic_edges=" << rep.pancyclic_edges.size() << "\n";
  }
  return kExitOk;
}

int cmd_construct(const std::string& family, std::optional<int> n, std::optional<int> s, std::optional<int> t,
                  std::optional<int> k, std::ostream& out) {
  auto need = [&](std::optional<int> v, const char* flag) {
    if (!v) throw UsageError("construct " + family + " needs " + flag);
    return *v;
  };
  Graph graph;
  if (family == "bt") {
    graph = bt(need(n, "--n"));
  } else if (family == "gn") {
    graph = gn(need(n, "--n"));
  } else if (family == "kst") {
    graph = complete_bipartite(need(s, "--s"), need(t, "--t"));
  } else {
    graph = cycle_graph(k ? *k : need(n, "--k"));
  }
  out << to_graph6(graph) << '\n';
  return kExitOk;
}

int cmd_enumerate(const EnumFilter& filter, bool count_only, const Globals& g, std::ostream& out) {
  const EnumFilter f = normalised(filter);
  if (f.order > kMaxEnumOrder) {
    throw UsageError("exhaustive enumeration is limited to n <= " + std::to_string(kMaxEnumOrder));
  }
  std::uint64_t total = 0;
  if (resolve_jobs(g.jobs) == 1) {
    total = enumerate(f, [&](const Graph& graph) {
      if (!count_only) out << to_graph6(graph) << '\n';
    });
  } else {
    const ShardPlan plan(f);
    auto parts = map_shards<std::vector<std::string>>(plan, g.jobs, [&](std::size_t i, std::vector<std::string>& lines) {
      plan.run(i, [&](const Graph& graph) {
        lines.push_back(count_only ? std::string() : to_graph6(graph));
      });
    });
    for (const auto& lines : parts) {
      total += lines.size();
      if (count_only) continue;
      for (const auto& l : lines) out << l << '\n';
    }
  }
  if (count_only) {
    if (g.table()) {
      out << total << '\n';
    } else {
      out << "{\"n\":" << f.order << ",\"size_min\":" << f.size_min << ",\"size_max\":" << f.size_max
          << ",\"nonbipartite\":" << (f.nonbipartite_only ? "true" : "false")
          << ",\"connected\":" << (f.connected_only ? "true" : "false") << ",\"count\":" << total << "}\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& claim, int n, std::uint64_t samples, std::uint64_t seed, const Globals& g,
               std::ostream& out) {
  RunOptions opts;
  opts.jobs = g.jobs;
  VerificationReport r;
  if (claim == "thm1") {
    r = verify_hamiltonian_pancyclic(n, opts);
  } else if (claim == "thm2") {
    r = verify_weakly_pancyclic(n, opts);
  } else if (claim == "thm3") {
    r = verify_three_wp_vertices(n, opts);
  } else if (claim == "thm4") {
    r = verify_gn_family(n);
  } else if (claim == "lemma5") {
    r = verify_longest_cycles(n, opts);
  } else {
    r = n <= 4 ? verify_bipartite_paths(n, opts) : verify_bipartite_paths_sampled(n, samples, seed);
  }
  print_report(r, g, out);
  return r.verified() ? kExitOk : kExitCounterexample;
}

int cmd_search_f(int n, const std::string& resume, const Globals& g, std::ostream& out, std::ostream& err) {
  const auto rec = compute_f(n, {.jobs = g.jobs, .resume_dir = resume, .progress = &err});
  if (!g.table()) {
    out << extremal_json(rec) << '\n';
    return kExitOk;
  }
  out << "n = " << rec.n << "\nf(n) = " << rec.f_value << "\nb(n) = " << rec.b_value << "\n";
  for (const auto& s : rec.strata) out << "  size " << s.size << ": " << s.scanned << " scanned, " << s.witnesses << " witnesses\n";
  for (const auto& w : rec.witnesses) out << "  witness " << w << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle spectra, pancyclicity and exhaustive checks on small graphs", "wpc"};
  app.require_subcommand(1, 1);
  Globals globals;
  app.add_option("--jobs", globals.jobs, "Worker threads for sharded scans (default: all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", globals.format, "Output format; json is the stable contract")
      ->check(CLI::IsMember({"json", "table"}));

  auto* analyze = app.add_subcommand("analyze", "Cycle spectra of graph6 lines")->fallthrough();
  bool edge_detail = false;
  std::string input = "-";
  analyze->add_flag("--vertex-spectra", edge_detail, "Also emit per-edge spectra and weakly pancyclic edges");
  analyze->add_option("file", input, "graph6 file, or - for standard input");

  auto* construct = app.add_subcommand("construct", "Emit one named graph as graph6")->fallthrough();
  std::string family;
  std::optional<int> cn, cs, ct, ck;
  construct->add_option("family", family, "bt | gn | kst | cycle")
      ->required()
      ->check(CLI::IsMember({"bt", "gn", "kst", "cycle"}));
  construct->add_option("--n", cn, "Order");
  construct->add_option("--s", cs, "First part of K_{s,t}");
  construct->add_option("--t", ct, "Second part of K_{s,t}");
  construct->add_option("--k", ck, "Cycle length");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "One graph per isomorphism class")->fallthrough();
  EnumFilter filter;
  std::string edges;
  bool count_only = false, emit = false;
  enumerate_cmd->add_option("--n", filter.order, "Order")->required()->check(CLI::Range(0, kMaxEnumOrder));
  enumerate_cmd->add_option("--edges", edges, "Edge-count range A:B");
  enumerate_cmd->add_flag("--nonbipartite", filter.nonbipartite_only, "Only graphs with an odd cycle");
  enumerate_cmd->add_flag("--connected", filter.connected_only, "Only connected graphs");
  auto* count_flag = enumerate_cmd->add_flag("--count", count_only, "Print the class count");
  auto* emit_flag = enumerate_cmd->add_flag("--emit", emit, "Print graph6 lines");
  count_flag->excludes(emit_flag);

  auto* verify = app.add_subcommand("verify", "Exhaustive check of one claim")->fallthrough();
  std::string claim;
  int vn = 0;
  std::uint64_t samples = 10000, seed = 1;
  verify->add_option("claim", claim, "thm1 | thm2 | thm3 | thm4 | lemma5 | lemma7")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "thm4", "lemma5", "lemma7"}));
  verify->add_option("--n,--k", vn, "Order (for lemma7: k, the order is 2k)")->required();
  verify->add_option("--samples", samples, "lemma7 with k >= 5: random samples");
  verify->add_option("--seed", seed, "lemma7 with k >= 5: sampling seed");

  auto* search = app.add_subcommand("search-f", "Compute f(n) by a descending size scan")->fallthrough();
  int fn = 0;
  std::string resume;
  search->add_option("--n", fn, "Order")->required();
  search->add_option("--resume", resume, "Checkpoint directory; finished shards are reused");

  auto* conjecture = app.add_subcommand("conjecture", "Scan an open conjecture")->fallthrough();
  std::string which;
  int conj_n = 0;
  conjecture->add_option("which", which, "pancyclic-edge")->required()->check(CLI::IsMember({"pancyclic-edge"}));
  conjecture->add_option("--n", conj_n, "Order")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(input, edge_detail, globals, in, out);
    if (construct->parsed()) return cmd_construct(family, cn, cs, ct, ck, out);
    if (enumerate_cmd->parsed()) {
      if (!count_only && !emit) throw UsageError("enumerate needs --count or --emit");
      if (!edges.empty()) std::tie(filter.size_min, filter.size_max) = parse_edge_range(edges);
      return cmd_enumerate(filter, count_only, globals, out);
    }
    if (verify->parsed()) return cmd_verify(claim, vn, samples, seed, globals, out);
    if (search->parsed()) return cmd_search_f(fn, resume, globals, out, err);
    if (conjecture->parsed()) {
      RunOptions opts;
      opts.jobs = globals.jobs;
      const auto r = scan_pancyclic_edges(conj_n, opts);
      print_report(r, globals, out);
      return r.side_conditions_hold ? kExitOk : kExitCounterexample;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wpc
