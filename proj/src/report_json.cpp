#include "wpc/report_json.hpp"

#include "json.hpp"

namespace wpc {
namespace {

using nlohmann::json;

json vertex_list(VertexSet s) {
  json out = json::array();
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

json edge_list(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

json optional_int(std::optional<int> v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string report_json(const VerificationReport& r) {
  json facts = json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  json j = {{"claim", r.claim},
            {"n", r.n},
            {"scanned", r.scanned},
            {"in_hypothesis", r.in_hypothesis},
            {"counterexamples", r.counterexamples},
            {"elapsed_ms", r.elapsed_ms},
            {"asserted", r.asserted},
            {"verified", r.verified()},
            {"facts", facts}};
  return j.dump();
}

std::string extremal_json(const ExtremalRecord& r) {
  json strata = json::array();
  for (const auto& s : r.strata) {
    strata.push_back({{"size", s.size}, {"scanned", s.scanned}, {"witnesses", s.witnesses}});
  }
  json j = {{"n", r.n},
            {"f", r.f_value},
            {"b", r.b_value},
            {"witnesses", r.witnesses},
            {"strata", strata},
            {"elapsed_ms", r.elapsed_ms}};
  return j.dump();
}

std::string analysis_json(const Graph& g, const PancyclicityReport& rep, bool edge_detail) {
  json per_vertex = json::array();
  for (const auto& s : rep.spectrum.vertex_lengths) per_vertex.push_back(s.to_vector());
  json j = {{"graph6", to_graph6(g)},
            {"order", g.order()},
            {"size", g.size()},
            {"bipartite", is_bipartite(g)},
            {"girth", optional_int(rep.spectrum.girth())},
            {"circumference", optional_int(rep.spectrum.circumference())},
            {"per_vertex_lengths", per_vertex},
            {"wp_vertices", vertex_list(rep.weakly_pancyclic_vertices)},
            {"pancyclic_vertices", vertex_list(rep.pancyclic_vertices)},
            {"pancyclic_edges", edge_list(rep.pancyclic_edges)},
            {"graph_pancyclic", rep.graph_pancyclic},
            {"graph_weakly_pancyclic", rep.graph_weakly_pancyclic}};
  if (edge_detail) {
    json per_edge = json::array();
    for (std::size_t i = 0; i < rep.edges.size(); ++i) {
      per_edge.push_back({{"edge", {rep.edges[i].u, rep.edges[i].v}}, {"lengths", rep.edge_lengths[i].to_vector()}});
    }
    j["per_edge_lengths"] = per_edge;
    j["wp_edges"] = edge_list(rep.weakly_pancyclic_edges);
  }
  return j.dump();
}

}  // namespace wpc
