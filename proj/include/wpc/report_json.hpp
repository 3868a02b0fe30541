#pragma once

#include <string>

#include "wpc/graph.hpp"
#include "wpc/harness.hpp"
#include "wpc/spectrum.hpp"

namespace wpc {

// Single-line JSON encodings used on standard output.

/// {"claim","n","scanned","in_hypothesis","counterexamples","elapsed_ms",...}
std::string report_json(const VerificationReport& r);

/// {"n","f","b","witnesses","strata","elapsed_ms"}
std::string extremal_json(const ExtremalRecord& r);

/// {"graph6","girth","circumference","per_vertex_lengths","wp_vertices",
///  "pancyclic_vertices","pancyclic_edges",...}; `edge_detail` adds the
/// per-edge spectra.
std::string analysis_json(const Graph& g, const PancyclicityReport& rep, bool edge_detail);

}  // namespace wpc
