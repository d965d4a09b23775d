#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphex/census.hpp"
#include "graphex/measures.hpp"
#include "graphex/multigraph.hpp"
#include "graphex/multigraphex.hpp"
#include "graphex/sampling.hpp"

namespace graphex {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string hex_encode(std::string_view bytes);

// {"n": int, "edges": [[u, v, mult], ...]} with u <= v.
std::string multigraph_to_json(const Multigraph& g);
Multigraph multigraph_from_json(const std::string& text);

// {"total": N, "classes": {"<hex key>": {"count": c, "n": v,
//  "edges": [[u,v,mult],...]}}} with a representative edge list per class.
std::string census_to_json(const Census& c);
// Row-per-class dump: key,count,frequency,n_vertices,edges.
std::string census_to_csv(const Census& c);

// Header line "window,<s>", then "x,y,mult" rows.
std::string adjacency_to_csv(const AdjacencyMeasure& xi);
AdjacencyMeasure adjacency_from_csv(const std::string& text);

// {"atoms": [[x, mass], ...], "a": optional drift}.
std::string measure_to_json(const DiscreteMeasure& rho, std::optional<double> drift = std::nullopt);
std::pair<DiscreteMeasure, std::optional<double>> measure_from_json(const std::string& text);
// CSV with columns x,mass.
std::string measure_to_csv(const DiscreteMeasure& rho);
DiscreteMeasure measure_from_csv(const std::string& text);

// One value per line, or a JSON array.
std::vector<uint32_t> read_degrees(const std::string& path);
std::vector<double> read_weights(const std::string& path);

// Tagged union mirroring the variant list, e.g.
//   {"variant":"rank_one","rho":{"atoms":[[1.0,0.5]]},"a":0.5}
//   {"variant":"erased_rank_one","rho":{...},"a":..,"c":..}
//   {"variant":"grg_kernel","rho_w":{...},"a":..,"C":..}
//   {"variant":"bipartite","rho1":{...},"rho2":{...},"a1":..,"a2":..}
//   {"variant":"pure_dust","I":..}
//   {"variant":"generic","kernel":"<named>","feature_cutoff":..}
// plus an optional "scale". Generic kernels are addressed by name; only named
// built-ins are deserializable.
std::string graphex_to_json(const Multigraphex& wx);
Multigraphex graphex_from_json(const std::string& text);

// Named generic kernels available to spec files (used mostly to probe the
// validator): "const_one" is W(x,y,1) = 1 everywhere.
Multigraphex named_generic_graphex(const std::string& name, double feature_cutoff);

}  // namespace graphex
