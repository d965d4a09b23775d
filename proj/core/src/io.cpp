#include "graphex/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphex/errors.hpp"

namespace graphex {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << content;
}

std::string hex_encode(std::string_view bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    s.push_back(digits[c >> 4]);
    s.push_back(digits[c & 0xf]);
  }
  return s;
}

namespace {

json multigraph_to_json_obj(const Multigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.mult});
  return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Multigraph multigraph_from_json_obj(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back({e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>(), e.at(2).get<uint32_t>()});
  }
  return Multigraph(j.at("n").get<uint32_t>(), std::move(edges));
}

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError(std::string("invalid JSON in ") + what);
  return j;
}

}  // namespace

std::string multigraph_to_json(const Multigraph& g) { return multigraph_to_json_obj(g).dump(); }

Multigraph multigraph_from_json(const std::string& text) {
  return multigraph_from_json_obj(parse(text, "multigraph"));
}

std::string census_to_json(const Census& c) {
  json classes = json::object();
  for (const auto& [key, entry] : c.entries()) {
    json cls{{"count", entry.count}};
    if (entry.representative) {
      cls["n"] = entry.representative->vertex_count();
      json edges = json::array();
      for (const auto& e : entry.representative->edges()) edges.push_back({e.u, e.v, e.mult});
      cls["edges"] = edges;
    }
    classes[hex_encode(key)] = cls;
  }
  return json{{"total", c.total()}, {"classes", classes}}.dump();
}

std::string census_to_csv(const Census& c) {
  std::ostringstream ss;
  ss << "key,count,frequency,n_vertices,edges\n";
  for (const auto& [key, entry] : c.entries()) {
    ss << hex_encode(key) << ',' << entry.count << ','
       << static_cast<double>(entry.count) / static_cast<double>(c.total()) << ',';
    if (entry.representative) {
      ss << entry.representative->vertex_count() << ',';
      bool first = true;
      for (const auto& e : entry.representative->edges()) {
        if (!first) ss << '|';
        ss << e.u << '-' << e.v << ':' << e.mult;
        first = false;
      }
    } else {
      ss << ",";
    }
    ss << '\n';
  }
  return ss.str();
}

std::string adjacency_to_csv(const AdjacencyMeasure& xi) {
  std::ostringstream ss;
  ss.precision(17);
  ss << "window," << xi.window << "\n";
  ss << "x,y,mult\n";
  for (const auto& p : xi.points) ss << p.x << ',' << p.y << ',' << p.mult << '\n';
  return ss.str();
}

AdjacencyMeasure adjacency_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  AdjacencyMeasure xi;
  if (!std::getline(in, line) || line.rfind("window,", 0) != 0) {
    throw ConfigError("adjacency CSV must start with a 'window,<s>' line");
  }
  xi.window = std::stod(line.substr(7));
  std::getline(in, line);  // column header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string x, y, m;
    std::getline(row, x, ',');
    std::getline(row, y, ',');
    std::getline(row, m, ',');
    xi.points.push_back({std::stod(x), std::stod(y), static_cast<uint32_t>(std::stoul(m))});
  }
  return xi;
}

namespace {

json measure_to_json_obj(const DiscreteMeasure& rho) {
  json atoms = json::array();
  for (const auto& a : rho.atoms()) atoms.push_back({a.location, a.mass});
  return json{{"atoms", atoms}};
}

DiscreteMeasure measure_from_json_obj(const json& j) {
  std::vector<DiscreteMeasure::Atom> atoms;
  for (const auto& a : j.at("atoms")) {
    atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
  }
  return DiscreteMeasure::from_atoms(std::move(atoms));
}

}  // namespace

std::string measure_to_json(const DiscreteMeasure& rho, std::optional<double> drift) {
  json j = measure_to_json_obj(rho);
  if (drift) j["a"] = *drift;
  return j.dump();
}

std::pair<DiscreteMeasure, std::optional<double>> measure_from_json(const std::string& text) {
  json j = parse(text, "measure");
  std::optional<double> drift;
  if (j.contains("a")) drift = j.at("a").get<double>();
  return {measure_from_json_obj(j), drift};
}

std::string measure_to_csv(const DiscreteMeasure& rho) {
  std::ostringstream ss;
  ss.precision(17);
  ss << "x,mass\n";
  for (const auto& a : rho.atoms()) ss << a.location << ',' << a.mass << '\n';
  return ss.str();
}

DiscreteMeasure measure_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  std::vector<DiscreteMeasure::Atom> atoms;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string x, m;
    std::getline(row, x, ',');
    std::getline(row, m, ',');
    atoms.push_back({std::stod(x), std::stod(m)});
  }
  return DiscreteMeasure::from_atoms(std::move(atoms));
}

namespace {

bool looks_like_json_array(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '[';
  }
  return false;
}

}  // namespace

std::vector<uint32_t> read_degrees(const std::string& path) {
  std::string text = read_file(path);
  std::vector<uint32_t> out;
  if (looks_like_json_array(text)) {
    for (const auto& v : parse(text, path.c_str())) out.push_back(v.get<uint32_t>());
    return out;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(static_cast<uint32_t>(std::stoul(line)));
  }
  return out;
}

std::vector<double> read_weights(const std::string& path) {
  std::string text = read_file(path);
  std::vector<double> out;
  if (looks_like_json_array(text)) {
    for (const auto& v : parse(text, path.c_str())) out.push_back(v.get<double>());
    return out;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(std::stod(line));
  }
  return out;
}

Multigraphex named_generic_graphex(const std::string& name, double feature_cutoff) {
  if (name == "const_one") {
    GenericGraphex g;
    g.w = [](double, double, uint32_t k) { return k == 1 ? 1.0 : 0.0; };
    g.star = nullptr;
    g.feature_cutoff = feature_cutoff;
    g.mu_tail_bound = 0.0;  // there is no valid bound; validation rejects this kernel anyway
    g.name = "const_one";
    return Multigraphex(std::move(g));
  }
  if (name == "exp_decay") {
    // Integrable smoke-test kernel: W(x,y,1) = exp(-x-y).
    GenericGraphex g;
    g.w = [](double x, double y, uint32_t k) {
      double p = std::exp(-x - y);
      if (k == 0) return 1.0 - p;
      return k == 1 ? p : 0.0;
    };
    g.star = nullptr;
    g.feature_cutoff = feature_cutoff;
    g.mu_tail_bound = std::exp(-feature_cutoff);
    g.name = "exp_decay";
    return Multigraphex(std::move(g));
  }
  throw ConfigError("unknown generic graphex kernel: " + name);
}

std::string graphex_to_json(const Multigraphex& wx) {
  json j;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RankOne>) {
          j["variant"] = "rank_one";
          j["rho"] = measure_to_json_obj(v.rho);
          j["a"] = v.a;
        } else if constexpr (std::is_same_v<T, ErasedRankOne>) {
          j["variant"] = "erased_rank_one";
          j["rho"] = measure_to_json_obj(v.rho);
          j["a"] = v.a;
          j["c"] = v.c;
        } else if constexpr (std::is_same_v<T, GrgKernel>) {
          j["variant"] = "grg_kernel";
          j["rho_w"] = measure_to_json_obj(v.rho_w);
          j["a"] = v.a;
          j["C"] = v.big_c;
        } else if constexpr (std::is_same_v<T, BipartiteGraphex>) {
          j["variant"] = "bipartite";
          j["rho1"] = measure_to_json_obj(v.rho1);
          j["rho2"] = measure_to_json_obj(v.rho2);
          j["a1"] = v.a1;
          j["a2"] = v.a2;
        } else if constexpr (std::is_same_v<T, PureDust>) {
          j["variant"] = "pure_dust";
          j["I"] = v.isolated_rate;
        } else {
          j["variant"] = "generic";
          j["kernel"] = v.name.empty() ? "<unnamed>" : v.name;
          j["feature_cutoff"] = v.feature_cutoff;
          j["mu_tail_bound"] = v.mu_tail_bound;
        }
      },
      wx.base());
  if (wx.scale() != 1.0) j["scale"] = wx.scale();
  return j.dump();
}

Multigraphex graphex_from_json(const std::string& text) {
  json j = parse(text, "graphex spec");
  std::string variant = j.at("variant").get<std::string>();
  double scale = j.value("scale", 1.0);
  if (variant == "rank_one") {
    return Multigraphex(RankOne{measure_from_json_obj(j.at("rho")), j.at("a").get<double>()}, scale);
  }
  if (variant == "erased_rank_one") {
    return Multigraphex(ErasedRankOne{measure_from_json_obj(j.at("rho")), j.at("a").get<double>(),
                                      j.value("c", 1.0)},
                        scale);
  }
  if (variant == "grg_kernel") {
    return Multigraphex(GrgKernel{measure_from_json_obj(j.at("rho_w")), j.at("a").get<double>(),
                                  j.value("C", 1.0)},
                        scale);
  }
  if (variant == "bipartite") {
    return Multigraphex(BipartiteGraphex{measure_from_json_obj(j.at("rho1")),
                                         measure_from_json_obj(j.at("rho2")), j.at("a1").get<double>(),
                                         j.at("a2").get<double>()},
                        scale);
  }
  if (variant == "pure_dust") {
    return Multigraphex(PureDust{j.at("I").get<double>()}, scale);
  }
  if (variant == "generic") {
    Multigraphex wx = named_generic_graphex(j.at("kernel").get<std::string>(), j.value("feature_cutoff", 4.0));
    return Multigraphex(wx.base(), scale);
  }
  throw ConfigError("unknown graphex variant: " + variant);
}

}  // namespace graphex
