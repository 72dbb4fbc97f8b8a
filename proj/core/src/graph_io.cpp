#include "d43/graph_io.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace d43 {

namespace {

std::string coords_attr(const CrystalElement& b) {
  std::string s;
  for (int k = 0; k < 6; ++k) s += (k ? "," : "") + std::to_string(b[k]);
  return s;
}

CrystalElement parse_coords(const std::string& s) {
  CrystalElement b;
  std::istringstream is(s);
  std::string tok;
  int k = 0;
  while (std::getline(is, tok, ',')) {
    if (k == 6) throw std::runtime_error("coords: too many entries in '" + s + "'");
    try {
      b[k++] = std::stol(tok);
    } catch (const std::exception&) {
      throw std::runtime_error("coords: bad entry '" + tok + "'");
    }
  }
  if (k != 6) throw std::runtime_error("coords: expected 6 entries in '" + s + "'");
  return b;
}

void check_edges(const CrystalGraph& g, const char* who) {
  std::map<std::string, int> ids;
  for (const auto& n : g.nodes)
    if (!ids.emplace(n.id, 0).second) throw std::runtime_error(std::string(who) + ": duplicate node '" + n.id + "'");
  for (const auto& e : g.edges) {
    if (e.colour < 0 || e.colour > 2) throw std::runtime_error(std::string(who) + ": edge colour out of range");
    if (!ids.count(e.from) || !ids.count(e.to))
      throw std::runtime_error(std::string(who) + ": edge references unknown node");
  }
}

}  // namespace

std::size_t CrystalGraph::count_edges(int colour) const {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.colour == colour;
  return n;
}

CrystalGraph crystal_graph(long l, ArrowSet arrows) {
  CrystalGraph g;
  g.level = l;
  const LevelCtx ctx = Finite{l};
  const auto elems = enumerate_Bl(l);
  std::map<CrystalElement, std::string> id;
  for (const auto& b : elems) {
    g.nodes.push_back({to_tableau(b).label(), b});
    id[b] = g.nodes.back().id;
  }
  for (const auto& b : elems)
    for (int i = 0; i < 3; ++i) {
      if (!has_arrow(arrows, i)) continue;
      if (auto t = f(i, b, ctx)) g.edges.push_back({id.at(b), id.at(*t), i});
    }
  return g;
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph B" << g.level << " {\n";
  for (const auto& n : g.nodes) os << "  \"" << n.id << "\" [coords=\"" << coords_attr(n.coords) << "\"];\n";
  for (const auto& e : g.edges) os << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=" << e.colour << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const CrystalGraph& g) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["level"] = g.level;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : g.nodes)
    j["nodes"].push_back({{"id", n.id}, {"coords", std::vector<long>(n.coords.x.begin(), n.coords.x.end())}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", e.colour}});
  return j.dump(2) + "\n";
}

CrystalGraph parse_dot(const std::string& text) {
  static const std::regex header(R"(^\s*digraph\s+B(\d+)\s*\{\s*$)");
  static const std::regex node(R"(^\s*\"([^\"]*)\"\s*\[coords=\"([^\"]*)\"\]\s*;\s*$)");
  static const std::regex edge(R"(^\s*\"([^\"]*)\"\s*->\s*\"([^\"]*)\"\s*\[label=(\d)\]\s*;\s*$)");
  static const std::regex close(R"(^\s*\}\s*$)");
  CrystalGraph g;
  std::istringstream is(text);
  std::string line;
  bool open = false, closed = false;
  std::smatch m;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (closed) throw std::runtime_error("parse_dot: content after closing brace");
    if (!open) {
      if (!std::regex_match(line, m, header)) throw std::runtime_error("parse_dot: expected digraph header");
      g.level = std::stol(m[1]);
      open = true;
    } else if (std::regex_match(line, m, node)) {
      g.nodes.push_back({m[1], parse_coords(m[2])});
    } else if (std::regex_match(line, m, edge)) {
      g.edges.push_back({m[1], m[2], std::stoi(m[3])});
    } else if (std::regex_match(line, close)) {
      closed = true;
    } else {
      throw std::runtime_error("parse_dot: cannot parse line '" + line + "'");
    }
  }
  if (!closed) throw std::runtime_error("parse_dot: missing closing brace");
  check_edges(g, "parse_dot");
  return g;
}

CrystalGraph graph_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::runtime_error("graph_from_json: unsupported schema_version");
    CrystalGraph g;
    g.level = j.at("level").get<long>();
    for (const auto& n : j.at("nodes")) {
      const auto c = n.at("coords").get<std::vector<long>>();
      if (c.size() != 6) throw std::runtime_error("graph_from_json: coords must have 6 entries");
      CrystalElement b;
      for (int k = 0; k < 6; ++k) b[k] = c[static_cast<std::size_t>(k)];
      g.nodes.push_back({n.at("id").get<std::string>(), b});
    }
    for (const auto& e : j.at("edges"))
      g.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(), e.at("label").get<int>()});
    check_edges(g, "graph_from_json");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("graph_from_json: ") + e.what());
  }
}

}  // namespace d43
