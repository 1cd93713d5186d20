#include "wreg/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wreg {

using nlohmann::json;

MonomialIdeal ideal_from_json(const std::string& text) {
  json j = json::parse(text);
  int n = j.at("n").get<int>();
  if (n < 0) throw std::invalid_argument("ideal JSON: negative variable count");
  std::vector<Monomial> gens;
  for (const auto& row : j.at("gens")) {
    std::vector<int> e = row.get<std::vector<int>>();
    if (static_cast<int>(e.size()) != n)
      throw std::invalid_argument("ideal JSON: generator length differs from n");
    gens.emplace_back(std::move(e));
  }
  return ideal_minimalize(n, gens);
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  json j;
  j["n"] = ideal.vars();
  j["gens"] = json::array();
  for (const Monomial& g : ideal.generators()) j["gens"].push_back(g.exponents());
  return j.dump();
}

WeightedGraph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  std::string shape = j.at("shape").get<std::string>();
  if (j.contains("weights")) {
    std::vector<int> w = j.at("weights").get<std::vector<int>>();
    if (shape == "cycle") return build_cycle(w);
    if (shape == "path") return build_path(w);
    throw std::invalid_argument("graph JSON: weights shorthand needs cycle or path shape");
  }
  int n = j.at("n").get<int>();
  std::vector<WeightedEdge> edges;
  for (const auto& row : j.at("edges")) {
    std::vector<int> e = row.get<std::vector<int>>();
    if (e.size() != 3) throw std::invalid_argument("graph JSON: edge must be [u, v, w]");
    edges.push_back({e[0] - 1, e[1] - 1, e[2]});  // 1-based on the wire
  }
  if (shape == "cycle" || shape == "path") {
    // rebuild through the dedicated constructors to enforce the shape
    bool is_cycle = shape == "cycle";
    if (static_cast<int>(edges.size()) != (is_cycle ? n : n - 1))
      throw std::invalid_argument("graph JSON: wrong edge count for " + shape);
    std::vector<int> w(is_cycle ? n : n - 1, 0);
    for (const WeightedEdge& e : edges) {
      int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
      if (is_cycle && lo == 0 && hi == n - 1)
        w[n - 1] = e.weight;
      else if (hi == lo + 1)
        w[lo] = e.weight;
      else
        throw std::invalid_argument("graph JSON: edge does not fit the declared shape");
    }
    return is_cycle ? build_cycle(w) : build_path(w);
  }
  if (shape != "general") throw std::invalid_argument("graph JSON: unknown shape " + shape);
  return build_general(n, edges);
}

std::string graph_to_json(const WeightedGraph& graph) {
  json j;
  switch (graph.shape()) {
    case GraphShape::Cycle: j["shape"] = "cycle"; break;
    case GraphShape::Path: j["shape"] = "path"; break;
    default: j["shape"] = "general"; break;
  }
  j["n"] = graph.vertex_count();
  j["edges"] = json::array();
  for (const WeightedEdge& e : graph.edges())
    j["edges"].push_back({e.u + 1, e.v + 1, e.weight});
  return j.dump();
}

std::string betti_table_to_json(const BettiTable& table) {
  json j;
  j["characteristic"] = table.characteristic;
  j["subject"] = table.subject == BettiSubject::Ideal ? "ideal" : "quotient";
  j["entries"] = json::array();
  for (const auto& [key, mult] : table.entries)  // std::map iterates sorted by (i, j)
    j["entries"].push_back({key.first, key.second, mult});
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace wreg
