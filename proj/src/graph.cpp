#include "wreg/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace wreg {

namespace {

void validate_edges(int n, const std::vector<WeightedEdge>& edges) {
  std::set<std::pair<int, int>> seen;
  for (const WeightedEdge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
    if (e.weight < 1) throw std::invalid_argument("edge weight must be positive");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
  }
}

}  // namespace

WeightedGraph::WeightedGraph(int vertex_count, std::vector<WeightedEdge> edges, GraphShape shape)
    : n_(vertex_count), edges_(std::move(edges)), shape_(shape) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  validate_edges(n_, edges_);
  vertices_.resize(n_);
  for (int i = 0; i < n_; ++i) vertices_[i] = i;
}

bool WeightedGraph::is_trivial() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const WeightedEdge& e) { return e.weight == 1; });
}

int WeightedGraph::max_weight() const {
  int w = 0;
  for (const WeightedEdge& e : edges_) w = std::max(w, e.weight);
  return w;
}

int WeightedGraph::weight_between(int u, int v) const {
  for (const WeightedEdge& e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.weight;
  return 0;
}

WeightedGraph build_cycle(const std::vector<int>& weights) {
  int n = static_cast<int>(weights.size());
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, weights[i]});
  return WeightedGraph(n, std::move(edges), GraphShape::Cycle);
}

WeightedGraph build_path(const std::vector<int>& weights) {
  int n = static_cast<int>(weights.size()) + 1;
  if (n < 2) throw std::invalid_argument("a path needs at least 2 vertices");
  std::vector<WeightedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, weights[i]});
  return WeightedGraph(n, std::move(edges), GraphShape::Path);
}

WeightedGraph build_general(int vertex_count, const std::vector<WeightedEdge>& edges) {
  return WeightedGraph(vertex_count, edges, GraphShape::General);
}

MonomialIdeal edge_ideal(const WeightedGraph& g) {
  if (g.edges().empty()) throw std::invalid_argument("edge_ideal: graph has no edges");
  std::vector<Monomial> gens;
  for (const WeightedEdge& e : g.edges()) {
    std::vector<int> exp(g.vertex_count(), 0);
    exp[e.u] = e.weight;
    exp[e.v] = e.weight;
    gens.emplace_back(std::move(exp));
  }
  return ideal_minimalize(g.vertex_count(), gens);
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& vertex_set) {
  std::set<int> keep;
  for (int v : vertex_set) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex index out of range");
    keep.insert(v);
  }
  WeightedGraph out;
  out.n_ = g.vertex_count();
  out.vertices_.assign(keep.begin(), keep.end());
  for (const WeightedEdge& e : g.edges())
    if (keep.count(e.u) && keep.count(e.v)) out.edges_.push_back(e);
  out.shape_ = GraphShape::General;
  return out;
}

WeightedGraph delete_vertex(const WeightedGraph& g, int vertex) {
  std::vector<int> keep;
  for (int v : g.vertices())
    if (v != vertex) keep.push_back(v);
  return induced_subgraph(g, keep);
}

namespace {

// Non-trivial induced patterns on 3 vertices: P^3 (two edges, both >= 2) and
// C^3 (three edges, all >= 2).
bool bad_triple(const WeightedGraph& g, int a, int b, int c) {
  int wab = g.weight_between(a, b);
  int wbc = g.weight_between(b, c);
  int wca = g.weight_between(c, a);
  int present = (wab > 0) + (wbc > 0) + (wca > 0);
  if (present == 3) return wab >= 2 && wbc >= 2 && wca >= 2;
  if (present == 2) {
    int lo = 3;
    for (int w : {wab, wbc, wca})
      if (w > 0) lo = std::min(lo, w);
    return lo >= 2;
  }
  return false;
}

// Induced pattern on 4 vertices: exactly two disjoint edges, both >= 2.
bool bad_quad(const WeightedGraph& g, int a, int b, int c, int d) {
  int verts[4] = {a, b, c, d};
  std::vector<std::pair<std::pair<int, int>, int>> present;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      int w = g.weight_between(verts[i], verts[j]);
      if (w > 0) present.push_back({{verts[i], verts[j]}, w});
    }
  if (present.size() != 2) return false;
  auto& e1 = present[0];
  auto& e2 = present[1];
  bool disjoint = e1.first.first != e2.first.first && e1.first.first != e2.first.second &&
                  e1.first.second != e2.first.first && e1.first.second != e2.first.second;
  return disjoint && e1.second >= 2 && e2.second >= 2;
}

}  // namespace

bool is_integrally_closed_combinatorial(const WeightedGraph& g) {
  if (g.is_trivial()) return true;
  const std::vector<int>& vs = g.vertices();
  const int k = static_cast<int>(vs.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        if (bad_triple(g, vs[i], vs[j], vs[l])) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        for (int m = l + 1; m < k; ++m)
          if (bad_quad(g, vs[i], vs[j], vs[l], vs[m])) return false;
  return true;
}

}  // namespace wreg
