#ifndef WREG_GRAPH_HPP
#define WREG_GRAPH_HPP

#include <vector>

#include "wreg/monomial.hpp"

namespace wreg {

enum class GraphShape { Cycle, Path, General };

struct WeightedEdge {
  int u = 0;  // 0-based endpoints, u != v
  int v = 0;
  int weight = 1;
};

// A simple graph with positive integer edge weights.  `vertex_count` is the
// ambient number of vertices (= polynomial ring variables); `vertices` lists
// the active ones, so induced subgraphs keep living in the ambient ring.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int vertex_count, std::vector<WeightedEdge> edges, GraphShape shape);

  int vertex_count() const { return n_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  GraphShape shape() const { return shape_; }
  bool is_trivial() const;  // all weights 1
  int max_weight() const;
  int weight_between(int u, int v) const;  // 0 if no such edge

 private:
  friend WeightedGraph induced_subgraph(const WeightedGraph&, const std::vector<int>&);
  int n_ = 0;
  std::vector<int> vertices_;
  std::vector<WeightedEdge> edges_;
  GraphShape shape_ = GraphShape::General;
};

// C^n with edges x_i x_{i+1} (0-based: (i, i+1 mod n)), weight[i] on edge i.
WeightedGraph build_cycle(const std::vector<int>& weights);
// P^n with n-1 edges x_i x_{i+1}.
WeightedGraph build_path(const std::vector<int>& weights);
WeightedGraph build_general(int vertex_count, const std::vector<WeightedEdge>& edges);

// (x_u x_v)^{w(uv)} per edge, in the ambient ring.
MonomialIdeal edge_ideal(const WeightedGraph& g);

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& vertex_set);

// Convenience: the induced subgraph deleting one vertex.
WeightedGraph delete_vertex(const WeightedGraph& g, int vertex);

// Forbidden-pattern characterization of integral closedness: a trivial graph
// is closed; a non-trivial one is closed iff no induced subgraph is a
// two-edge path, a pair of disjoint edges, or a triangle whose edges are all
// non-trivial.  Patterns have at most 4 vertices, so a direct subset scan is
// exact.
bool is_integrally_closed_combinatorial(const WeightedGraph& g);

}  // namespace wreg

#endif
