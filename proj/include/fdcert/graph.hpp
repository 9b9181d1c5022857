#pragma once

#include <set>
#include <utility>
#include <vector>

#include "fdcert/errors.hpp"

namespace fdcert {

// Undirected edge with a stable identity. The id order defines the edge
// ordering e_1,...,e_m that the greedy and the blocking sets depend on;
// derived subgraphs keep the ids of their parent.
struct Edge {
  int id;
  int u;
  int v;
};

// A mixed fault set: failed vertex ids plus failed edge ids.
// Vertex and edge ids live in disjoint namespaces.
struct FaultSet {
  std::set<int> vertices;
  std::set<int> edges;

  bool empty() const { return vertices.empty() && edges.empty(); }
  std::size_t size() const { return vertices.size() + edges.size(); }
  bool has_vertex(int v) const { return vertices.count(v) != 0; }
  bool has_edge(int e) const { return edges.count(e) != 0; }
};

// Immutable undirected graph over vertex ids 0..universe-1. A fresh graph has
// all vertices present and edge ids 0..m-1 in list order. Graphs obtained by
// fault removal or vertex induction keep the original vertex and edge ids;
// removed vertices are simply absent. Edge ids are strictly ascending in the
// edge list, so "edges of id < i" is always a prefix.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& endpoints, bool simple = true);

  int universe() const { return universe_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool is_simple() const { return simple_; }

  bool has_vertex(int v) const { return v >= 0 && v < universe_ && present_[v]; }
  std::vector<int> vertices() const;

  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge_id(int id) const;
  const Edge& edge(int id) const;  // InputError when absent
  int max_edge_id() const { return edges_.empty() ? -1 : edges_.back().id; }
  bool has_edge_between(int u, int v) const;

  friend Graph remove_faults(const Graph& g, const FaultSet& fs);
  friend Graph induced(const Graph& g, const std::vector<int>& keep);
  friend Graph subgraph_edges(const Graph& g, const std::vector<int>& edge_ids);
  friend Graph cap_multiplicity(const Graph& g, int cap);
  friend Graph reorder_edges(const Graph& g, const std::vector<int>& order);

 private:
  Graph(int universe, std::vector<char> present, std::vector<Edge> edges, bool simple);

  int universe_ = 0;
  int vertex_count_ = 0;
  std::vector<char> present_;
  std::vector<Edge> edges_;  // strictly ascending by id
  bool simple_ = true;
};

// Connectivity labels: label[v] is the smallest vertex id in v's component,
// -1 for absent vertices.
struct ComponentLabeling {
  std::vector<int> label;
  int count = 0;

  bool connected(int u, int v) const {
    return label[u] >= 0 && label[u] == label[v];
  }
};

// deg_G(F): the largest number of distinct faulty neighbors seen by any
// surviving vertex. A neighbor counts once even when both the neighbor and a
// connecting edge are in F. Fault elements absent from g contribute nothing.
int fault_degree(const Graph& g, const FaultSet& fs);

// True iff edge_id does not survive in g - fs.
bool damages(const Graph& g, const FaultSet& fs, int edge_id);

// g - fs: drops failed vertices, their incident edges, and failed edges.
// Fault ids absent from g are ignored.
Graph remove_faults(const Graph& g, const FaultSet& fs);

ComponentLabeling components(const Graph& g);

// True iff the component partitions coincide. Both graphs must have the same
// present vertex set.
bool same_components(const Graph& a, const Graph& b);

// Subgraph induced on `keep` (must be present vertices); original edge ids.
Graph induced(const Graph& g, const std::vector<int>& keep);

// Subgraph with the given edge ids (all vertices stay present).
Graph subgraph_edges(const Graph& g, const std::vector<int>& edge_ids);

// Keeps at most `cap` parallel edges per vertex pair (earliest ids win).
Graph cap_multiplicity(const Graph& g, int cap);

// New graph with edges renumbered 0..m-1 following `order`, a permutation of
// positions into g.edges().
Graph reorder_edges(const Graph& g, const std::vector<int>& order);

}  // namespace fdcert
