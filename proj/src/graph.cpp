#include "fdcert/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace fdcert {

namespace {

void check_fault_ids(const Graph& g, const FaultSet& fs) {
  for (int v : fs.vertices) {
    if (v < 0 || v >= g.universe())
      throw InputError("fault vertex id " + std::to_string(v) + " out of range");
  }
  for (int e : fs.edges) {
    if (e < 0) throw InputError("negative fault edge id " + std::to_string(e));
  }
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& endpoints, bool simple)
    : universe_(n), vertex_count_(n), present_(n, 1), simple_(simple) {
  if (n < 0) throw InputError("negative vertex count");
  std::set<std::pair<int, int>> seen;
  edges_.reserve(endpoints.size());
  int id = 0;
  for (auto [u, v] : endpoints) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (simple) {
      auto key = std::minmax(u, v);
      if (!seen.insert(key).second)
        throw InputError("parallel edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") in simple graph");
    }
    edges_.push_back(Edge{id++, u, v});
  }
}

Graph::Graph(int universe, std::vector<char> present, std::vector<Edge> edges, bool simple)
    : universe_(universe),
      present_(std::move(present)),
      edges_(std::move(edges)),
      simple_(simple) {
  vertex_count_ = 0;
  for (char p : present_) vertex_count_ += p ? 1 : 0;
}

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  out.reserve(vertex_count_);
  for (int v = 0; v < universe_; ++v)
    if (present_[v]) out.push_back(v);
  return out;
}

bool Graph::has_edge_id(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, int x) { return e.id < x; });
  return it != edges_.end() && it->id == id;
}

const Edge& Graph::edge(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, int x) { return e.id < x; });
  if (it == edges_.end() || it->id != id)
    throw InputError("no edge with id " + std::to_string(id));
  return *it;
}

bool Graph::has_edge_between(int u, int v) const {
  for (const Edge& e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  return false;
}

int fault_degree(const Graph& g, const FaultSet& fs) {
  check_fault_ids(g, fs);
  // (surviving vertex, faulty neighbor) incidences; duplicates collapse so a
  // neighbor reached by several faulty elements counts once.
  std::vector<std::pair<int, int>> hits;
  for (const Edge& e : g.edges()) {
    bool edge_faulty = fs.has_edge(e.id);
    bool u_faulty = fs.has_vertex(e.u);
    bool v_faulty = fs.has_vertex(e.v);
    if (!u_faulty && (edge_faulty || v_faulty)) hits.emplace_back(e.u, e.v);
    if (!v_faulty && (edge_faulty || u_faulty)) hits.emplace_back(e.v, e.u);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  int best = 0;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j].first == hits[i].first) ++j;
    best = std::max(best, static_cast<int>(j - i));
    i = j;
  }
  return best;
}

bool damages(const Graph& g, const FaultSet& fs, int edge_id) {
  check_fault_ids(g, fs);
  const Edge& e = g.edge(edge_id);
  return fs.has_edge(edge_id) || fs.has_vertex(e.u) || fs.has_vertex(e.v);
}

Graph remove_faults(const Graph& g, const FaultSet& fs) {
  check_fault_ids(g, fs);
  std::vector<char> present = g.present_;
  for (int v : fs.vertices)
    if (g.has_vertex(v)) present[v] = 0;
  std::vector<Edge> edges;
  edges.reserve(g.edges_.size());
  for (const Edge& e : g.edges_) {
    if (fs.has_edge(e.id)) continue;
    if (!present[e.u] || !present[e.v]) continue;
    edges.push_back(e);
  }
  return Graph(g.universe_, std::move(present), std::move(edges), g.simple_);
}

ComponentLabeling components(const Graph& g) {
  UnionFind uf(g.universe());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  std::vector<int> min_id(g.universe(), -1);
  for (int v = 0; v < g.universe(); ++v) {
    if (!g.has_vertex(v)) continue;
    int r = uf.find(v);
    if (min_id[r] < 0) min_id[r] = v;  // ascending scan: first hit is the min
  }
  ComponentLabeling out;
  out.label.assign(g.universe(), -1);
  for (int v = 0; v < g.universe(); ++v) {
    if (!g.has_vertex(v)) continue;
    out.label[v] = min_id[uf.find(v)];
    if (out.label[v] == v) ++out.count;
  }
  return out;
}

bool same_components(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count())
    throw InputError("component comparison over different vertex sets");
  int n = std::max(a.universe(), b.universe());
  for (int v = 0; v < n; ++v)
    if (a.has_vertex(v) != b.has_vertex(v))
      throw InputError("component comparison over different vertex sets");
  ComponentLabeling ca = components(a);
  ComponentLabeling cb = components(b);
  for (int v = 0; v < a.universe(); ++v)
    if (a.has_vertex(v) && ca.label[v] != cb.label[v]) return false;
  return true;
}

Graph induced(const Graph& g, const std::vector<int>& keep) {
  std::vector<char> present(g.universe_, 0);
  for (int v : keep) {
    if (!g.has_vertex(v))
      throw InputError("induced subgraph on absent vertex " + std::to_string(v));
    present[v] = 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges_)
    if (present[e.u] && present[e.v]) edges.push_back(e);
  return Graph(g.universe_, std::move(present), std::move(edges), g.simple_);
}

Graph subgraph_edges(const Graph& g, const std::vector<int>& edge_ids) {
  std::vector<int> ids = edge_ids;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw InputError("duplicate edge id in subgraph selection");
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (int id : ids) edges.push_back(g.edge(id));
  return Graph(g.universe_, g.present_, std::move(edges), g.simple_);
}

Graph cap_multiplicity(const Graph& g, int cap) {
  if (cap < 1) throw InputError("multiplicity cap must be at least 1");
  std::map<std::pair<int, int>, int> count;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges_) {
    auto key = std::minmax(e.u, e.v);
    if (count[key] < cap) {
      ++count[key];
      edges.push_back(e);
    }
  }
  return Graph(g.universe_, g.present_, std::move(edges), g.simple_);
}

Graph reorder_edges(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.edge_count())
    throw InputError("edge order is not a permutation");
  std::vector<char> used(order.size(), 0);
  std::vector<Edge> edges;
  edges.reserve(order.size());
  int id = 0;
  for (int pos : order) {
    if (pos < 0 || pos >= g.edge_count() || used[pos])
      throw InputError("edge order is not a permutation");
    used[pos] = 1;
    const Edge& e = g.edges_[pos];
    edges.push_back(Edge{id++, e.u, e.v});
  }
  return Graph(g.universe_, g.present_, std::move(edges), g.simple_);
}

}  // namespace fdcert
