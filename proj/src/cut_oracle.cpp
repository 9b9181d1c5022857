#include "fdcert/cut_oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <stdexcept>

namespace fdcert {

namespace {

constexpr int kMaxOracleUniverse = 64;

uint64_t bit(int v) { return uint64_t{1} << v; }

void check_edge_subgraph(const Graph& h, const Graph& g) {
  if (h.universe() != g.universe())
    throw InputError("h and g must share a vertex universe");
  for (int v = 0; v < g.universe(); ++v)
    if (h.has_vertex(v) != g.has_vertex(v))
      throw InputError("h and g must have the same present vertices");
  for (const Edge& e : h.edges()) {
    if (!g.has_edge_id(e.id)) throw InputError("h edge id missing from g");
    const Edge& ge = g.edge(e.id);
    bool match = (ge.u == e.u && ge.v == e.v) || (ge.u == e.v && ge.v == e.u);
    if (!match) throw InputError("h edge endpoints disagree with g");
  }
}

// DFS over assignments of the free vertices to {A, B, D}, tried in that
// symbol order so the first accepted leaf is the lexicographically smallest
// assignment. fault[x] tracks the distinct faulty neighbors x currently sees
// (crossing h-edges and deleted g-neighbors); marks only ever accumulate
// along a branch, so pruning on surviving vertices is sound. Vertices that
// may still be deleted are never pruned on.
struct Enumerator {
  const Graph& h;
  const Graph& g;
  FaultMode mode;
  long long budget;
  int u, v;
  bool minimize;
  long long f_limit;

  long long visited = 0;
  std::vector<uint64_t> gadj, hadj;
  std::vector<int> free_verts;
  std::vector<char> side;  // '-' absent, '?' unassigned, 'A','B','D'
  uint64_t amask = 0, bmask = 0, dmask = 0;
  std::vector<uint64_t> fault;
  std::vector<std::pair<int, uint64_t>> undo;

  int best_value = INT_MAX;
  std::vector<char> best_side;
  bool found = false;

  Enumerator(const Graph& h_, const Graph& g_, FaultMode mode_, long long budget_,
             int u_, int v_, bool minimize_, int f_)
      : h(h_), g(g_), mode(mode_), budget(budget_), u(u_), v(v_),
        minimize(minimize_), f_limit(f_) {
    int n = g.universe();
    gadj.assign(n, 0);
    hadj.assign(n, 0);
    for (const Edge& e : g.edges()) {
      gadj[e.u] |= bit(e.v);
      gadj[e.v] |= bit(e.u);
    }
    for (const Edge& e : h.edges()) {
      hadj[e.u] |= bit(e.v);
      hadj[e.v] |= bit(e.u);
    }
    side.assign(n, '-');
    for (int x = 0; x < n; ++x)
      if (g.has_vertex(x)) side[x] = '?';
    fault.assign(n, 0);
    side[u] = 'A';
    amask |= bit(u);
    side[v] = 'B';
    bmask |= bit(v);
    for (int x = 0; x < n; ++x)
      if (side[x] == '?') free_verts.push_back(x);
    if (hadj[u] & bit(v)) mark_pair(u, v);  // parallel copies of the query pair
  }

  long long limit() const {
    if (!minimize) return f_limit;
    return best_value == INT_MAX ? LLONG_MAX : best_value - 1;
  }

  bool survives(int x) const {
    if (mode == FaultMode::Edge) return side[x] != '-';
    return side[x] == 'A' || side[x] == 'B';
  }

  void mark_pair(int x, int y) {
    if (!(fault[x] & bit(y))) {
      fault[x] |= bit(y);
      undo.emplace_back(x, bit(y));
    }
    if (!(fault[y] & bit(x))) {
      fault[y] |= bit(x);
      undo.emplace_back(y, bit(x));
    }
  }

  // Applies the assignment; returns false when some surviving vertex already
  // exceeds the degree limit.
  bool assign(int w, char s) {
    side[w] = s;
    if (s == 'A')
      amask |= bit(w);
    else if (s == 'B')
      bmask |= bit(w);
    else
      dmask |= bit(w);
    std::size_t first = undo.size();
    if (s == 'D') {
      for (uint64_t rest = gadj[w]; rest; rest &= rest - 1)
        mark_pair(w, std::countr_zero(rest));
    } else {
      for (uint64_t rest = hadj[w] & (s == 'A' ? bmask : amask); rest; rest &= rest - 1)
        mark_pair(w, std::countr_zero(rest));
      for (uint64_t rest = gadj[w] & dmask; rest; rest &= rest - 1)
        mark_pair(w, std::countr_zero(rest));
    }
    long long lim = limit();
    if (survives(w) && std::popcount(fault[w]) > lim) return false;
    for (std::size_t i = first; i < undo.size(); ++i) {
      int x = undo[i].first;
      if (survives(x) && std::popcount(fault[x]) > lim) return false;
    }
    return true;
  }

  void unassign(int w, char s, std::size_t depth) {
    while (undo.size() > depth) {
      auto [x, b] = undo.back();
      undo.pop_back();
      fault[x] &= ~b;
    }
    if (s == 'A')
      amask &= ~bit(w);
    else if (s == 'B')
      bmask &= ~bit(w);
    else
      dmask &= ~bit(w);
    side[w] = '?';
  }

  bool dfs(std::size_t idx) {
    if (++visited > budget) throw ResourceError("cut oracle budget exceeded");
    if (idx == free_verts.size()) {
      if (minimize) {
        int val = 0;
        for (int x = 0; x < static_cast<int>(side.size()); ++x)
          if (side[x] == 'A' || side[x] == 'B')
            val = std::max(val, std::popcount(fault[x]));
        if (val < best_value) {
          best_value = val;
          best_side = side;
        }
        return false;
      }
      found = true;
      best_side = side;
      return true;
    }
    int w = free_verts[idx];
    for (char s : {'A', 'B', 'D'}) {
      if (s == 'D' && mode == FaultMode::Edge) continue;
      if (mode == FaultMode::Vertex) {
        if (s == 'A' && (hadj[w] & bmask)) continue;
        if (s == 'B' && (hadj[w] & amask)) continue;
      }
      std::size_t depth = undo.size();
      if (assign(w, s)) {
        if (dfs(idx + 1)) return true;
      }
      unassign(w, s, depth);
    }
    return false;
  }
};

FaultSet witness_fault(const Graph& h, const std::vector<char>& side) {
  FaultSet fs;
  for (int x = 0; x < static_cast<int>(side.size()); ++x)
    if (side[x] == 'D') fs.vertices.insert(x);
  for (const Edge& e : h.edges()) {
    char su = side[e.u], sv = side[e.v];
    if ((su == 'A' && sv == 'B') || (su == 'B' && sv == 'A')) fs.edges.insert(e.id);
  }
  return fs;
}

}  // namespace

const char* to_string(FaultMode mode) {
  switch (mode) {
    case FaultMode::Edge: return "edge";
    case FaultMode::Vertex: return "vertex";
    case FaultMode::Mixed: return "mixed";
  }
  return "?";
}

FaultMode fault_mode_from_string(const std::string& s) {
  if (s == "edge") return FaultMode::Edge;
  if (s == "vertex") return FaultMode::Vertex;
  if (s == "mixed") return FaultMode::Mixed;
  throw InputError("unknown fault mode '" + s + "'");
}

std::optional<CutWitness> find_bounded_cut(const Graph& h, const Graph& g, int edge_id,
                                           int f, FaultMode mode, long long budget) {
  if (f < 0) throw InputError("fault budget must be nonnegative");
  check_edge_subgraph(h, g);
  if (g.universe() > kMaxOracleUniverse)
    throw ResourceError("exact oracle supports at most 64 vertices");
  const Edge& e = g.edge(edge_id);
  if (h.has_edge_id(edge_id)) throw InputError("query edge is already in h");
  if (mode == FaultMode::Vertex && h.has_edge_between(e.u, e.v))
    return std::nullopt;  // a parallel copy survives every vertex fault set
  Enumerator en(h, g, mode, budget, e.u, e.v, /*minimize=*/false, f);
  if (!en.dfs(0)) return std::nullopt;

  CutWitness w;
  w.side = en.best_side;
  w.fault = witness_fault(h, w.side);
  if (fault_degree(g, w.fault) > f)
    throw std::logic_error("oracle witness exceeds degree bound");
  if (damages(g, w.fault, edge_id))
    throw std::logic_error("oracle witness damages the query edge");
  if (components(remove_faults(h, w.fault)).connected(e.u, e.v))
    throw std::logic_error("oracle witness fails to disconnect");
  return w;
}

std::optional<FaultSet> brute_force_cut(const Graph& h, const Graph& g, int edge_id,
                                        int f, FaultMode mode) {
  if (f < 0) throw InputError("fault budget must be nonnegative");
  check_edge_subgraph(h, g);
  const Edge& e = g.edge(edge_id);
  if (h.has_edge_id(edge_id)) throw InputError("query edge is already in h");
  if (h.vertex_count() + h.edge_count() > 22)
    throw ResourceError("brute force cut limited to |V|+|E| <= 22");

  std::vector<std::pair<bool, int>> elements;  // (is_vertex, id)
  if (mode != FaultMode::Edge)
    for (int v : h.vertices()) elements.emplace_back(true, v);
  if (mode != FaultMode::Vertex)
    for (const Edge& he : h.edges()) elements.emplace_back(false, he.id);

  const int k = static_cast<int>(elements.size());
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    FaultSet fs;
    for (int i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      if (elements[i].first)
        fs.vertices.insert(elements[i].second);
      else
        fs.edges.insert(elements[i].second);
    }
    if (fault_degree(g, fs) > f) continue;
    if (damages(g, fs, edge_id)) continue;
    if (!components(remove_faults(h, fs)).connected(e.u, e.v)) return fs;
  }
  return std::nullopt;
}

MinMaxCut min_max_cut_value(const Graph& h, int u, int v, FaultMode mode,
                            long long budget) {
  if (!h.has_vertex(u) || !h.has_vertex(v)) throw InputError("cut endpoint absent");
  if (u == v) throw InputError("cut endpoints must differ");
  if (h.universe() > kMaxOracleUniverse)
    throw ResourceError("exact oracle supports at most 64 vertices");
  if (mode == FaultMode::Vertex && h.has_edge_between(u, v))
    throw InputError("vertex faults cannot separate adjacent endpoints");

  Enumerator en(h, h, mode, budget, u, v, /*minimize=*/true, -1);
  en.dfs(0);
  if (en.best_value == INT_MAX)
    throw std::logic_error("min-max enumeration found no partition");

  MinMaxCut out;
  out.value = en.best_value;
  out.witness.side = en.best_side;
  out.witness.fault = witness_fault(h, out.witness.side);
  if (fault_degree(h, out.witness.fault) != out.value)
    throw std::logic_error("min-max witness degree mismatch");
  const ComponentLabeling comp = components(remove_faults(h, out.witness.fault));
  if (comp.connected(u, v)) throw std::logic_error("min-max witness fails to disconnect");
  return out;
}

}  // namespace fdcert
