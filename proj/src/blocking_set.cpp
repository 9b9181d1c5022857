#include "fdcert/blocking_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace fdcert {

namespace {

void check_well_formed(const Graph& host, const BlockingSet& b) {
  int prev = -1;
  for (const BlockingEntry& entry : b.entries) {
    if (entry.edge_id <= prev)
      throw InputError("blocking entries must be sorted by edge id, without duplicates");
    prev = entry.edge_id;
    if (!host.has_edge_id(entry.edge_id))
      throw InputError("blocking entry for unknown edge " + std::to_string(entry.edge_id));
  }
}

// Drops fault elements the host cannot interpret: vertices outside the
// universe and edge ids the host does not carry (their endpoints are
// unknowable here, and host-relative semantics ignore them anyway).
FaultSet host_view(const Graph& host, const FaultSet& fs) {
  FaultSet out;
  for (int v : fs.vertices)
    if (v >= 0 && v < host.universe()) out.vertices.insert(v);
  for (int e : fs.edges)
    if (host.has_edge_id(e)) out.edges.insert(e);
  return out;
}

}  // namespace

const BlockingEntry* BlockingSet::find(int edge_id) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), edge_id,
                             [](const BlockingEntry& e, int x) { return e.edge_id < x; });
  if (it == entries.end() || it->edge_id != edge_id) return nullptr;
  return &*it;
}

const char* to_string(BlockingViolation v) {
  switch (v) {
    case BlockingViolation::none: return "none";
    case BlockingViolation::damages_own_edge: return "fault damages its own edge";
    case BlockingViolation::endpoints_connected: return "endpoints connected below the edge";
    case BlockingViolation::degree_exceeded: return "fault degree exceeds f";
  }
  return "?";
}

BlockingReport validate(const Graph& host, const BlockingSet& b, int f) {
  check_well_formed(host, b);
  BlockingReport report;
  std::vector<int> prefix;  // host edge ids below the current entry
  std::size_t edge_pos = 0;
  const std::vector<Edge>& all = host.edges();
  for (int i = 0; i < static_cast<int>(b.entries.size()); ++i) {
    const BlockingEntry& entry = b.entries[i];
    FaultSet fault = host_view(host, entry.fault);
    const Edge& e = host.edge(entry.edge_id);
    if (damages(host, fault, entry.edge_id)) {
      report = {false, BlockingViolation::damages_own_edge, i};
      return report;
    }
    while (edge_pos < all.size() && all[edge_pos].id < entry.edge_id)
      prefix.push_back(all[edge_pos++].id);
    Graph below = subgraph_edges(host, prefix);
    if (components(remove_faults(below, fault)).connected(e.u, e.v)) {
      report = {false, BlockingViolation::endpoints_connected, i};
      return report;
    }
    if (fault_degree(host, fault) > f) {
      report = {false, BlockingViolation::degree_exceeded, i};
      return report;
    }
  }
  return report;
}

BlockingSet restrict_to(const Graph& host, const BlockingSet& b, const std::vector<int>& s) {
  check_well_formed(host, b);
  Graph sub = induced(host, s);
  BlockingSet out;
  for (const BlockingEntry& entry : b.entries) {
    if (!sub.has_edge_id(entry.edge_id)) continue;
    BlockingEntry kept;
    kept.edge_id = entry.edge_id;
    for (int v : entry.fault.vertices)
      if (sub.has_vertex(v)) kept.fault.vertices.insert(v);
    for (int e : entry.fault.edges)
      if (sub.has_edge_id(e)) kept.fault.edges.insert(e);
    out.entries.push_back(std::move(kept));
  }
  return out;
}

double outdegree_bound(int n, int f) {
  if (f <= 0) return 0.0;
  return 10.0 * f * std::log2((static_cast<double>(n) + 2.0 * f) / f);
}

int Orientation::outdegree(int v) const {
  int out = 0;
  for (const Edge& e : directed)
    if (e.u == v) ++out;
  return out;
}

namespace {

struct CycleScan {
  const Graph& host;
  const BlockingSet& b;
  long long max_cycles;
  long long cycles_seen = 0;
  long long steps = 0;
  static constexpr long long kMaxSteps = 1LL << 22;

  // unique neighbors with the parallel edge ids per hop
  std::map<std::pair<int, int>, std::vector<int>> pair_edges;
  std::vector<std::vector<int>> nbrs;

  std::vector<int> path;
  std::vector<char> on_path;
  bool all_blocked = true;

  CycleScan(const Graph& host_, const BlockingSet& b_, long long max_cycles_)
      : host(host_), b(b_), max_cycles(max_cycles_) {
    nbrs.resize(host.universe());
    for (const Edge& e : host.edges()) {
      auto key = std::minmax(e.u, e.v);
      auto& ids = pair_edges[key];
      if (ids.empty()) {
        nbrs[e.u].push_back(e.v);
        nbrs[e.v].push_back(e.u);
      }
      ids.push_back(e.id);
    }
    for (auto& list : nbrs) std::sort(list.begin(), list.end());
    on_path.assign(host.universe(), 0);
  }

  void bump() {
    if (++steps > kMaxSteps)
      throw ResourceError("cycle enumeration work guard exceeded");
  }

  bool blocked(const std::vector<int>& cycle_edges, const std::vector<int>& cycle_verts) const {
    for (int eid : cycle_edges) {
      const BlockingEntry* entry = b.find(eid);
      if (!entry) continue;
      for (int v : cycle_verts)
        if (entry->fault.has_vertex(v)) return true;
      for (int e2 : cycle_edges)
        if (entry->fault.has_edge(e2)) return true;
    }
    return false;
  }

  // Expands one vertex cycle into all parallel-edge combinations.
  bool expand(const std::vector<int>& verts, std::size_t hop, std::vector<int>& edge_choice) {
    bump();
    if (hop == verts.size()) {
      if (++cycles_seen > max_cycles)
        throw ResourceError("cycle count guard exceeded");
      if (!blocked(edge_choice, verts)) {
        all_blocked = false;
        return false;
      }
      return true;
    }
    int a = verts[hop];
    int c = verts[(hop + 1) % verts.size()];
    const std::vector<int>& ids = pair_edges.at(std::minmax(a, c));
    for (int eid : ids) {
      edge_choice.push_back(eid);
      if (!expand(verts, hop + 1, edge_choice)) return false;
      edge_choice.pop_back();
    }
    return true;
  }

  bool close_cycle() {
    std::vector<int> edge_choice;
    return expand(path, 0, edge_choice);
  }

  // Paths rooted at the smallest cycle vertex; deduplicate the two traversal
  // directions by requiring path[1] < path.back() at closing time.
  bool dfs(int x) {
    bump();
    int root = path.front();
    for (int y : nbrs[x]) {
      if (y == root && path.size() >= 3 && path[1] < path.back()) {
        if (!close_cycle()) return false;
      }
      if (y <= root || on_path[y]) continue;
      on_path[y] = 1;
      path.push_back(y);
      if (!dfs(y)) return false;
      path.pop_back();
      on_path[y] = 0;
    }
    return true;
  }

  bool run() {
    // two-vertex cycles: unordered pairs of parallel edges
    for (const auto& [key, ids] : pair_edges) {
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          bump();
          if (++cycles_seen > max_cycles)
            throw ResourceError("cycle count guard exceeded");
          std::vector<int> edges{ids[i], ids[j]};
          std::vector<int> verts{key.first, key.second};
          if (!blocked(edges, verts)) return false;
        }
    }
    for (int s : host.vertices()) {
      path.assign(1, s);
      on_path.assign(host.universe(), 0);
      on_path[s] = 1;
      if (!dfs(s)) return false;
    }
    return true;
  }
};

struct OrientBuilder {
  std::map<int, std::pair<int, int>> dir;  // edge id -> (tail, head)
  int f;

  void orient_all_low_to_high(const Graph& h) {
    for (const Edge& e : h.edges())
      set(e.id, std::min(e.u, e.v), std::max(e.u, e.v));
  }

  void set(int id, int tail, int head) {
    if (!dir.emplace(id, std::make_pair(tail, head)).second)
      throw std::logic_error("edge oriented twice");
  }

  void recurse(const Graph& h, const BlockingSet& b) {
    if (h.edge_count() == 0) return;
    int n = h.vertex_count();
    if (n <= 10 * f) {
      orient_all_low_to_high(h);
      return;
    }
    // last entry: largest edge id present (entries cover all h edges)
    const BlockingEntry& last = b.entries.back();
    if (last.edge_id != h.max_edge_id())
      throw std::logic_error("last blocking entry does not match the last edge");
    FaultSet fstar = last.fault;
    fstar.edges.insert(last.edge_id);

    ComponentLabeling comp = components(remove_faults(h, fstar));
    std::map<int, std::vector<int>> groups;  // representative -> members
    for (int v : h.vertices())
      if (comp.label[v] >= 0) groups[comp.label[v]].push_back(v);
    if (groups.size() < 2)
      throw std::logic_error("split step: remainder is not disconnected");

    std::vector<std::vector<int>> comps;
    for (auto& [rep, members] : groups) comps.push_back(members);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b2) {
                       if (a.size() != b2.size()) return a.size() > b2.size();
                       return a.front() < b2.front();
                     });

    std::vector<int> left, right;
    for (const std::vector<int>& c : comps) {
      std::vector<int>& target = left.size() <= right.size() ? left : right;
      target.insert(target.end(), c.begin(), c.end());
    }
    std::vector<int> fv;  // deleted vertices present at this level
    for (int v : last.fault.vertices)
      if (h.has_vertex(v)) fv.push_back(v);
    right.insert(right.end(), fv.begin(), fv.end());
    if (left.size() > right.size()) {
      std::swap(left, right);
      // the deleted block followed the swap into the left side; push it back right
      for (int v : fv) left.erase(std::find(left.begin(), left.end(), v));
      right.insert(right.end(), fv.begin(), fv.end());
    }

    // split soundness: both sides nonempty, balanced, components intact,
    // deleted block on one side
    if (left.empty() || right.empty()) throw std::logic_error("split step: empty side");
    if (2 * left.size() > static_cast<std::size_t>(n))
      throw std::logic_error("split step: left side too large");
    if (left.size() + right.size() != static_cast<std::size_t>(n))
      throw std::logic_error("split step: sides do not partition the vertices");
    std::vector<char> in_left(h.universe(), 0);
    for (int v : left) in_left[v] = 1;
    for (const auto& c : comps) {
      for (std::size_t i = 1; i < c.size(); ++i)
        if (in_left[c[i]] != in_left[c[0]])
          throw std::logic_error("split step: component straddles the cut");
    }
    for (std::size_t i = 1; i < fv.size(); ++i)
      if (in_left[fv[i]] != in_left[fv[0]])
        throw std::logic_error("split step: deleted block straddles the cut");

    recurse(induced(h, left), restrict_to(h, b, left));
    recurse(induced(h, right), restrict_to(h, b, right));

    for (const Edge& e : h.edges()) {
      if (in_left[e.u] == in_left[e.v]) continue;
      if (!damages(h, fstar, e.id))
        throw std::logic_error("split step: crossing edge not damaged by the cut");
      set(e.id, in_left[e.u] ? e.u : e.v, in_left[e.u] ? e.v : e.u);
    }
  }
};

}  // namespace

bool check_cycle_blocking(const Graph& host, const BlockingSet& b, long long max_cycles) {
  check_well_formed(host, b);
  CycleScan scan(host, b, max_cycles);
  return scan.run();
}

Orientation orient(const Graph& host, const BlockingSet& b, int f) {
  if (!host.is_simple()) throw InputError("orientation requires a simple host");
  BlockingReport report = validate(host, b, f);
  if (!report.valid)
    throw InputError(std::string("blocking set invalid: ") + to_string(report.violation) +
                     " at entry " + std::to_string(report.entry_index));
  for (const Edge& e : host.edges())
    if (!b.find(e.id))
      throw InputError("no blocking entry for edge " + std::to_string(e.id));

  OrientBuilder builder;
  builder.f = f;
  builder.recurse(host, b);

  Orientation out;
  std::vector<int> outdeg(host.universe(), 0);
  for (const Edge& e : host.edges()) {
    auto it = builder.dir.find(e.id);
    if (it == builder.dir.end()) throw std::logic_error("edge left unoriented");
    out.directed.push_back(Edge{e.id, it->second.first, it->second.second});
    ++outdeg[it->second.first];
  }
  for (int v = 0; v < host.universe(); ++v)
    out.max_outdegree = std::max(out.max_outdegree, outdeg[v]);
  return out;
}

}  // namespace fdcert
