#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdcert/graph.hpp"

namespace fdcert {

// Which universe fault sets are drawn from.
enum class FaultMode { Edge, Vertex, Mixed };

const char* to_string(FaultMode mode);
FaultMode fault_mode_from_string(const std::string& s);

inline constexpr long long kDefaultOracleBudget = 1LL << 26;

// Witness that a bounded-degree fault set separates the queried pair.
// side[x] is 'A', 'B' or 'D' for present vertices ('-' otherwise); the fault
// contains exactly the h-edges crossing A x B plus the D vertices, so the
// witness is canonically minimal for its partition.
struct CutWitness {
  FaultSet fault;
  std::vector<char> side;
};

// Exact existence test behind the greedy: is there a fault set F in `mode`'s
// universe with deg_g(F) <= f that does not damage the g-edge `edge_id` and
// leaves its endpoints disconnected in h - F?  h must be an edge-subgraph of g
// (shared ids) without the queried edge; degrees are measured in g,
// connectivity in h. Enumerates vertex partitions {A,B,D} with per-vertex
// degree pruning; the returned witness is the lexicographically smallest
// qualifying assignment (vertex-id order, symbols A < B < D).
std::optional<CutWitness> find_bounded_cut(const Graph& h, const Graph& g, int edge_id,
                                           int f, FaultMode mode,
                                           long long budget = kDefaultOracleBudget);

// Reference oracle: enumerates every fault set over h's elements directly and
// filters with the graph primitives. Guarded to |V(h)| + |E(h)| <= 22.
std::optional<FaultSet> brute_force_cut(const Graph& h, const Graph& g, int edge_id,
                                        int f, FaultMode mode);

struct MinMaxCut {
  int value;
  CutWitness witness;
};

// Smallest f such that a fault set of degree <= f (measured in h) separates u
// from v in h. u and v are never deleted; edges between them may fail (pure
// cut, no protected edge). Vertex mode with adjacent endpoints has no
// solution and is an input error.
MinMaxCut min_max_cut_value(const Graph& h, int u, int v, FaultMode mode,
                            long long budget = kDefaultOracleBudget);

}  // namespace fdcert
