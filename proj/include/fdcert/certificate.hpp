#pragma once

#include <vector>

#include "fdcert/blocking_set.hpp"
#include "fdcert/cut_oracle.hpp"
#include "fdcert/graph.hpp"

namespace fdcert {

// n * outdegree_bound(n, f): the certificate size target for simple hosts
// with n > 10f (0 when f = 0; the bound only applies for f >= 1).
double size_bound(int n, int f);

struct CertificateStats {
  int n = 0;
  int m = 0;
  int kept = 0;
  double bound = 0.0;
};

struct Certificate {
  Graph host;             // input graph; multiplicity-capped at f+1 for multigraphs
  std::vector<int> kept;  // ascending host edge ids
  BlockingSet blocking;   // one entry per kept edge, the oracle's fault verbatim
  int f = 0;
  FaultMode mode = FaultMode::Edge;
  CertificateStats stats;
  bool capped = false;
};

// The greedy certificate construction: scan edges in id order, keep an edge
// exactly when some fault set of degree <= f in the host (not damaging the
// edge) separates its endpoints in the subgraph kept so far. A budget blowup
// inside the oracle aborts with a resource error naming the partial progress.
Certificate greedy_certificate(const Graph& g, int f, FaultMode mode,
                               long long budget = kDefaultOracleBudget);

// Classic baseline: union of f+1 edge-disjoint maximal spanning forests,
// extracted greedily in edge-id order. At most (f+1)(n-1) edges.
std::vector<int> nagamochi_ibaraki(const Graph& g, int f);

}  // namespace fdcert
