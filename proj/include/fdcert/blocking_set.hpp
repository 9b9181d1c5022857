#pragma once

#include <vector>

#include "fdcert/graph.hpp"

namespace fdcert {

struct BlockingEntry {
  int edge_id;
  FaultSet fault;
};

// Ordered (edge, fault) pairs aligned with the host's edge order. Entry i is
// valid when its fault does not damage edge e_i and disconnects e_i's
// endpoints in the host restricted to edges of smaller id.
struct BlockingSet {
  std::vector<BlockingEntry> entries;  // strictly ascending edge_id

  const BlockingEntry* find(int edge_id) const;
};

enum class BlockingViolation {
  none,
  damages_own_edge,     // condition (1)
  endpoints_connected,  // condition (2)
  degree_exceeded,      // the f bound
};

struct BlockingReport {
  bool valid = true;
  BlockingViolation violation = BlockingViolation::none;
  int entry_index = -1;
};

const char* to_string(BlockingViolation v);

// Checks conditions (1), (2) and the degree bound for every entry, reporting
// the first failure. Unsorted entries or entries naming non-host edges are
// malformed input. Fault elements absent from the host are ignored.
BlockingReport validate(const Graph& host, const BlockingSet& b, int f);

// Restriction to induced(host, s): keeps entries whose edge survives,
// intersecting each fault with s (vertices in s; edges with both endpoints in
// s). Valid sets stay valid on the induced host.
BlockingSet restrict_to(const Graph& host, const BlockingSet& b, const std::vector<int>& s);

// True iff every simple cycle C of the host has an entry with its edge on C
// and its fault intersecting C. Enumeration is guarded; exceeding the cycle
// cap (or the internal step cap) is a resource error.
bool check_cycle_blocking(const Graph& host, const BlockingSet& b,
                          long long max_cycles = 1LL << 16);

// 10 f log2((n+2f)/f), the per-vertex outdegree target of the size argument
// (0 when f = 0; the bound only applies for f >= 1).
double outdegree_bound(int n, int f);

struct Orientation {
  std::vector<Edge> directed;  // host edge order; u = tail, v = head
  int max_outdegree = 0;

  int outdegree(int v) const;
};

// Orients the host along the blocking set's recursive cut structure: split
// the vertices by the last entry's fault, recurse on both sides, and send
// crossing edges from the small side to the large one. Requires a valid
// blocking set with an entry for every host edge, and a simple host.
Orientation orient(const Graph& host, const BlockingSet& b, int f);

}  // namespace fdcert
