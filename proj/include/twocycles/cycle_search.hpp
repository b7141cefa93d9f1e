#ifndef TWOCYCLES_CYCLE_SEARCH_HPP
#define TWOCYCLES_CYCLE_SEARCH_HPP

#include <functional>
#include <optional>
#include <vector>

#include "twocycles/digraph.hpp"

namespace twocycles {

// One directed cycle of D[within] (a loop counts), or nothing if that
// induced subgraph is acyclic.
std::optional<std::vector<int>> find_cycle_in(const Digraph& d, VertexMask within);
std::optional<CycleWitness> find_cycle(const Digraph& d);

// Calls `visit` once per chordless cycle of D[within] until it returns
// false. A cycle is chordless when D has no arc between its vertices other
// than the cycle's own arcs; loops count as chords of longer cycles. Each
// cycle starts at its smallest vertex. Returns false if stopped early.
bool for_each_chordless_cycle(const Digraph& d, VertexMask within,
                              const std::function<bool(const std::vector<int>&)>& visit);

// All chordless cycles of D, ordered lexicographically by sorted vertex set.
std::vector<std::vector<int>> enumerate_chordless_cycles(const Digraph& d);

// k pairwise vertex-disjoint cycles, or nothing. Throws ErrorKind::InvalidK
// for k < 1.
//
// Any cycle's vertex set contains a chordless cycle (a chord closes a
// shorter cycle on a subset), so disjoint families can be assumed chordless.
// The search branches over the chordless cycle with the smallest minimum
// vertex, recurses on the vertices above that minimum which the cycle leaves
// free, and settles the last cycle with an acyclicity test.
std::optional<CycleWitness> find_disjoint_cycles(const Digraph& d, int k);
bool has_disjoint_cycles(const Digraph& d, int k, VertexMask within);

}  // namespace twocycles

#endif
