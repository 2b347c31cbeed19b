#pragma once

/* The interval [R,S] of intermediate subrings: enumeration by generator
 * adjunction, Hasse diagram, maximal chains classified step by step, the
 * chained predicate, the local partition-count identity, and DOT output.
 * Node order is canonical everywhere: (cardinality, lexicographic).
 */

#include <string>

#include "ringlat/extension.hpp"

namespace ringlat {

struct SubalgebraLattice {
  RingPtr ambient;
  IdxSet bottom;                                 // R as an ambient subset
  IdxSet top;                                    // S's full index set
  std::vector<IdxSet> nodes;                     // canonical (size, lex) order
  std::vector<std::pair<int, int>> hasse_edges;  // (lower, upper) node indices, covering pairs
};

struct MinimalStepPath {
  std::vector<IdxSet> chain;           // bottom = chain.front(), top = chain.back()
  std::vector<MinimalClass> classes;   // one per consecutive pair
};

/* BFS by single-element adjunction from the bottom; every intermediate ring
 * is reachable since any T in [R,S] is a chain of monogenic steps.  Throws
 * LATTICE_CAP_EXCEEDED (message carries the partial count) past the cap. */
SubalgebraLattice enumerate_interval(const Extension& E);

/* Same for the segment [lo, hi] inside the ambient ring S; `hi` must be a
 * subring containing the subring `lo`.  Nodes are ambient subsets. */
SubalgebraLattice enumerate_segment(const RingPtr& S, const IdxSet& lo, const IdxSet& hi);

/* Lexicographically least maximal chain under canonical node order, each
 * step classified (every covering pair is a minimal extension). */
MinimalStepPath maximal_chain(const SubalgebraLattice& L);

bool is_chained(const SubalgebraLattice& L);

/* |[R,A]| versus the partition identity: sum over partitions P of Max(A) of
 * prod_{X in P} |[R,A_X]_loc|, where A_X is the idempotent factor of A at X
 * and _loc counts intermediate rings that are local. */
struct PartitionCheckReport {
  long long lattice_count = 0;
  long long partition_sum = 0;
  bool equal = false;
  int max_ideals = 0;  // |Max(A)|
};
PartitionCheckReport partition_count_check(const Extension& E);

/* Deterministic DOT digraph; nodes labeled by canonical id and size, edges
 * by their minimal-extension class. */
std::string hasse_dot(const SubalgebraLattice& L);

/* Desk-scale oracles for the node set, used to validate the BFS.
 * powerset_nodes filters all subsets of S containing R (|S \ R| <= 20);
 * additive_nodes enumerates the additive-subgroup interval first and keeps
 * the multiplicatively closed ones (|S| <= 64). */
std::vector<IdxSet> powerset_nodes(const Extension& E);
std::vector<IdxSet> additive_nodes(const Extension& E);

}  // namespace ringlat
