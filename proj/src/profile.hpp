#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "separation.hpp"

namespace ctd {

// Any set of oriented separations, kept sorted for canonical form and
// binary-search membership. Used for orientations, profiles, and nested sets.
using OrientedSeps = std::vector<Separation>;

OrientedSeps sorted_unique(OrientedSeps seps);
bool oriented_member(const OrientedSeps& o, const Separation& s);

// True iff o picks exactly one direction of every pair of sys and nothing else.
bool orients(const SeparationSystem& sys, const OrientedSeps& o);

// Maximal vertex sets of size >= k in which no two vertices can be separated
// by fewer than k other vertices; maximal cliques of that relation.
std::vector<VertexSet> k_blocks(const Graph& g, int k);

// Orients every pair of sys towards the side containing the block.
OrientedSeps block_profile(const SeparationSystem& sys, VertexSet block);

// Two members point away from each other: (D,C) <= (A,B).
std::optional<std::pair<Separation, Separation>> inconsistency_witness(const OrientedSeps& o);
inline bool is_consistent(const OrientedSeps& o) { return !inconsistency_witness(o).has_value(); }

// Members (A,B),(C,D) whose corner (B&D, A|C) lies in o as well.
std::optional<std::array<Separation, 3>> profile_violation(const OrientedSeps& o);
inline bool is_profile(const OrientedSeps& o) {
    return is_consistent(o) && !profile_violation(o).has_value();
}

// Corner-closure validator: members (A,B),(C,D) of p whose corner (A|C, B&D)
// is proper of order < k but missing from p.
std::optional<std::pair<Separation, Separation>> p2_violation(const OrientedSeps& p, int k);

// All full orientations of sys that are consistent (and satisfy the profile
// axiom when require_profile). Backtracking over pairs; both predicates only
// ever fail on a subset already present, so pruning is exact. max_nodes
// bounds visited search nodes, LimitError past it.
std::vector<OrientedSeps> consistent_orientations(const SeparationSystem& sys,
                                                  std::uint64_t max_nodes,
                                                  bool require_profile);

// Streams the same orientations in search order without materializing them;
// fn returning false stops the search. Returns false iff stopped early.
bool for_each_consistent_orientation(const SeparationSystem& sys,
                                     std::uint64_t max_nodes, bool require_profile,
                                     const std::function<bool(const OrientedSeps&)>& fn);

// All k-profiles of g over the full proper (<k)-system.
std::vector<OrientedSeps> enumerate_profiles(const Graph& g, int k, const Limits& lim);

// No three first sides of members of o cover all vertices and edges of g.
bool is_tangle(const Graph& g, const OrientedSeps& o);

// p restricted to separations of order < l.
OrientedSeps restrict_profile(const OrientedSeps& p, int l);

}  // namespace ctd
