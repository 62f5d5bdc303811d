#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "separation.hpp"

namespace ctd {

// An n-cycle with an m-clique glued onto each cycle edge, otherwise
// disjoint. Cycle vertices come first; clique i holds cycle edge
// (i, (i+1) mod n) plus size-2 fresh vertices. Verified on construction:
// the 3-blocks are exactly the n cliques, plus the cycle itself when n == 3.
Graph gen_cycle_cliques(int count, int size);

// `count` m-cliques threaded on a path: the last vertex of each clique is
// joined to the first vertex of the next through one fresh path vertex, so
// middle cliques keep distinct entry and exit portals. Verified: the
// 3-blocks are exactly the cliques.
Graph gen_path_cliques(int count, int size);

// Complete core on {0..core_size-1} with three cliques glued onto the
// overlapping separators S1 = {0..k-2}, S2 = {1..k-1}, and S1 & S2, each
// clique adding `attach` fresh vertices. Verified: the k-blocks are exactly
// the four cliques, the refined decomposition is a star with centre part
// V(core), and the core is not well separated in the tight subsystem.
struct OverlappingAttachments {
    Graph g;
    int k = 0;
    VertexSet core = 0, s1 = 0, s2 = 0;
    std::array<VertexSet, 4> blocks{};  // core, K1, K2, K12
};
OverlappingAttachments gen_overlapping_attachments(int k, int core_size,
                                                   int attach);

// `copies` complete graphs K^5 sharing the single hub vertex 0. Verified:
// the 2-blocks are exactly the K^5 vertex sets.
Graph gen_glued_k5(int copies);

// One attached pair: x carries the order-4 separation peeling it off the
// core clique, y likewise; all_cross records that every x-peeling member
// crosses every y-peeling one. A nested system of order < 5 members can
// then induce at most one of them, so every part of an adhesion-4
// decomposition that contains the block also keeps x or y.
struct PinnedPair {
    int x = 0, y = 0;
    std::size_t x_separations = 0, y_separations = 0;
    bool all_cross = false;
};

// K^5 {0..4} plus `count` adjacent vertex pairs, pair i on vertices
// (5+2i, 6+2i), x joined to attach_x inside the clique and y to attach_y.
// The attachment pattern is found by search over clique subsets (sizes 4
// then 3, masks ascending) and frozen by the first single-pair instance
// satisfying the contract: 4-connected, single 5-block = {0..4}, and every
// pair's peeling separations crossing. Verified for the requested count.
struct PinnedPairs {
    Graph g;
    VertexSet block = 0;
    VertexSet attach_x = 0, attach_y = 0;
    std::vector<PinnedPair> pairs;
};
PinnedPairs gen_pinned_pairs(int count);

// Seeded pseudorandom simple graph on n vertices; each edge kept
// independently with probability `density`. Identical arguments produce
// identical graphs on every platform.
Graph gen_random(int n, double density, std::uint64_t seed);

}  // namespace ctd
