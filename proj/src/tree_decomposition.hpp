#pragma once

#include <optional>

#include "profile.hpp"

namespace ctd {

// Inversion-closed system whose members are pairwise nested.
struct NestedSystem {
    SeparationSystem sys;
};

// Throws InvariantError naming a crossing pair if the members are not
// pairwise nested.
NestedSystem make_nested(std::vector<Separation> seps, int k_bound);

struct TreeEdge {
    int u, v;                // u < v
    Separation towards_v;    // the member chosen by node v's orientation
};

// Nodes are the consistent orientations of the nested system in canonical
// (lexicographic) order; node t's part is the intersection of the second
// sides of its orientation. Edges join orientations differing on exactly
// one pair.
struct TreeDecomposition {
    NestedSystem nested;
    std::vector<OrientedSeps> orientations;
    std::vector<VertexSet> parts;
    std::vector<TreeEdge> edges;

    int node_count() const { return static_cast<int>(orientations.size()); }
    int adhesion() const;
};

TreeDecomposition decomposition_from_nested(const Graph& g, const NestedSystem& n,
                                            std::uint64_t max_nodes);

// Re-checks every decomposition axiom plus the induced-separation round trip:
// cover of vertices and edges, per-vertex subtrees, tree shape, one tree edge
// per system pair, and that the union of parts on the two sides of each edge
// reproduces the represented separation. Throws InvariantError.
void validate_decomposition(const Graph& g, const TreeDecomposition& td);

// The unique node whose orientation equals p restricted to the nested system.
// p must orient every pair of the system (it may orient more).
int inhabited_node(const TreeDecomposition& td, const OrientedSeps& p);

struct PartLabel {
    bool essential = false;  // some profile inhabits the node
    bool hub = false;        // part contained in some member's separator
};

std::vector<PartLabel> classify_parts(const TreeDecomposition& td,
                                      const std::vector<OrientedSeps>& profiles);

struct OrientTowards {
    // Node of td towards which o points, when o's restriction to the nested
    // system is consistent.
    std::optional<int> node;
    // When o itself is inconsistent: a two-pair system {s, -s, t, -t} with
    // inverse(t) <= s and s, t chosen by o, plus its decomposition, which o
    // orients towards no node.
    std::optional<std::array<Separation, 4>> witness;
    std::optional<TreeDecomposition> witness_td;
};

// o must orient all proper (<k)-separations; td must have adhesion < k.
OrientTowards orients_toward_node(const Graph& g, const TreeDecomposition& td,
                                  const OrientedSeps& o, int k);

}  // namespace ctd
