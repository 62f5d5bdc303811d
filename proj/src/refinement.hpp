#pragma once

#include "strategy.hpp"
#include "tree_decomposition.hpp"

namespace ctd {

struct WellSeparatedCheck {
    bool well_separated = false;
    // Maximal members of the block's orientation of the given system.
    std::vector<Separation> maximal;
    // A crossing pair of maximal members when not well separated.
    std::optional<std::pair<Separation, Separation>> witness;
};

// A block is well separated in sys when the maximal members oriented towards
// it are pairwise nested. sys members must have order below the block size.
WellSeparatedCheck well_separated_check(VertexSet block,
                                        const SeparationSystem& sys);

struct BlockFan {
    VertexSet block = 0;
    // One member per component C of G - block: (C | N(C), V - C), kept when
    // tight. Every member has the block inside its second side; members are
    // pairwise nested.
    std::vector<Separation> members;
};

BlockFan block_fan(const Graph& g, VertexSet block);

// Every fan member has order < k.
bool fan_orders_below(const Graph& g, int k, VertexSet block);

// Minimum order of a proper separation of order < k with x1 inside the first
// side and x2 inside the second. Distinct blocks always have one; throws
// InvariantError otherwise.
int min_distinguisher_order(const Graph& g, int k, VertexSet x1, VertexSet x2,
                            const Limits& lim = {});

struct BlockVerdict {
    VertexSet block = 0;
    bool well_separated = false;
    std::optional<std::pair<Separation, Separation>> ws_witness;
    int node = -1;  // node of the decomposition the block's profile inhabits
    bool part_equals_block = false;
};

struct RefineReport {
    TreeDecomposition td;
    std::vector<Separation> base;     // strategy output distinguishing blocks
    std::vector<Separation> refined;  // base plus well separated blocks' maxima
    std::vector<BlockVerdict> blocks;
    bool distinct_parts = false;   // no two blocks inhabit the same node
    bool ws_parts_exact = false;   // well separated blocks' parts equal them
    // Whether every member of the given system separates two blocks and at
    // least one block exists; only then is leaves_are_blocks asserted.
    bool leaves_applicable = false;
    bool leaves_are_blocks = false;
};

// Distinguishes the k-blocks by an iterated strategy run, requires every
// chosen separation to lie in s (InfeasibleError kind "membership"
// otherwise), adds the maxima of each well separated block's orientation of
// s, and decomposes. A crossing in the refined system raises InfeasibleError
// kind "crossing" naming the pair; no decomposition is produced then.
// s must hold proper separations of order < k only.
RefineReport refine_decomposition(const Graph& g, int k,
                                  const SeparationSystem& s,
                                  StrategyKind kind = StrategyKind::Ext,
                                  const Limits& lim = {});

struct GoodnessReport {
    bool canonical = false;    // automorphisms permute the system members
    bool adhesion_ok = false;  // adhesion < k
    bool efficient = false;    // blocks separated at minimum possible order
    std::vector<std::string> reasons;
    bool good() const { return canonical && adhesion_ok && efficient; }
};

GoodnessReport goodness(const Graph& g, int k, const TreeDecomposition& td,
                        const Limits& lim = {});

struct EdgeVerdict {
    Edge e;
    bool common_neighbors = false;  // at least k-3 shared neighbours
    bool many_paths = false;        // floor(3(k-2)/2) paths besides the edge
    bool shared_block = false;      // both ends in one k-block
    bool ok() const { return common_neighbors || many_paths || shared_block; }
};

struct HypothesisReport {
    bool connected_enough = false;  // (k-1)-connected
    std::vector<EdgeVerdict> edges;
    bool holds = false;
};

// When this holds, every part of the refined decomposition that contains a
// k-block is one. Requires k >= 2.
HypothesisReport part_exactness_hypotheses(const Graph& g, int k);

}  // namespace ctd
