#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "strategy.hpp"
#include "tree_decomposition.hpp"

namespace ctd {

// Per-graph check verdict. Skip records a contract miss (infeasible task or
// a size limit), never a property violation.
struct CheckOutcome {
    enum class Kind { Pass, Skip, Fail } kind = Kind::Pass;
    std::string detail;

    bool passed() const { return kind == Kind::Pass; }
    bool failed() const { return kind == Kind::Fail; }
};

CheckOutcome pass_outcome();
CheckOutcome skip_outcome(std::string why);
CheckOutcome fail_outcome(std::string why);

enum class ProfileMode { Blocks, All };

std::string to_string(ProfileMode mode);
ProfileMode profile_mode_from_string(const std::string& name);

// Block profiles of the full proper (<k)-system, or all k-profiles.
std::vector<OrientedSeps> profiles_for(const Graph& g, int k, ProfileMode mode,
                                       const Limits& lim);

// One strategy execution; run is empty when the task was infeasible or a
// limit was hit, with the reason recorded.
struct ProducedRun {
    StrategyKind kind = StrategyKind::Ext;
    ProfileMode mode = ProfileMode::Blocks;
    std::optional<StrategyRun> run;
    std::string skip_reason;
};

// All four kind x mode executions for one graph and order bound.
std::vector<ProducedRun> produce_runs(const Graph& g, int k, const Limits& lim);

// Node orientations are exactly the consistent orientations of the chosen
// nested system, |N|/2 + 1 of them and pairwise distinct; the parts form a
// valid decomposition whose edges re-induce the system.
CheckOutcome check_orientation_bijection(const Graph& g, int k,
                                         const StrategyRun& run, const Limits& lim);

// Targeting over the full proper (<k)-system S. Consistent orientations of S
// restrict to consistent orientations of the nested system, so once the node
// list is verified complete, each targets exactly one node; the first
// `budget` stream through the integrated lookup as well. Inconsistent
// orientations are covered exactly: each contains a pointing-away pair, the
// witness decomposition depends only on that pair, and every such pair is
// checked; seeded random orientations exercise the integrated witness path.
CheckOutcome check_orientation_targets(const Graph& g, int k,
                                       const std::vector<TreeDecomposition>& tds,
                                       std::uint64_t budget, std::uint64_t seed,
                                       const Limits& lim);

// Part-count bounds of one run, including the tighter extremal bound on
// (k-1)-connected inputs.
CheckOutcome check_run_bounds(const Graph& g, const StrategyRun& run);

// Refinement over tight (<k)-separations: distinct blocks in distinct parts,
// well separated blocks' parts equal them, leaves are blocks when every
// produced part holds one.
CheckOutcome check_refinement_properties(const Graph& g, int k, StrategyKind kind,
                                         const Limits& lim);

// Well separated blocks pass fan_orders_below, and so does every block that
// occurs as a part of a produced decomposition.
CheckOutcome check_fan_orders(const Graph& g, int k, const Limits& lim);

// Hypothesis-gated exactness: when part_exactness_hypotheses holds, every
// block's part equals the block and distinct blocks sit in distinct parts.
CheckOutcome check_part_exactness(const Graph& g, int k, const Limits& lim);

// Every automorphism maps the chosen system onto itself.
CheckOutcome check_canonicity(const Graph& g, int k, const StrategyRun& run,
                              const Limits& lim);

struct CorpusEntry {
    std::string name;
    Graph g;
};

// Generator instances plus the frozen fixtures, capped at max_n vertices;
// random members are derived from the seed.
std::vector<CorpusEntry> verify_corpus(int max_n, std::uint64_t seed);

struct SuiteReport {
    std::string suite;
    int graphs = 0;
    int checks = 0;
    int skipped = 0;
    std::vector<std::string> failures;
    bool passed = false;
};

const std::vector<std::string>& suite_names();

// suite: one of suite_names(). Throws InputError on an unknown name.
SuiteReport run_suite(const std::string& suite, int max_n, std::uint64_t seed,
                      const Limits& lim);

}  // namespace ctd
