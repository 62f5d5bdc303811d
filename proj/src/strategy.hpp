#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "profile.hpp"

namespace ctd {

enum class StrategyKind { Ext, Loc };

std::string to_string(StrategyKind kind);
StrategyKind strategy_from_string(const std::string& name);

// A unit of work: a system to choose from, the profiles the choice must
// distinguish, and the nested context every candidate already respects.
struct Task {
    SeparationSystem s;
    std::vector<OrientedSeps> profiles;
    std::vector<Separation> context;  // sorted, inversion-closed, pairwise nested
};

// Validates that every profile orients every member of s and that every
// member of s is nested with every member of context.
Task make_task(SeparationSystem s, std::vector<OrientedSeps> profiles,
               std::vector<Separation> context);

// Keeps (A,B) iff some profile contains (A,B) and another contains (B,A).
Task reduce_task(const Task& t);

// The <=-maximal oriented members of a reduced task plus their inverses,
// with the unique profile owning each maximal member.
struct ExtremalChoice {
    SeparationSystem system;
    std::vector<Separation> maximal;  // sorted; parallel to owner
    std::vector<int> owner;           // index into the task's profiles
};

ExtremalChoice extremal_separations(const Task& t);

// Members (A,B) such that (A,B) or (B,A) is maximal in some profile's
// orientation of the task system, inversion-closed.
SeparationSystem locally_maximal_separations(const Task& t);

// Recursive single-order strategy: choose by kind, partition the profiles by
// their orientation of the choice, and recurse on each class of two or more
// profiles over the candidates confined to that class's region. The result
// is inversion-closed and pairwise nested.
std::vector<Separation> run_single(const Task& t, StrategyKind kind);

struct LevelTrace {
    int level = 0;
    int tasks_solved = 0;
    int separations_added = 0;  // oriented count
};

struct StrategyRun {
    StrategyKind kind = StrategyKind::Ext;
    int k = 0;
    std::vector<Separation> chosen;  // sorted, inversion-closed, pairwise nested
    std::vector<LevelTrace> per_level;
    int p = 0;                       // distinct input profiles
    std::vector<int> child_counts;   // children per internal profile-tree vertex
    std::optional<std::pair<Separation, Separation>> infeasibility_witness;
};

// Iterated strategy over levels 1..k: at level l, the profiles restricted to
// order < l are grouped by their order < l-1 restriction, and each group of
// two or more is solved over the proper separations of order exactly l-1
// that are nested with everything chosen so far and confined to the group's
// region. The accumulated result distinguishes all distinct input profiles.
StrategyRun run_iterated(const Graph& g, int k, StrategyKind kind,
                         const std::vector<OrientedSeps>& profiles,
                         const Limits& lim = {});

struct BoundLine {
    std::string name;
    bool holds = false;
};

// Part-count certificate for a run: the chosen system induces a tree with
// |chosen|/2 + 1 nodes, of which at most node_count - p are inessential.
struct BoundReport {
    int p = 0;
    int chosen_size = 0;
    int node_count = 0;
    int inessential = 0;
    bool connected_enough = false;  // g is (k-1)-connected
    std::vector<BoundLine> lines;
    bool all_hold = false;
};

BoundReport bound_report(const Graph& g, const StrategyRun& run);

}  // namespace ctd
