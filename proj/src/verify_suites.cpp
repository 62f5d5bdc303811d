#include "verify_suites.hpp"

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "generators.hpp"
#include "profile.hpp"
#include "refinement.hpp"
#include "separation.hpp"

namespace ctd {

CheckOutcome pass_outcome() { return {}; }

CheckOutcome skip_outcome(std::string why) {
    return {CheckOutcome::Kind::Skip, std::move(why)};
}

CheckOutcome fail_outcome(std::string why) {
    return {CheckOutcome::Kind::Fail, std::move(why)};
}

std::string to_string(ProfileMode mode) {
    return mode == ProfileMode::Blocks ? "blocks" : "all";
}

ProfileMode profile_mode_from_string(const std::string& name) {
    if (name == "blocks") return ProfileMode::Blocks;
    if (name == "all") return ProfileMode::All;
    throw InputError("unknown profile set '" + name + "' (expected blocks or all)");
}

std::vector<OrientedSeps> profiles_for(const Graph& g, int k, ProfileMode mode,
                                       const Limits& lim) {
    if (mode == ProfileMode::All) return enumerate_profiles(g, k, lim);
    SeparationSystem sys = enumerate_separations(g, k, lim.max_system_pairs);
    std::vector<OrientedSeps> out;
    for (VertexSet block : k_blocks(g, k)) out.push_back(block_profile(sys, block));
    return out;
}

std::vector<ProducedRun> produce_runs(const Graph& g, int k, const Limits& lim) {
    std::vector<ProducedRun> out;
    for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc})
        for (ProfileMode mode : {ProfileMode::Blocks, ProfileMode::All}) {
            ProducedRun pr;
            pr.kind = kind;
            pr.mode = mode;
            try {
                auto profiles = profiles_for(g, k, mode, lim);
                pr.run = run_iterated(g, k, kind, profiles, lim);
            } catch (const InfeasibleError& e) {
                pr.skip_reason = "infeasible(" + e.kind + "): " + e.what();
            } catch (const LimitError& e) {
                pr.skip_reason = std::string("limit: ") + e.what();
            }
            out.push_back(std::move(pr));
        }
    return out;
}

CheckOutcome check_orientation_bijection(const Graph& g, int k,
                                         const StrategyRun& run, const Limits& lim) {
    TreeDecomposition td;
    try {
        td = decomposition_from_nested(g, make_nested(run.chosen, k),
                                       lim.max_orientations);
    } catch (const LimitError& e) {
        return skip_outcome(std::string("limit: ") + e.what());
    }

    auto cons = consistent_orientations(td.nested.sys, lim.max_orientations, false);
    if (td.orientations != cons)
        return fail_outcome("node orientations differ from the consistent orientations");
    if (cons.size() != run.chosen.size() / 2 + 1)
        return fail_outcome("node count is not |N|/2 + 1");
    if (std::adjacent_find(cons.begin(), cons.end()) != cons.end())
        return fail_outcome("two nodes share an orientation");

    try {
        validate_decomposition(g, td);
    } catch (const InvariantError& e) {
        return fail_outcome(std::string("decomposition axiom failed: ") + e.what());
    }

    OrientedSeps induced;
    for (const TreeEdge& e : td.edges) {
        induced.push_back(e.towards_v);
        induced.push_back(inverse(e.towards_v));
    }
    if (sorted_unique(std::move(induced)) != sorted_unique(run.chosen))
        return fail_outcome("tree edges do not re-induce the chosen system");
    return pass_outcome();
}

CheckOutcome check_orientation_targets(const Graph& g, int k,
                                       const std::vector<TreeDecomposition>& tds,
                                       std::uint64_t budget, std::uint64_t seed,
                                       const Limits& lim) {
    SeparationSystem sys;
    try {
        sys = enumerate_separations(g, k, lim.max_system_pairs);
    } catch (const LimitError& e) {
        return skip_outcome(std::string("limit: ") + e.what());
    }

    // A consistent orientation of the full system restricts to a consistent
    // orientation of every nested subsystem, so a verified-complete node list
    // already pins its target to exactly one node.
    for (const TreeDecomposition& td : tds) {
        auto cons = consistent_orientations(td.nested.sys, lim.max_orientations, false);
        if (td.orientations != cons)
            return fail_outcome("node list is not the full consistent-orientation set");
    }

    // Every inconsistent orientation holds some pointing-away pair, and the
    // witness decomposition plus its target test depend only on that pair, so
    // sweeping all ordered pairs covers every inconsistent orientation.
    if (sys.pairs.size() <= 512) {
        std::size_t m = sys.members.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const Separation& mi = sys.members[i];
                const Separation& mj = sys.members[j];
                if (mj == mi || mj == inverse(mi)) continue;
                if (!leq(inverse(mj), mi)) continue;
                TreeDecomposition wtd = decomposition_from_nested(
                    g, make_nested({mi, mj}, k), 1u << 16);
                OrientedSeps held = sorted_unique({mi, mj});
                for (const OrientedSeps& node_o : wtd.orientations)
                    if (node_o == held)
                        return fail_outcome("witness decomposition has a target node for " +
                                            sep_text(mi) + " with " + sep_text(mj));
            }
    }

    std::string failure;
    std::uint64_t emitted = 0;
    try {
        for_each_consistent_orientation(
            sys, lim.max_orientations, false, [&](const OrientedSeps& o) {
                for (const TreeDecomposition& td : tds) {
                    OrientTowards res = orients_toward_node(g, td, o, k);
                    if (!res.node) {
                        failure = "consistent orientation targets no node";
                        return false;
                    }
                    if (res.witness) {
                        failure = "consistent orientation produced a witness";
                        return false;
                    }
                }
                return ++emitted < budget;
            });
    } catch (const InvariantError& e) {
        return fail_outcome(std::string("target lookup failed: ") + e.what());
    } catch (const LimitError&) {
        // Search-node cap before the emission budget: partial coverage is fine,
        // exactness rests on the complete-list argument above.
    }
    if (!failure.empty()) return fail_outcome(failure);

    std::mt19937_64 rng(seed);
    for (int t = 0; t < 32 && !sys.pairs.empty(); ++t) {
        OrientedSeps o;
        for (auto [i, j] : sys.pairs) o.push_back(sys.members[(rng() & 1) ? i : j]);
        o = sorted_unique(std::move(o));
        if (is_consistent(o)) continue;
        for (const TreeDecomposition& td : tds) {
            try {
                OrientTowards res = orients_toward_node(g, td, o, k);
                if (!res.witness || !res.witness_td)
                    return fail_outcome("inconsistent orientation produced no witness");
            } catch (const InvariantError& e) {
                return fail_outcome(std::string("witness verification failed: ") + e.what());
            }
        }
    }
    return pass_outcome();
}

CheckOutcome check_run_bounds(const Graph& g, const StrategyRun& run) {
    BoundReport rep = bound_report(g, run);
    if (rep.all_hold) return pass_outcome();
    std::string why = "bounds violated:";
    for (const BoundLine& l : rep.lines)
        if (!l.holds) why += " " + l.name;
    return fail_outcome(why);
}

namespace {

SeparationSystem tight_system(const Graph& g, int k, const Limits& lim) {
    return tight_subsystem(g, enumerate_separations(g, k, lim.max_system_pairs));
}

}  // namespace

CheckOutcome check_refinement_properties(const Graph& g, int k, StrategyKind kind,
                                         const Limits& lim) {
    RefineReport rep;
    try {
        rep = refine_decomposition(g, k, tight_system(g, k, lim), kind, lim);
    } catch (const InfeasibleError& e) {
        return skip_outcome("infeasible(" + e.kind + "): " + e.what());
    } catch (const LimitError& e) {
        return skip_outcome(std::string("limit: ") + e.what());
    }
    if (!rep.distinct_parts) return fail_outcome("two blocks share a part");
    if (!rep.ws_parts_exact)
        return fail_outcome("a well separated block's part exceeds the block");
    if (rep.leaves_applicable && !rep.leaves_are_blocks)
        return fail_outcome("a leaf part is not a block");
    return pass_outcome();
}

CheckOutcome check_fan_orders(const Graph& g, int k, const Limits& lim) {
    std::vector<VertexSet> blocks = k_blocks(g, k);
    SeparationSystem tight;
    try {
        tight = tight_system(g, k, lim);
    } catch (const LimitError& e) {
        return skip_outcome(std::string("limit: ") + e.what());
    }

    for (VertexSet b : blocks)
        if (well_separated_check(b, tight).well_separated && !fan_orders_below(g, k, b))
            return fail_outcome("well separated block fails the fan bound: " + set_text(b));

    auto check_parts = [&](const TreeDecomposition& td) -> CheckOutcome {
        for (VertexSet part : td.parts)
            if (std::find(blocks.begin(), blocks.end(), part) != blocks.end() &&
                !fan_orders_below(g, k, part))
                return fail_outcome("block part fails the fan bound: " + set_text(part));
        return pass_outcome();
    };

    for (const ProducedRun& pr : produce_runs(g, k, lim)) {
        if (!pr.run) continue;
        TreeDecomposition td;
        try {
            td = decomposition_from_nested(g, make_nested(pr.run->chosen, k),
                                           lim.max_orientations);
        } catch (const LimitError&) {
            continue;
        }
        if (CheckOutcome out = check_parts(td); out.failed()) return out;
    }
    for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc}) {
        RefineReport rep;
        try {
            rep = refine_decomposition(g, k, tight, kind, lim);
        } catch (const InfeasibleError&) {
            continue;
        } catch (const LimitError&) {
            continue;
        }
        if (CheckOutcome out = check_parts(rep.td); out.failed()) return out;
    }
    return pass_outcome();
}

CheckOutcome check_part_exactness(const Graph& g, int k, const Limits& lim) {
    HypothesisReport hyp = part_exactness_hypotheses(g, k);
    if (!hyp.holds) return skip_outcome("hypotheses not satisfied");

    SeparationSystem tight;
    try {
        tight = tight_system(g, k, lim);
    } catch (const LimitError& e) {
        return skip_outcome(std::string("limit: ") + e.what());
    }
    for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc}) {
        RefineReport rep;
        try {
            rep = refine_decomposition(g, k, tight, kind, lim);
        } catch (const InfeasibleError& e) {
            return skip_outcome("infeasible(" + e.kind + "): " + e.what());
        } catch (const LimitError& e) {
            return skip_outcome(std::string("limit: ") + e.what());
        }
        if (!rep.distinct_parts) return fail_outcome("two blocks share a part");
        for (const BlockVerdict& v : rep.blocks)
            if (!v.part_equals_block)
                return fail_outcome("part strictly exceeds its block: " + set_text(v.block));
    }
    return pass_outcome();
}

CheckOutcome check_canonicity(const Graph& g, int k, const StrategyRun& run,
                              const Limits& lim) {
    (void)k;
    std::vector<std::vector<int>> autos;
    try {
        autos = g.automorphisms(lim.max_automorphisms);
    } catch (const LimitError& e) {
        return skip_outcome(std::string("limit: ") + e.what());
    }
    OrientedSeps chosen = sorted_unique(run.chosen);
    for (const std::vector<int>& perm : autos) {
        OrientedSeps image;
        image.reserve(chosen.size());
        for (const Separation& s : chosen) image.push_back(map_separation(perm, s));
        if (sorted_unique(std::move(image)) != chosen)
            return fail_outcome("an automorphism moves the chosen system");
    }
    return pass_outcome();
}

std::vector<CorpusEntry> verify_corpus(int max_n, std::uint64_t seed) {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, Graph g) {
        if (g.n() <= max_n) out.push_back({std::move(name), std::move(g)});
    };
    add("path_cliques(2,4)", gen_path_cliques(2, 4));
    add("path_cliques(3,4)", gen_path_cliques(3, 4));
    add("path_cliques(4,4)", gen_path_cliques(4, 4));
    add("path_cliques(4,5)", gen_path_cliques(4, 5));
    add("cycle_cliques(3,4)", gen_cycle_cliques(3, 4));
    add("cycle_cliques(4,4)", gen_cycle_cliques(4, 4));
    add("cycle_cliques(5,5)", gen_cycle_cliques(5, 5));
    add("overlapping_attachments(3,4,3)", gen_overlapping_attachments(3, 4, 3).g);
    add("overlapping_attachments(4,6,3)", gen_overlapping_attachments(4, 6, 3).g);
    add("glued_k5(3)", gen_glued_k5(3));
    add("glued_k5(4)", gen_glued_k5(4));
    add("pinned_pairs(1)", gen_pinned_pairs(1).g);
    add("pinned_pairs(3)", gen_pinned_pairs(3).g);
    add("random(8,0.5)#" + std::to_string(seed), gen_random(8, 0.5, seed));
    add("random(10,0.4)#" + std::to_string(seed + 1), gen_random(10, 0.4, seed + 1));
    add("random(12,0.35)#" + std::to_string(seed + 2), gen_random(12, 0.35, seed + 2));
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"orientations", "bounds",
                                                "refinement", "exactness"};
    return names;
}

namespace {

struct SuiteTally {
    SuiteReport rep;

    void record(const std::string& where, const CheckOutcome& out) {
        ++rep.checks;
        if (out.kind == CheckOutcome::Kind::Skip) ++rep.skipped;
        if (out.kind == CheckOutcome::Kind::Fail)
            rep.failures.push_back(where + ": " + out.detail);
    }
};

std::string run_label(const ProducedRun& pr) {
    return to_string(pr.kind) + "/" + to_string(pr.mode);
}

}  // namespace

SuiteReport run_suite(const std::string& suite, int max_n, std::uint64_t seed,
                      const Limits& lim) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) ==
        suite_names().end())
        throw InputError("unknown suite '" + suite + "'");

    std::vector<CorpusEntry> corpus = verify_corpus(max_n, seed);
    SuiteTally tally;
    tally.rep.suite = suite;
    tally.rep.graphs = static_cast<int>(corpus.size());

    for (const CorpusEntry& entry : corpus) {
        int top_k = std::min(4, lim.max_k);
        if (suite == "orientations") {
            for (int k = 1; k <= top_k; ++k) {
                std::vector<TreeDecomposition> tds;
                for (const ProducedRun& pr : produce_runs(entry.g, k, lim)) {
                    std::string where = entry.name + " k=" + std::to_string(k) +
                                        " " + run_label(pr);
                    if (!pr.run) {
                        tally.record(where, skip_outcome(pr.skip_reason));
                        continue;
                    }
                    tally.record(where,
                                 check_orientation_bijection(entry.g, k, *pr.run, lim));
                    try {
                        tds.push_back(decomposition_from_nested(
                            entry.g, make_nested(pr.run->chosen, k),
                            lim.max_orientations));
                    } catch (const LimitError&) {
                    }
                }
                if (k <= 3)
                    tally.record(entry.name + " k=" + std::to_string(k) + " targets",
                                 check_orientation_targets(entry.g, k, tds, 2000,
                                                           seed, lim));
            }
        } else if (suite == "bounds") {
            for (int k = 1; k <= top_k; ++k)
                for (const ProducedRun& pr : produce_runs(entry.g, k, lim)) {
                    std::string where = entry.name + " k=" + std::to_string(k) +
                                        " " + run_label(pr);
                    if (!pr.run) {
                        tally.record(where, skip_outcome(pr.skip_reason));
                        continue;
                    }
                    tally.record(where, check_run_bounds(entry.g, *pr.run));
                    tally.record(where + " canonicity",
                                 check_canonicity(entry.g, k, *pr.run, lim));
                }
        } else if (suite == "refinement") {
            for (int k = 2; k <= top_k; ++k) {
                std::string where = entry.name + " k=" + std::to_string(k);
                for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc})
                    tally.record(where + " " + to_string(kind),
                                 check_refinement_properties(entry.g, k, kind, lim));
                tally.record(where + " fan_orders",
                             check_fan_orders(entry.g, k, lim));
            }
        } else {  // exactness
            for (int k = 2; k <= top_k; ++k)
                tally.record(entry.name + " k=" + std::to_string(k),
                             check_part_exactness(entry.g, k, lim));
        }
    }
    tally.rep.passed = tally.rep.failures.empty();
    return tally.rep;
}

}  // namespace ctd
