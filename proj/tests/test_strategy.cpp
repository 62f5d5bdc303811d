#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "strategy.hpp"
#include "tree_decomposition.hpp"

using namespace ctd;
using helpers::attach_clique;
using helpers::complete_graph;
using helpers::cycle_graph;
using helpers::cycle_of_cliques;
using helpers::make_graph;
using helpers::path_graph;
using helpers::random_graph;

namespace {

VertexSet mask(std::initializer_list<int> vs) {
    VertexSet m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

Separation sep(std::initializer_list<int> a, std::initializer_list<int> b) {
    return {mask(a), mask(b)};
}

Graph glued_k5s() {
    Graph g(1);
    attach_clique(g, {0}, 4);
    attach_clique(g, {0}, 4);
    attach_clique(g, {0}, 4);
    return g;
}

std::vector<OrientedSeps> block_profiles(const Graph& g, int k,
                                         const SeparationSystem& sys) {
    std::vector<OrientedSeps> out;
    for (VertexSet x : k_blocks(g, k)) out.push_back(block_profile(sys, x));
    return out;
}

Task full_task(const Graph& g, int k, std::vector<OrientedSeps> profiles) {
    return make_task(enumerate_separations(g, k, 4096), std::move(profiles), {});
}

bool subset_of(const std::vector<Separation>& small,
               const std::vector<Separation>& big) {
    std::set<Separation> bs(big.begin(), big.end());
    return std::all_of(small.begin(), small.end(),
                       [&](const Separation& s) { return bs.count(s) > 0; });
}

bool invariant_under_automorphisms(const Graph& g,
                                   const std::vector<Separation>& chosen) {
    std::set<Separation> base(chosen.begin(), chosen.end());
    for (const auto& perm : g.automorphisms(1 << 20))
        for (const Separation& m : chosen)
            if (base.count(map_separation(perm, m)) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("make_task validates orientation and context") {
    Graph p4 = path_graph(4);
    auto sys = enumerate_separations(p4, 2, 4096);
    auto profiles = block_profiles(p4, 2, sys);
    CHECK_NOTHROW(make_task(sys, profiles, {}));

    OrientedSeps truncated = {profiles[0][0]};
    CHECK_THROWS_AS(make_task(sys, {truncated}, {}), InputError);

    Graph c4 = cycle_graph(4);
    auto csys = enumerate_separations(c4, 3, 4096);
    REQUIRE(csys.pairs.size() == 2);
    Separation crossing = csys.members[csys.pairs[1].first];
    CHECK_THROWS_AS(make_task(make_system({csys.members[csys.pairs[0].first]}, 3),
                              enumerate_profiles(c4, 3, {}), {crossing}),
                    InputError);
}

TEST_CASE("reduce_task keeps exactly the distinguishing members") {
    Graph p4 = path_graph(4);
    auto sys = enumerate_separations(p4, 2, 4096);
    auto profiles = block_profiles(p4, 2, sys);

    auto all = reduce_task(full_task(p4, 2, profiles));
    CHECK(all.s.members == sys.members);

    auto single = reduce_task(full_task(p4, 2, {profiles[0]}));
    CHECK(single.s.members.empty());

    auto empty = reduce_task(make_task(make_system({}, 2), profiles, {}));
    CHECK(empty.s.members.empty());

    // The two right blocks orient the left cut identically, so only the
    // right cut distinguishes them.
    auto partial = reduce_task(full_task(p4, 2, {profiles[1], profiles[2]}));
    CHECK(partial.s.pairs.size() == 1);
    CHECK(partial.s.contains(sep({0, 1, 2}, {2, 3})));
}

TEST_CASE("extremal separations and their owning profiles") {
    Graph p4 = path_graph(4);
    auto sys = enumerate_separations(p4, 2, 4096);
    auto profiles = block_profiles(p4, 2, sys);
    auto choice = extremal_separations(reduce_task(full_task(p4, 2, profiles)));
    CHECK(choice.maximal ==
          std::vector<Separation>{sep({0, 1, 2}, {2, 3}), sep({1, 2, 3}, {0, 1})});
    CHECK(choice.owner == std::vector<int>{2, 0});
    CHECK(choice.system.members.size() == 4);

    Graph g = glued_k5s();
    auto gsys = enumerate_separations(g, 2, 4096);
    auto gchoice =
        extremal_separations(reduce_task(full_task(g, 2, block_profiles(g, 2, gsys))));
    CHECK(gchoice.maximal.size() == 3);
    CHECK(gchoice.system.members.size() == 6);
    std::set<int> owners(gchoice.owner.begin(), gchoice.owner.end());
    CHECK(owners.size() == 3);
    for (const Separation& m : gchoice.maximal) CHECK(popcount(m.b) == 5);

    auto none = extremal_separations(
        reduce_task(full_task(p4, 2, {block_profiles(p4, 2, sys)[0]})));
    CHECK(none.maximal.empty());
    CHECK(none.system.members.empty());
}

TEST_CASE("locally maximal separations contain the extremal ones") {
    struct Case {
        Graph g;
        int k;
    };
    std::vector<Case> cases = {{path_graph(4), 2},
                               {path_graph(6), 2},
                               {glued_k5s(), 2},
                               {cycle_of_cliques(3, 5), 3},
                               {make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), 2}};
    for (const auto& [g, k] : cases) {
        auto sys = enumerate_separations(g, k, 4096);
        auto profiles = block_profiles(g, k, sys);
        auto r = reduce_task(full_task(g, k, profiles));
        auto ext = extremal_separations(r).system;
        auto loc = locally_maximal_separations(r);
        CHECK(subset_of(ext.members, loc.members));
    }

    Graph p4 = path_graph(4);
    auto sys = enumerate_separations(p4, 2, 4096);
    auto r = reduce_task(full_task(p4, 2, block_profiles(p4, 2, sys)));
    CHECK(locally_maximal_separations(r).members ==
          extremal_separations(r).system.members);
}

TEST_CASE("run_single on a path picks the end cuts then the interior ones") {
    Graph p6 = path_graph(6);
    auto sys = enumerate_separations(p6, 2, 4096);
    REQUIRE(sys.pairs.size() == 4);
    auto profiles = block_profiles(p6, 2, sys);
    REQUIRE(profiles.size() == 5);

    for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc}) {
        auto n = run_single(full_task(p6, 2, profiles), kind);
        CHECK(n.size() == 8);
        CHECK(subset_of({sep({0, 1}, {1, 2, 3, 4, 5}), sep({0, 1, 2}, {2, 3, 4, 5}),
                         sep({0, 1, 2, 3}, {3, 4, 5}), sep({0, 1, 2, 3, 4}, {4, 5})},
                        n));
    }

    CHECK(run_single(full_task(p6, 2, {profiles[0]}), StrategyKind::Ext).empty());
    CHECK(run_single(full_task(p6, 2, {}), StrategyKind::Loc).empty());
}

TEST_CASE("iterated runs on paths and low-connectivity graphs") {
    Graph p4 = path_graph(4);
    auto sys = enumerate_separations(p4, 2, 4096);
    for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc}) {
        auto run = run_iterated(p4, 2, kind, block_profiles(p4, 2, sys));
        CHECK(run.p == 3);
        CHECK(run.chosen.size() == 4);
        CHECK(run.per_level.size() == 2);
        CHECK(run.per_level[1].separations_added == 4);
    }

    Graph tp = make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto tsys = enumerate_separations(tp, 2, 4096);
    auto trun = run_iterated(tp, 2, StrategyKind::Ext, block_profiles(tp, 2, tsys));
    CHECK(trun.p == 2);
    CHECK(trun.chosen ==
          std::vector<Separation>{sep({0, 1, 2}, {2, 3}), sep({2, 3}, {0, 1, 2})});

    Graph p6 = path_graph(6);
    auto psys = enumerate_separations(p6, 2, 4096);
    for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc}) {
        auto run = run_iterated(p6, 2, kind, block_profiles(p6, 2, psys));
        CHECK(run.p == 5);
        CHECK(run.chosen.size() == 8);
        auto td = decomposition_from_nested(p6, make_nested(run.chosen, 2), 1 << 20);
        CHECK(td.node_count() == 5);
    }
}

TEST_CASE("iterated run on a clique ring isolates each clique part") {
    Graph g = cycle_of_cliques(3, 5);
    auto sys = enumerate_separations(g, 3, 4096);
    auto profiles = block_profiles(g, 3, sys);
    REQUIRE(profiles.size() == 4);
    for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc}) {
        auto run = run_iterated(g, 3, kind, profiles);
        CHECK(run.chosen.size() == 6);
        auto td = decomposition_from_nested(g, make_nested(run.chosen, 3), 1 << 20);
        std::multiset<VertexSet> parts(td.parts.begin(), td.parts.end());
        std::multiset<VertexSet> expected;
        expected.insert(mask({0, 1, 2}));
        for (VertexSet x : k_blocks(g, 3))
            if (popcount(x) == 5) expected.insert(x);
        CHECK(parts == expected);
    }

    Graph k4 = complete_graph(4);
    auto krun = run_iterated(k4, 3, StrategyKind::Ext,
                             block_profiles(k4, 3, enumerate_separations(k4, 3, 4096)));
    CHECK(krun.p == 1);
    CHECK(krun.chosen.empty());
}

TEST_CASE("glued cliques give one inessential hub and sharp ext bound") {
    Graph g = glued_k5s();
    auto sys = enumerate_separations(g, 2, 4096);
    auto profiles = block_profiles(g, 2, sys);
    REQUIRE(profiles.size() == 3);
    for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc}) {
        auto run = run_iterated(g, 2, kind, profiles);
        CHECK(run.chosen.size() == 6);
        auto report = bound_report(g, run);
        CHECK(report.p == 3);
        CHECK(report.node_count == 4);
        CHECK(report.inessential == 1);
        CHECK(report.connected_enough);
        CHECK(report.all_hold);

        auto td = decomposition_from_nested(g, make_nested(run.chosen, 2), 1 << 20);
        auto labels = classify_parts(td, profiles);
        std::vector<int> degree(td.node_count(), 0);
        for (const TreeEdge& e : td.edges) {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        for (int t = 0; t < td.node_count(); ++t)
            if (degree[t] == 1) CHECK(labels[t].essential);
        for (const TreeEdge& e : td.edges)
            CHECK((labels[e.u].essential || labels[e.v].essential));
    }
}

TEST_CASE("bound lines hold on every feasible sample run") {
    struct Case {
        Graph g;
        int k;
    };
    std::vector<Case> cases = {{path_graph(4), 2},
                               {path_graph(6), 2},
                               {glued_k5s(), 2},
                               {cycle_of_cliques(3, 5), 3},
                               {complete_graph(4), 3},
                               {make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), 2}};
    for (unsigned seed = 400; seed < 408; ++seed)
        cases.push_back({random_graph(6, 0.5, seed), 3});
    int feasible = 0;
    for (const auto& [g, k] : cases) {
        auto sys = enumerate_separations(g, k, 4096);
        for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc}) {
            for (bool use_blocks : {true, false}) {
                std::vector<OrientedSeps> profiles =
                    use_blocks ? block_profiles(g, k, sys)
                               : enumerate_profiles(g, k, {});
                try {
                    auto run = run_iterated(g, k, kind, profiles);
                    auto report = bound_report(g, run);
                    CHECK(report.all_hold);
                    CHECK(report.node_count == static_cast<int>(run.chosen.size()) / 2 + 1);
                    feasible += 1;
                } catch (const InfeasibleError&) {
                    // Outside the feasibility contract; nothing is claimed.
                }
            }
        }
    }
    CHECK(feasible >= 20);
}

TEST_CASE("crossing extremal candidates are reported as infeasible") {
    Graph c4 = cycle_graph(4);
    auto profiles = enumerate_profiles(c4, 3, {});
    REQUIRE(profiles.size() == 4);
    for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc}) {
        try {
            run_iterated(c4, 3, kind, profiles);
            FAIL("expected InfeasibleError");
        } catch (const InfeasibleError& e) {
            CHECK(e.kind == "crossing");
        }
    }
}

TEST_CASE("empty profile set yields the trivial run") {
    Graph c4 = cycle_graph(4);
    auto run = run_iterated(c4, 3, StrategyKind::Ext, {});
    CHECK(run.p == 0);
    CHECK(run.chosen.empty());
    auto report = bound_report(c4, run);
    CHECK(report.node_count == 1);
    CHECK(report.lines.size() == 1);
    CHECK(report.all_hold);
}

TEST_CASE("chosen systems are automorphism-invariant and deterministic") {
    struct Case {
        Graph g;
        int k;
        bool use_blocks;
    };
    std::vector<Case> cases = {{path_graph(6), 2, true},
                               {glued_k5s(), 2, true},
                               {cycle_of_cliques(3, 5), 3, true},
                               {path_graph(4), 2, false}};
    for (unsigned seed = 500; seed < 506; ++seed) {
        cases.push_back({random_graph(6, 0.45, seed), 2, true});
        cases.push_back({random_graph(6, 0.45, seed), 3, false});
    }
    int checked = 0;
    for (const auto& [g, k, use_blocks] : cases) {
        auto sys = enumerate_separations(g, k, 4096);
        std::vector<OrientedSeps> profiles = use_blocks
                                                 ? block_profiles(g, k, sys)
                                                 : enumerate_profiles(g, k, {});
        for (StrategyKind kind : {StrategyKind::Ext, StrategyKind::Loc}) {
            try {
                auto run = run_iterated(g, k, kind, profiles);
                CHECK(invariant_under_automorphisms(g, run.chosen));
                auto again = run_iterated(g, k, kind, profiles);
                CHECK(run.chosen == again.chosen);
                checked += 1;
            } catch (const InfeasibleError&) {
            }
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("bad strategy inputs are rejected") {
    Graph p4 = path_graph(4);
    auto sys = enumerate_separations(p4, 2, 4096);
    CHECK(strategy_from_string("ext") == StrategyKind::Ext);
    CHECK(strategy_from_string("loc") == StrategyKind::Loc);
    CHECK_THROWS_AS(strategy_from_string("all"), InputError);
    CHECK(to_string(StrategyKind::Loc) == "loc");

    OrientedSeps inconsistent = {sep({0, 1, 2}, {2, 3}), sep({1, 2, 3}, {0, 1})};
    CHECK_THROWS_AS(run_iterated(p4, 2, StrategyKind::Ext, {inconsistent}),
                    InputError);
    OrientedSeps partial = {sep({0, 1}, {1, 2, 3})};
    CHECK_THROWS_AS(run_iterated(p4, 2, StrategyKind::Ext, {partial}), InputError);
    CHECK_THROWS_AS(run_iterated(p4, 0, StrategyKind::Ext, {}), InputError);
    CHECK_THROWS_AS(run_iterated(p4, 9, StrategyKind::Ext, {}), InputError);
}
