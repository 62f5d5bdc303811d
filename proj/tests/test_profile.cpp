#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "profile.hpp"

using namespace ctd;
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

std::vector<unsigned> as_masks(const std::vector<VertexSet>& sets) {
    std::vector<unsigned> out;
    for (VertexSet s : sets) out.push_back(static_cast<unsigned>(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<oracle::USep> as_usep(const OrientedSeps& o) {
    std::vector<oracle::USep> out;
    for (const Separation& s : o)
        out.emplace_back(static_cast<unsigned>(s.a), static_cast<unsigned>(s.b));
    std::sort(out.begin(), out.end());
    return out;
}

Graph disjoint_triangles() {
    return make_graph(9, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                          {6, 7}, {7, 8}, {8, 6}});
}

const Limits kLim;

}  // namespace

TEST_CASE("k_blocks on known graphs") {
    CHECK(as_masks(k_blocks(path_graph(4), 2)) ==
          std::vector<unsigned>{0b0011, 0b0110, 0b1100});
    CHECK(as_masks(k_blocks(complete_graph(5), 4)) == std::vector<unsigned>{0b11111});

    // Triangle of 5-cliques: blocks at k=3 are the three cliques plus the
    // triangle of shared vertices.
    Graph g = cycle_of_cliques(3, 5);
    REQUIRE(g.n() == 12);
    auto blocks = as_masks(k_blocks(g, 3));
    std::vector<unsigned> want = {
        static_cast<unsigned>(mask({0, 1, 2})),
        static_cast<unsigned>(mask({0, 1, 3, 4, 5})),
        static_cast<unsigned>(mask({1, 2, 6, 7, 8})),
        static_cast<unsigned>(mask({0, 2, 9, 10, 11}))};
    std::sort(want.begin(), want.end());
    CHECK(blocks == want);
}

TEST_CASE("k_blocks match the subset-sweep reference") {
    for (std::uint64_t seed = 700; seed < 712; ++seed) {
        Graph g = random_graph(6, 0.5, seed);
        for (int k = 2; k <= 4; ++k)
            CHECK(as_masks(k_blocks(g, k)) ==
                  oracle::blocks(g.n(), oracle::edge_list(g), k));
    }
    Graph ex = cycle_of_cliques(3, 5);
    CHECK(as_masks(k_blocks(ex, 3)) == oracle::blocks(ex.n(), oracle::edge_list(ex), 3));
}

TEST_CASE("block_profile orients every pair towards the block") {
    Graph p4 = path_graph(4);
    auto sys = enumerate_separations(p4, 2, 4096);
    OrientedSeps p = block_profile(sys, mask({0, 1}));
    CHECK(p == OrientedSeps{sep({2, 3}, {0, 1, 2}), sep({1, 2, 3}, {0, 1})});
    CHECK(orients(sys, p));
    for (const Separation& s : p) CHECK((mask({0, 1}) & ~s.b) == 0);

    Graph k5p = complete_graph(5);
    helpers::attach_clique(k5p, {0}, 1);
    auto sys2 = enumerate_separations(k5p, 2, 4096);
    OrientedSeps q = block_profile(sys2, mask({0, 1, 2, 3, 4}));
    REQUIRE(q.size() == 1);
    CHECK(q[0] == sep({0, 5}, {0, 1, 2, 3, 4}));
}

TEST_CASE("consistency witness on known orientations") {
    OrientedSeps good = {sep({0, 1}, {1, 2, 3}), sep({2, 3}, {0, 1, 2})};
    CHECK(is_consistent(good));

    OrientedSeps bad = {sep({1, 2, 3}, {0, 1}), sep({0, 1, 2}, {2, 3})};
    auto w = inconsistency_witness(bad);
    REQUIRE(w.has_value());
    CHECK(leq(inverse(w->second), w->first));

    CHECK(is_consistent({}));
    // Both directions of one pair point away from each other.
    CHECK(!is_consistent({sep({0, 1}, {1, 2, 3}), sep({1, 2, 3}, {0, 1})}));
}

TEST_CASE("profile axiom separates consistency from profiles") {
    Graph g = disjoint_triangles();
    VertexSet t0 = mask({0, 1, 2});
    VertexSet t1 = mask({3, 4, 5});
    VertexSet t2 = mask({6, 7, 8});
    OrientedSeps q = sorted_unique({Separation{t1, t0 | t2}, Separation{t2, t0 | t1},
                                    Separation{t0, t1 | t2}});
    CHECK(is_consistent(q));
    auto v = profile_violation(q);
    REQUIRE(v.has_value());
    CHECK(!is_profile(q));

    OrientedSeps p = sorted_unique({Separation{t1, t0 | t2}, Separation{t2, t0 | t1},
                                    Separation{t1 | t2, t0}});
    CHECK(is_profile(p));
}

TEST_CASE("p2 corner closure validator") {
    Graph g = disjoint_triangles();
    VertexSet t0 = mask({0, 1, 2});
    VertexSet t1 = mask({3, 4, 5});
    VertexSet t2 = mask({6, 7, 8});
    OrientedSeps p = sorted_unique({Separation{t1, t0 | t2}, Separation{t2, t0 | t1},
                                    Separation{t1 | t2, t0}});
    CHECK(!p2_violation(p, 1).has_value());

    OrientedSeps missing = sorted_unique({Separation{t1, t0 | t2}, Separation{t2, t0 | t1}});
    auto v = p2_violation(missing, 1);
    REQUIRE(v.has_value());
    Separation corner{v->first.a | v->second.a, v->first.b & v->second.b};
    CHECK(corner == Separation{t1 | t2, t0});
}

TEST_CASE("block profiles are profiles and distinguish their blocks") {
    std::vector<Graph> gs;
    gs.push_back(path_graph(4));
    gs.push_back(cycle_of_cliques(3, 5));
    for (std::uint64_t seed = 800; seed < 808; ++seed)
        gs.push_back(random_graph(6, 0.5, seed));
    for (const Graph& g : gs)
        for (int k = 2; k <= 4; ++k) {
            auto sys = enumerate_separations(g, k, 4096);
            std::set<OrientedSeps> seen;
            for (VertexSet x : k_blocks(g, k)) {
                OrientedSeps p = block_profile(sys, x);
                CHECK(is_profile(p));
                CHECK(orients(sys, p));
                CHECK(!seen.count(p));
                seen.insert(p);
            }
        }
}

TEST_CASE("enumerate_profiles matches the 2^pairs definitional sweep") {
    std::vector<std::pair<Graph, int>> cases;
    cases.emplace_back(path_graph(4), 2);
    cases.emplace_back(make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}), 2);
    cases.emplace_back(complete_graph(4), 3);
    cases.emplace_back(cycle_graph(4), 3);
    cases.emplace_back(cycle_graph(5), 3);
    cases.emplace_back(cycle_of_cliques(3, 5), 3);
    for (std::uint64_t seed = 900; seed < 906; ++seed)
        cases.emplace_back(random_graph(6, 0.55, seed), 3);

    for (const auto& [g, k] : cases) {
        auto sys = enumerate_separations(g, k, 4096);
        if (sys.pairs.size() > 14) continue;
        auto want = oracle::definitional_orientations(g.n(), oracle::edge_list(g), k, true);
        auto got = enumerate_profiles(g, k, kLim);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(as_usep(got[i]) == want[i]);
    }
}

TEST_CASE("profile counts on known graphs") {
    CHECK(enumerate_profiles(path_graph(4), 2, kLim).size() == 3);
    auto path_profiles = enumerate_profiles(path_graph(4), 2, kLim);
    auto sys = enumerate_separations(path_graph(4), 2, 4096);
    std::set<OrientedSeps> blocks_set;
    for (VertexSet x : k_blocks(path_graph(4), 2))
        blocks_set.insert(block_profile(sys, x));
    CHECK(std::set<OrientedSeps>(path_profiles.begin(), path_profiles.end()) == blocks_set);

    auto k4 = enumerate_profiles(complete_graph(4), 3, kLim);
    REQUIRE(k4.size() == 1);
    CHECK(k4[0].empty());

    Graph tp = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CHECK(enumerate_profiles(tp, 2, kLim).size() == 2);
}

TEST_CASE("consistent orientation search respects its node cap") {
    auto sys = enumerate_separations(path_graph(6), 2, 4096);
    CHECK_THROWS_AS(consistent_orientations(sys, 3, false), LimitError);
}

TEST_CASE("tangles on known graphs") {
    Graph p4 = path_graph(4);
    auto sys = enumerate_separations(p4, 2, 4096);
    auto orientations = consistent_orientations(sys, 1 << 20, false);
    REQUIRE(orientations.size() == 3);
    // Edge 1-2 never lies inside a first side, so every consistent
    // orientation of the path is a tangle.
    for (const auto& o : orientations) CHECK(is_tangle(p4, o));

    CHECK(is_tangle(complete_graph(4), {}));

    Graph ex = cycle_of_cliques(3, 5);
    auto sys3 = enumerate_separations(ex, 3, 4096);
    OrientedSeps clique_p = block_profile(sys3, mask({0, 1, 3, 4, 5}));
    CHECK(is_tangle(ex, clique_p));
    OrientedSeps triangle_p = block_profile(sys3, mask({0, 1, 2}));
    CHECK(!is_tangle(ex, triangle_p));
}

TEST_CASE("every tangle over the full system is a profile") {
    std::vector<std::pair<Graph, int>> cases;
    cases.emplace_back(path_graph(4), 2);
    cases.emplace_back(cycle_graph(5), 3);
    cases.emplace_back(cycle_of_cliques(3, 5), 3);
    for (std::uint64_t seed = 1000; seed < 1006; ++seed)
        cases.emplace_back(random_graph(6, 0.5, seed), 3);
    for (const auto& [g, k] : cases) {
        auto seps = oracle::definitional_separations(g.n(), oracle::edge_list(g), k);
        std::vector<oracle::USep> reps;
        for (const auto& s : seps)
            if (s < oracle::USep{s.second, s.first}) reps.push_back(s);
        if (reps.size() > 12) continue;
        for (unsigned long long choice = 0; choice < (1ull << reps.size()); ++choice) {
            OrientedSeps o;
            for (std::size_t i = 0; i < reps.size(); ++i) {
                auto [a, b] = reps[i];
                if ((choice >> i) & 1) std::swap(a, b);
                o.push_back({VertexSet{a}, VertexSet{b}});
            }
            o = sorted_unique(std::move(o));
            if (is_tangle(g, o)) CHECK(is_profile(o));
        }
    }
}

TEST_CASE("restrict_profile keeps low-order members only") {
    Graph g = cycle_graph(5);
    for (const auto& p : enumerate_profiles(g, 3, kLim)) {
        CHECK(restrict_profile(p, 3) == p);
        CHECK(restrict_profile(p, 1).empty());
        auto two = restrict_profile(p, 2);
        CHECK(restrict_profile(restrict_profile(p, 3), 2) == two);
        CHECK(is_profile(two));
        for (const Separation& s : two) CHECK(order(s) < 2);
    }
    auto p4_profiles = enumerate_profiles(path_graph(4), 2, kLim);
    std::set<OrientedSeps> restricted;
    for (const auto& p : p4_profiles) restricted.insert(restrict_profile(p, 2));
    CHECK(restricted.size() == 3);
}
