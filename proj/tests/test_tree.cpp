#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tree_decomposition.hpp"

using namespace ctd;
using helpers::attach_clique;
using helpers::complete_graph;
using helpers::cycle_graph;
using helpers::make_graph;
using helpers::path_graph;

namespace {

VertexSet mask(std::initializer_list<int> vs) {
    VertexSet m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

Separation sep(std::initializer_list<int> a, std::initializer_list<int> b) {
    return {mask(a), mask(b)};
}

std::multiset<VertexSet> part_multiset(const TreeDecomposition& td) {
    return {td.parts.begin(), td.parts.end()};
}

Graph glued_k5s() {
    Graph g(1);
    attach_clique(g, {0}, 4);
    attach_clique(g, {0}, 4);
    attach_clique(g, {0}, 4);
    return g;
}

}  // namespace

TEST_CASE("make_nested rejects crossing members") {
    Separation c1 = sep({0, 1, 2}, {0, 2, 3});
    Separation c2 = sep({1, 2, 3}, {0, 1, 3});
    CHECK_THROWS_AS(make_nested({c1, c2}, 3), InvariantError);
    CHECK_NOTHROW(make_nested({sep({0, 1}, {1, 2, 3}), sep({0, 1, 2}, {2, 3})}, 2));
}

TEST_CASE("empty system yields the one-part decomposition") {
    Graph g = cycle_graph(5);
    auto td = decomposition_from_nested(g, make_nested({}, 2), 1 << 20);
    CHECK(td.node_count() == 1);
    CHECK(td.parts == std::vector<VertexSet>{g.vertices()});
    CHECK(td.edges.empty());
    CHECK(td.adhesion() == 0);
}

TEST_CASE("path cuts give the path of parts") {
    Graph p4 = path_graph(4);
    auto n = make_nested({sep({0, 1}, {1, 2, 3}), sep({0, 1, 2}, {2, 3})}, 2);
    auto td = decomposition_from_nested(p4, n, 1 << 20);
    CHECK(td.node_count() == 3);
    CHECK(part_multiset(td) ==
          std::multiset<VertexSet>{mask({0, 1}), mask({1, 2}), mask({2, 3})});
    CHECK(td.edges.size() == 2);
    CHECK(td.adhesion() == 1);

    Graph p6 = path_graph(6);
    std::vector<Separation> cuts;
    for (int i = 1; i <= 4; ++i) {
        VertexSet left = 0;
        for (int v = 0; v <= i; ++v) left |= bit(v);
        cuts.push_back({left, p6.vertices() & ~(left & ~bit(i))});
    }
    auto td6 = decomposition_from_nested(p6, make_nested(cuts, 2), 1 << 20);
    CHECK(td6.node_count() == 5);
    CHECK(part_multiset(td6) ==
          std::multiset<VertexSet>{mask({0, 1}), mask({1, 2}), mask({2, 3}),
                                   mask({3, 4}), mask({4, 5})});
}

TEST_CASE("star system yields a hub centre") {
    Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    auto n = make_nested({sep({0, 1}, {0, 2, 3}), sep({0, 2}, {0, 1, 3}),
                          sep({0, 3}, {0, 1, 2})},
                         2);
    auto td = decomposition_from_nested(star, n, 1 << 20);
    CHECK(td.node_count() == 4);
    CHECK(part_multiset(td) == std::multiset<VertexSet>{mask({0}), mask({0, 1}),
                                                        mask({0, 2}), mask({0, 3})});

    auto sys = enumerate_separations(star, 2, 4096);
    std::vector<OrientedSeps> profiles;
    for (VertexSet x : k_blocks(star, 2)) profiles.push_back(block_profile(sys, x));
    REQUIRE(profiles.size() == 3);
    auto labels = classify_parts(td, profiles);
    int essential = 0, hubs = 0;
    for (int t = 0; t < td.node_count(); ++t) {
        essential += labels[t].essential;
        hubs += labels[t].hub;
        if (labels[t].hub) {
            CHECK(td.parts[t] == mask({0}));
            CHECK(!labels[t].essential);
        }
    }
    CHECK(essential == 3);
    CHECK(hubs == 1);
}

TEST_CASE("three cliques glued in a vertex decompose into cliques plus hub") {
    Graph g = glued_k5s();
    REQUIRE(g.n() == 13);
    auto sys = enumerate_separations(g, 2, 4096);
    REQUIRE(sys.pairs.size() == 3);
    auto n = make_nested(sys.members, 2);
    auto td = decomposition_from_nested(g, n, 1 << 20);
    CHECK(td.node_count() == 4);

    std::vector<OrientedSeps> profiles;
    for (VertexSet x : k_blocks(g, 2)) profiles.push_back(block_profile(sys, x));
    REQUIRE(profiles.size() == 3);
    auto labels = classify_parts(td, profiles);
    for (int t = 0; t < td.node_count(); ++t) {
        if (td.parts[t] == mask({0})) {
            CHECK(labels[t].hub);
            CHECK(!labels[t].essential);
        } else {
            CHECK(popcount(td.parts[t]) == 5);
            CHECK(labels[t].essential);
        }
    }
}

TEST_CASE("profiles inhabit the node holding their block") {
    struct Case {
        Graph g;
        int k;
        std::vector<Separation> nested;
    };
    std::vector<Case> cases;
    cases.push_back({path_graph(4), 2,
                     {sep({0, 1}, {1, 2, 3}), sep({0, 1, 2}, {2, 3})}});
    cases.push_back({glued_k5s(), 2, {}});
    {
        auto sys = enumerate_separations(glued_k5s(), 2, 4096);
        cases.back().nested = sys.members;
    }
    for (const auto& c : cases) {
        auto sys = enumerate_separations(c.g, c.k, 4096);
        auto td = decomposition_from_nested(c.g, make_nested(c.nested, c.k), 1 << 20);
        for (VertexSet x : k_blocks(c.g, c.k)) {
            OrientedSeps p = block_profile(sys, x);
            int t = inhabited_node(td, p);
            CHECK((x & ~td.parts[t]) == 0);
        }
    }

    Graph p4 = path_graph(4);
    auto sys = enumerate_separations(p4, 2, 4096);
    auto td = decomposition_from_nested(
        p4, make_nested({sep({0, 1}, {1, 2, 3}), sep({0, 1, 2}, {2, 3})}, 2), 1 << 20);
    int middle = inhabited_node(td, block_profile(sys, mask({1, 2})));
    CHECK(td.parts[middle] == mask({1, 2}));
}

TEST_CASE("validate_decomposition rejects tampered structures") {
    Graph p4 = path_graph(4);
    auto n = make_nested({sep({0, 1}, {1, 2, 3}), sep({0, 1, 2}, {2, 3})}, 2);
    auto td = decomposition_from_nested(p4, n, 1 << 20);

    auto broken = td;
    broken.parts[1] = mask({0});
    CHECK_THROWS_AS(validate_decomposition(p4, broken), InvariantError);

    auto missing_edge = td;
    missing_edge.edges.pop_back();
    CHECK_THROWS_AS(validate_decomposition(p4, missing_edge), InvariantError);

    auto wrong_sep = td;
    wrong_sep.edges[0].towards_v = inverse(wrong_sep.edges[0].towards_v);
    CHECK_THROWS_AS(validate_decomposition(p4, wrong_sep), InvariantError);
}

TEST_CASE("node counts equal pair count plus one across samples") {
    std::vector<std::pair<Graph, int>> cases;
    cases.emplace_back(path_graph(6), 2);
    cases.emplace_back(glued_k5s(), 2);
    cases.emplace_back(helpers::cycle_of_cliques(3, 5), 3);
    for (const auto& [g, k] : cases) {
        auto sys = enumerate_separations(g, k, 4096);
        bool all_nested = true;
        for (const Separation& s : sys.members)
            for (const Separation& t : sys.members)
                if (crosses(s, t)) all_nested = false;
        if (!all_nested) continue;
        auto td = decomposition_from_nested(g, make_nested(sys.members, k), 1 << 20);
        CHECK(td.node_count() == static_cast<int>(sys.pairs.size()) + 1);
        std::set<OrientedSeps> distinct(td.orientations.begin(), td.orientations.end());
        CHECK(distinct.size() == td.orientations.size());
    }
}

TEST_CASE("orientations of the full low-order system point at nodes or yield witnesses") {
    Graph p5 = path_graph(5);
    auto sys = enumerate_separations(p5, 2, 4096);
    REQUIRE(sys.pairs.size() == 3);
    auto td = decomposition_from_nested(p5, make_nested(sys.members, 2), 1 << 20);

    int consistent_count = 0, witness_count = 0;
    for (unsigned choice = 0; choice < 8; ++choice) {
        OrientedSeps o;
        for (std::size_t i = 0; i < sys.pairs.size(); ++i) {
            auto [a, b] = sys.pairs[i];
            o.push_back(sys.members[((choice >> i) & 1) ? b : a]);
        }
        o = sorted_unique(std::move(o));
        auto res = orients_toward_node(p5, td, o, 2);
        if (is_consistent(o)) {
            ++consistent_count;
            REQUIRE(res.node.has_value());
            CHECK(td.orientations[*res.node] == o);
            CHECK(!res.witness.has_value());
        } else {
            ++witness_count;
            CHECK(!res.node.has_value());
            REQUIRE(res.witness.has_value());
            const auto& w = *res.witness;
            CHECK(leq(inverse(w[2]), w[0]));
            CHECK(oriented_member(o, w[0]));
            CHECK(oriented_member(o, w[2]));
            CHECK(w[1] == inverse(w[0]));
            CHECK(w[3] == inverse(w[2]));
            REQUIRE(res.witness_td.has_value());
            CHECK(res.witness_td->node_count() >= 2);
        }
    }
    CHECK(consistent_count == 4);
    CHECK(witness_count == 4);

    auto empty_td = decomposition_from_nested(p5, make_nested({}, 2), 1 << 20);
    auto res = orients_toward_node(p5, empty_td, {}, 2);
    REQUIRE(res.node.has_value());
    CHECK(*res.node == 0);

    CHECK_THROWS_AS(orients_toward_node(p5, td, {}, 2), InputError);
    CHECK_THROWS_AS(orients_toward_node(p5, td, td.orientations[0], 1), InputError);
}
