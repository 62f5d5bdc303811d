#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "graph.hpp"

namespace helpers {

inline ctd::Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    ctd::Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline ctd::Graph path_graph(int n) {
    ctd::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline ctd::Graph cycle_graph(int n) {
    ctd::Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline ctd::Graph complete_graph(int n) {
    ctd::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline ctd::Graph petersen_graph() {
    return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

// Grows g by `extra` fresh vertices and turns base+fresh into a clique.
inline std::vector<int> attach_clique(ctd::Graph& g, const std::vector<int>& base, int extra) {
    std::vector<int> all = base;
    ctd::Graph grown(g.n() + extra);
    for (const auto& e : g.edges()) grown.add_edge(e.u, e.v);
    for (int i = 0; i < extra; ++i) all.push_back(g.n() + i);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) grown.add_edge(all[i], all[j]);
    g = grown;
    return all;
}

// Cycle c_0..c_{len-1} with one (size)-clique glued onto each cycle edge.
inline ctd::Graph cycle_of_cliques(int len, int size) {
    ctd::Graph g(len);
    for (int i = 0; i < len; ++i)
        attach_clique(g, {i, (i + 1) % len}, size - 2);
    return g;
}

// Central K5 {0..4} with cliques glued onto the overlapping separators
// {0,1,2}, {1,2,3}, and {1,2}: fresh vertices {5,6}, {7,8}, {9,10}.
inline ctd::Graph overlapping_attachments() {
    ctd::Graph g = complete_graph(5);
    attach_clique(g, {0, 1, 2}, 2);
    attach_clique(g, {1, 2, 3}, 2);
    attach_clique(g, {1, 2}, 2);
    return g;
}

// Chain of `count` 5-cliques, consecutive ones sharing three vertices.
inline ctd::Graph k5_chain(int count) {
    ctd::Graph g = complete_graph(5);
    std::vector<int> last = {0, 1, 2, 3, 4};
    for (int i = 1; i < count; ++i)
        last = attach_clique(g, {last[2], last[3], last[4]}, 2);
    return g;
}

inline ctd::Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    ctd::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace helpers
