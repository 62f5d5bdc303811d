#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ctd {

// Vertex sets are bitmasks over at most 64 vertices; the library enforces a
// much smaller working limit (Limits::max_n) at the API boundary.
using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline int lowest_bit(VertexSet s) { return __builtin_ctzll(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }
inline VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Image of a vertex set under a vertex permutation.
inline VertexSet map_vertices(const std::vector<int>& perm, VertexSet s) {
    VertexSet out = 0;
    for (VertexSet rest = s; rest != 0; rest &= rest - 1)
        out |= bit(perm[lowest_bit(rest)]);
    return out;
}

struct Edge {
    int u, v;  // u < v
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet vertices() const { return full_set(n_); }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet neighbors_of_set(VertexSet s) const;
    int degree(int v) const { return popcount(adj_[v]); }

    // Connected components of the subgraph induced on `within`.
    std::vector<VertexSet> components(VertexSet within) const;
    bool is_connected() const;

    // Minimum number of vertices (excluding u, v themselves) whose removal
    // separates u from v; nullopt when u == v or u,v are adjacent and no
    // vertex cut can separate them (kappa_G(u,v) in the usual sense is then
    // taken as infinite).
    std::optional<int> local_connectivity(int u, int v) const;

    // Maximum number of internally disjoint u-v paths that avoid the edge uv.
    int independent_paths_excluding_edge(int u, int v) const;

    // |V| > l and no separator of fewer than l vertices disconnects G.
    bool is_l_connected(int l) const;

    // All automorphisms as permutation vectors; throws LimitError past `cap`.
    std::vector<std::vector<int>> automorphisms(std::uint64_t cap) const;

    static bool isomorphic(const Graph& a, const Graph& b);

    // Degree-refinement signature (1-WL); equal for isomorphic graphs.
    std::string wl_signature() const;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<Edge> edges_;  // kept sorted
};

// Text format: first non-comment line "n <count>", then one "u v" pair per
// line; '#' starts a comment. strict=true rejects duplicate edges.
Graph parse_graph(const std::string& text, bool strict);

std::string graph_to_text(const Graph& g);

}  // namespace ctd
