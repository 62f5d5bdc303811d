#include "tree_decomposition.hpp"

#include <algorithm>
#include <sstream>

namespace ctd {

namespace {

std::string describe(const Separation& s) {
    std::ostringstream os;
    os << "(" << s.a << "," << s.b << ")";
    return os.str();
}

}  // namespace

NestedSystem make_nested(std::vector<Separation> seps, int k_bound) {
    NestedSystem n{make_system(std::move(seps), k_bound)};
    const auto& ms = n.sys.members;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (crosses(ms[i], ms[j]))
                throw InvariantError("system members cross: " + describe(ms[i]) +
                                     " vs " + describe(ms[j]));
    return n;
}

int TreeDecomposition::adhesion() const {
    int a = 0;
    for (const TreeEdge& e : edges) a = std::max(a, order(e.towards_v));
    return a;
}

TreeDecomposition decomposition_from_nested(const Graph& g, const NestedSystem& n,
                                            std::uint64_t max_nodes) {
    TreeDecomposition td;
    td.nested = n;
    td.orientations = consistent_orientations(n.sys, max_nodes, false);
    for (const OrientedSeps& o : td.orientations) {
        VertexSet part = g.vertices();
        for (const Separation& s : o) part &= s.b;
        td.parts.push_back(part);
    }
    int nodes = td.node_count();
    for (int u = 0; u < nodes; ++u)
        for (int v = u + 1; v < nodes; ++v) {
            const OrientedSeps& ou = td.orientations[u];
            const OrientedSeps& ov = td.orientations[v];
            // Members differing between two sorted equal-size orientations:
            // each flipped pair contributes one member unique to each side.
            OrientedSeps only_v;
            std::set_difference(ov.begin(), ov.end(), ou.begin(), ou.end(),
                                std::back_inserter(only_v));
            if (only_v.size() == 1) td.edges.push_back({u, v, only_v[0]});
        }
    validate_decomposition(g, td);
    return td;
}

void validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    int nodes = td.node_count();
    const auto& sys = td.nested.sys;
    if (nodes != static_cast<int>(sys.pairs.size()) + 1)
        throw InvariantError("node count " + std::to_string(nodes) +
                             " differs from pair count + 1");
    if (td.edges.size() + 1 != static_cast<std::size_t>(nodes))
        throw InvariantError("edge count does not match a tree");
    for (int t = 0; t < nodes; ++t)
        if (!orients(sys, td.orientations[t]) || inconsistency_witness(td.orientations[t]))
            throw InvariantError("node orientation invalid");
    for (int t = 1; t < nodes; ++t)
        if (td.orientations[t - 1] == td.orientations[t])
            throw InvariantError("duplicate node orientations");

    // Tree connectivity.
    std::vector<std::vector<int>> adj(nodes);
    for (const TreeEdge& e : td.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(nodes, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int w : adj[t])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw InvariantError("decomposition tree is disconnected");

    // Each pair of the system is represented by exactly one tree edge, and
    // the orientation member stored on the edge is the one chosen by v.
    std::vector<int> pair_uses(sys.pairs.size(), 0);
    for (const TreeEdge& e : td.edges) {
        if (!oriented_member(td.orientations[e.v], e.towards_v) ||
            oriented_member(td.orientations[e.u], e.towards_v))
            throw InvariantError("edge separation not oriented by its endpoints");
        int idx = sys.index_of(e.towards_v);
        if (idx < 0) throw InvariantError("edge separation outside the system");
        int pair_idx = -1;
        for (std::size_t p = 0; p < sys.pairs.size(); ++p)
            if (sys.pairs[p].first == idx || sys.pairs[p].second == idx)
                pair_idx = static_cast<int>(p);
        if (pair_idx < 0) throw InvariantError("edge separation belongs to no pair");
        pair_uses[pair_idx] += 1;
    }
    for (int uses : pair_uses)
        if (uses != 1) throw InvariantError("system pair not represented exactly once");

    // Vertex and edge cover.
    VertexSet covered = 0;
    for (VertexSet part : td.parts) covered |= part;
    if (covered != g.vertices()) throw InvariantError("parts do not cover all vertices");
    for (const Edge& e : g.edges()) {
        VertexSet both = bit(e.u) | bit(e.v);
        bool inside = false;
        for (VertexSet part : td.parts)
            if ((both & ~part) == 0) inside = true;
        if (!inside)
            throw InvariantError("edge " + std::to_string(e.u) + "-" +
                                 std::to_string(e.v) + " lies in no part");
    }

    // Subtree condition per vertex.
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> holders;
        for (int t = 0; t < nodes; ++t)
            if (contains(td.parts[t], v)) holders.push_back(t);
        if (holders.empty()) continue;
        std::vector<bool> in_sub(nodes, false), vis(nodes, false);
        for (int t : holders) in_sub[t] = true;
        std::vector<int> st{holders[0]};
        vis[holders[0]] = true;
        int reached = 1;
        while (!st.empty()) {
            int t = st.back();
            st.pop_back();
            for (int w : adj[t])
                if (in_sub[w] && !vis[w]) {
                    vis[w] = true;
                    ++reached;
                    st.push_back(w);
                }
        }
        if (reached != static_cast<int>(holders.size()))
            throw InvariantError("vertex " + std::to_string(v) +
                                 " does not span a subtree");
    }

    // Induced-separation round trip per tree edge.
    for (const TreeEdge& e : td.edges) {
        std::vector<bool> side_v(nodes, false);
        std::vector<int> st{e.v};
        side_v[e.v] = true;
        while (!st.empty()) {
            int t = st.back();
            st.pop_back();
            for (int w : adj[t]) {
                if (t == e.u && w == e.v) continue;
                if (t == e.v && w == e.u) continue;
                if (!side_v[w]) {
                    side_v[w] = true;
                    st.push_back(w);
                }
            }
        }
        VertexSet union_b = 0, union_a = 0;
        for (int t = 0; t < nodes; ++t)
            (side_v[t] ? union_b : union_a) |= td.parts[t];
        if (Separation{union_a, union_b} != e.towards_v)
            throw InvariantError("edge does not re-induce its separation: " +
                                 describe({union_a, union_b}) + " vs " +
                                 describe(e.towards_v));
    }
}

int inhabited_node(const TreeDecomposition& td, const OrientedSeps& p) {
    OrientedSeps o;
    for (const Separation& s : p)
        if (td.nested.sys.contains(s)) o.push_back(s);
    if (!orients(td.nested.sys, o))
        throw InputError("profile does not orient the nested system");
    auto it = std::lower_bound(td.orientations.begin(), td.orientations.end(), o);
    if (it == td.orientations.end() || *it != o)
        throw InputError("profile restriction is not a node orientation");
    return static_cast<int>(it - td.orientations.begin());
}

std::vector<PartLabel> classify_parts(const TreeDecomposition& td,
                                      const std::vector<OrientedSeps>& profiles) {
    std::vector<PartLabel> labels(td.node_count());
    for (const OrientedSeps& p : profiles) labels[inhabited_node(td, p)].essential = true;
    for (int t = 0; t < td.node_count(); ++t)
        for (const Separation& s : td.nested.sys.members)
            if ((td.parts[t] & ~separator(s)) == 0) labels[t].hub = true;
    return labels;
}

OrientTowards orients_toward_node(const Graph& g, const TreeDecomposition& td,
                                  const OrientedSeps& o, int k) {
    if (td.adhesion() >= k) throw InputError("decomposition adhesion reaches the order bound");
    OrientTowards result;
    OrientedSeps on_n;
    for (const Separation& s : o)
        if (td.nested.sys.contains(s)) on_n.push_back(s);
    if (orients(td.nested.sys, on_n) && is_consistent(on_n)) {
        auto it = std::lower_bound(td.orientations.begin(), td.orientations.end(), on_n);
        if (it == td.orientations.end() || *it != on_n)
            throw InvariantError("consistent restriction matches no node");
        result.node = static_cast<int>(it - td.orientations.begin());
    } else if (!orients(td.nested.sys, on_n)) {
        throw InputError("orientation does not cover the nested system");
    }

    if (auto w = inconsistency_witness(o)) {
        auto [s, t] = *w;
        result.witness = {s, inverse(s), t, inverse(t)};
        NestedSystem wn = make_nested({s, t}, k);
        TreeDecomposition wtd = decomposition_from_nested(g, wn, 1 << 16);
        OrientedSeps restricted;
        for (const Separation& m : o)
            if (wn.sys.contains(m)) restricted.push_back(m);
        restricted = sorted_unique(std::move(restricted));
        for (const OrientedSeps& node_o : wtd.orientations)
            if (node_o == restricted)
                throw InvariantError("witness decomposition unexpectedly oriented");
        result.witness_td = std::move(wtd);
    }
    return result;
}

}  // namespace ctd
