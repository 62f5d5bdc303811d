#include "graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace ctd {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > 64) throw InputError("vertex count out of range: " + std::to_string(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return;
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    Edge e{std::min(u, v), std::max(u, v)};
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

bool Graph::has_edge(int u, int v) const {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && contains(adj_[u], v);
}

VertexSet Graph::neighbors_of_set(VertexSet s) const {
    VertexSet out = 0;
    for (VertexSet rest = s; rest;) {
        int v = lowest_bit(rest);
        rest &= rest - 1;
        out |= adj_[v];
    }
    return out & ~s;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
    std::vector<VertexSet> comps;
    VertexSet seen = 0;
    for (VertexSet rest = within; rest;) {
        int start = lowest_bit(rest & ~seen);
        VertexSet comp = bit(start);
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f;) {
                int v = lowest_bit(f);
                f &= f - 1;
                next |= adj_[v] & within;
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        seen |= comp;
        rest &= ~seen;
    }
    return comps;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    return components(vertices()).size() == 1;
}

namespace {

// Unit-capacity max flow on the split-vertex graph: vertex w (w != s, t)
// becomes w_in -> w_out with capacity 1; edges get capacity 1 each way.
// Classic BFS augmentation; sizes here are tiny (n <= 16 in practice).
struct FlowNet {
    int n;
    std::vector<std::vector<int>> head;     // adjacency: edge indices
    std::vector<int> to;
    std::vector<int> cap;

    explicit FlowNet(int nodes) : n(nodes), head(nodes) {}

    void add(int a, int b, int c) {
        head[a].push_back(static_cast<int>(to.size()));
        to.push_back(b);
        cap.push_back(c);
        head[b].push_back(static_cast<int>(to.size()));
        to.push_back(a);
        cap.push_back(0);
    }

    int max_flow(int s, int t, int stop_at) {
        int flow = 0;
        while (flow < stop_at) {
            std::vector<int> prev_edge(n, -1);
            std::queue<int> q;
            q.push(s);
            prev_edge[s] = -2;
            while (!q.empty() && prev_edge[t] == -1) {
                int v = q.front();
                q.pop();
                for (int e : head[v]) {
                    if (cap[e] > 0 && prev_edge[to[e]] == -1) {
                        prev_edge[to[e]] = e;
                        q.push(to[e]);
                    }
                }
            }
            if (prev_edge[t] == -1) break;
            for (int v = t; v != s;) {
                int e = prev_edge[v];
                cap[e] -= 1;
                cap[e ^ 1] += 1;
                v = to[e ^ 1];
            }
            ++flow;
        }
        return flow;
    }
};

constexpr int kInfFlow = 1 << 20;

int vertex_flow(const Graph& g, int u, int v, bool skip_edge_uv) {
    int n = g.n();
    auto in_node = [&](int w) { return 2 * w; };
    auto out_node = [&](int w) { return 2 * w + 1; };
    FlowNet net(2 * n);
    for (int w = 0; w < n; ++w)
        net.add(in_node(w), out_node(w), (w == u || w == v) ? kInfFlow : 1);
    for (const Edge& e : g.edges()) {
        if (skip_edge_uv && ((e.u == u && e.v == v) || (e.u == v && e.v == u))) continue;
        net.add(out_node(e.u), in_node(e.v), 1);
        net.add(out_node(e.v), in_node(e.u), 1);
    }
    return net.max_flow(out_node(u), in_node(v), g.n() + 1);
}

}  // namespace

std::optional<int> Graph::local_connectivity(int u, int v) const {
    if (u == v) return std::nullopt;
    if (has_edge(u, v)) return std::nullopt;
    return vertex_flow(*this, u, v, false);
}

int Graph::independent_paths_excluding_edge(int u, int v) const {
    return vertex_flow(*this, u, v, true);
}

bool Graph::is_l_connected(int l) const {
    if (n_ <= l) return false;
    if (l <= 0) return true;
    // Some separator of size < l exists iff some non-adjacent pair has local
    // connectivity < l (Menger); if every pair is adjacent, G is complete.
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            auto kappa = local_connectivity(u, v);
            if (kappa && *kappa < l) return false;
        }
    return true;
}

namespace {

// 1-WL color refinement; returns stable colors (canonical small ints).
std::vector<int> wl_colors(const Graph& g) {
    int n = g.n();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> remap;
        std::vector<std::pair<int, std::vector<int>>> key(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (VertexSet rest = g.neighbors(v); rest;) {
                int w = lowest_bit(rest);
                rest &= rest - 1;
                nb.push_back(color[w]);
            }
            std::sort(nb.begin(), nb.end());
            key[v] = {color[v], std::move(nb)};
        }
        for (int v = 0; v < n; ++v) remap.emplace(key[v], 0);
        int next = 0;
        for (auto& [k, id] : remap) id = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = remap[key[v]];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

// Backtracking permutation search shared by automorphisms / isomorphism.
// match[a-vertex] = b-vertex or -1. visit returns false to stop the search.
template <typename Visit>
bool search_maps(const Graph& a, const Graph& b, std::vector<int>& match,
                 std::vector<bool>& used, int next, const std::vector<int>& ca,
                 const std::vector<int>& cb, Visit&& visit) {
    int n = a.n();
    if (next == n) return visit(match);
    for (int w = 0; w < n; ++w) {
        if (used[w] || ca[next] != cb[w]) continue;
        bool ok = true;
        for (int p = 0; p < next && ok; ++p)
            if (a.has_edge(next, p) != b.has_edge(match[p], w)) ok = false;
        if (!ok) continue;
        match[next] = w;
        used[w] = true;
        if (!search_maps(a, b, match, used, next + 1, ca, cb, visit)) return false;
        used[w] = false;
        match[next] = -1;
    }
    return true;
}

}  // namespace

std::vector<std::vector<int>> Graph::automorphisms(std::uint64_t cap) const {
    std::vector<std::vector<int>> out;
    std::vector<int> match(n_, -1);
    std::vector<bool> used(n_, false);
    auto colors = wl_colors(*this);
    search_maps(*this, *this, match, used, 0, colors, colors, [&](const std::vector<int>& m) {
        if (out.size() >= cap) throw LimitError("automorphism count exceeds cap");
        out.push_back(m);
        return true;
    });
    return out;
}

bool Graph::isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    auto ca = wl_colors(a);
    auto cb = wl_colors(b);
    auto sa = ca;
    auto sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> match(a.n(), -1);
    std::vector<bool> used(a.n(), false);
    bool found = false;
    search_maps(a, b, match, used, 0, ca, cb, [&](const std::vector<int>&) {
        found = true;
        return false;  // stop at first
    });
    return found;
}

std::string Graph::wl_signature() const {
    auto colors = wl_colors(*this);
    std::sort(colors.begin(), colors.end());
    std::ostringstream os;
    os << n_ << ':' << m();
    for (int c : colors) os << ',' << c;
    return os.str();
}

Graph parse_graph(const std::string& text, bool strict) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!g) {
            if (first != "n") throw InputError("expected 'n <count>' header", line_no);
            long long n = -1;
            if (!(ls >> n) || n < 0 || n > 64)
                throw InputError("invalid vertex count", line_no);
            std::string extra;
            if (ls >> extra) throw InputError("trailing tokens after header", line_no);
            g.emplace(static_cast<int>(n));
            continue;
        }
        long long u, v;
        std::istringstream es(line);
        if (!(es >> u >> v)) throw InputError("expected edge 'u v'", line_no);
        std::string extra;
        if (es >> extra) throw InputError("trailing tokens after edge", line_no);
        if (u < 0 || v < 0 || u >= g->n() || v >= g->n())
            throw InputError("edge endpoint out of range", line_no);
        if (u == v) throw InputError("self-loop not allowed", line_no);
        if (strict && g->has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw InputError("duplicate edge", line_no);
        g->add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!g) throw InputError("empty input: missing 'n <count>' header", line_no);
    return *g;
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.n() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

}  // namespace ctd
