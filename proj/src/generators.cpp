#include "generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "refinement.hpp"

namespace ctd {

namespace {

void make_clique(Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
}

VertexSet mask_of(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= bit(v);
    return s;
}

void require_blocks(const Graph& g, int k, std::vector<VertexSet> expected,
                    const char* what) {
    std::sort(expected.begin(), expected.end());
    if (k_blocks(g, k) != expected)
        throw InvariantError(std::string(what) +
                             ": blocks differ from the construction");
}

}  // namespace

Graph gen_cycle_cliques(int count, int size) {
    if (count < 3) throw InputError("cycle needs at least 3 cliques");
    if (size < 4) throw InputError("clique size must be at least 4");
    Graph g(count + count * (size - 2));
    std::vector<VertexSet> expected;
    for (int i = 0; i < count; ++i) {
        std::vector<int> clique = {i, (i + 1) % count};
        int base = count + i * (size - 2);
        for (int j = 0; j < size - 2; ++j) clique.push_back(base + j);
        make_clique(g, clique);
        expected.push_back(mask_of(clique));
    }
    if (count == 3) expected.push_back(full_set(3));
    require_blocks(g, 3, std::move(expected), "cycle of cliques");
    return g;
}

Graph gen_path_cliques(int count, int size) {
    if (count < 2) throw InputError("path needs at least 2 cliques");
    if (size < 4) throw InputError("clique size must be at least 4");
    Graph g(count * size + (count - 1));
    std::vector<VertexSet> expected;
    for (int i = 0; i < count; ++i) {
        int base = i * (size + 1);
        std::vector<int> clique;
        for (int j = 0; j < size; ++j) clique.push_back(base + j);
        make_clique(g, clique);
        expected.push_back(mask_of(clique));
        if (i + 1 < count) {
            g.add_edge(base + size - 1, base + size);
            g.add_edge(base + size, base + size + 1);
        }
    }
    require_blocks(g, 3, std::move(expected), "path of cliques");
    return g;
}

OverlappingAttachments gen_overlapping_attachments(int k, int core_size,
                                                   int attach) {
    if (k < 3) throw InputError("order must be at least 3");
    if (core_size < k + 1) throw InputError("core must exceed the order");
    if (attach < 3)
        throw InputError("attachments need at least 3 fresh vertices");
    int n = core_size + 3 * attach;
    if (n > 24) throw InputError("construction too large to verify");

    Graph g(n);
    std::vector<int> core;
    for (int v = 0; v < core_size; ++v) core.push_back(v);
    make_clique(g, core);
    auto attach_at = [&](int first, int sep_size, int base) {
        std::vector<int> clique;
        for (int v = first; v < first + sep_size; ++v) clique.push_back(v);
        for (int j = 0; j < attach; ++j) clique.push_back(base + j);
        make_clique(g, clique);
        return mask_of(clique);
    };
    OverlappingAttachments out;
    out.k = k;
    out.core = full_set(core_size);
    out.s1 = full_set(k - 1);
    out.s2 = full_set(k) & ~bit(0);
    out.blocks[0] = out.core;
    out.blocks[1] = attach_at(0, k - 1, core_size);
    out.blocks[2] = attach_at(1, k - 1, core_size + attach);
    out.blocks[3] = attach_at(1, k - 2, core_size + 2 * attach);
    out.g = std::move(g);

    require_blocks(out.g, k, {out.blocks.begin(), out.blocks.end()},
                   "overlapping attachments");
    Limits lim;
    lim.max_n = 24;
    auto sys = tight_subsystem(
        out.g, enumerate_separations(out.g, k, lim.max_system_pairs));
    if (well_separated_check(out.core, sys).well_separated)
        throw InvariantError(
            "overlapping attachments: core unexpectedly well separated");
    RefineReport r = refine_decomposition(out.g, k, sys, StrategyKind::Ext, lim);
    int centre = -1;
    for (int t = 0; t < r.td.node_count(); ++t)
        if (r.td.parts[t] == out.core) centre = t;
    if (r.td.node_count() != 4 || centre < 0)
        throw InvariantError(
            "overlapping attachments: decomposition is not a 4-node star");
    for (const TreeEdge& e : r.td.edges)
        if (e.u != centre && e.v != centre)
            throw InvariantError(
                "overlapping attachments: some edge avoids the core part");
    return out;
}

Graph gen_glued_k5(int copies) {
    if (copies < 3) throw InputError("need at least 3 glued copies");
    Graph g(1 + 4 * copies);
    std::vector<VertexSet> expected;
    for (int i = 0; i < copies; ++i) {
        std::vector<int> clique = {0};
        for (int j = 0; j < 4; ++j) clique.push_back(1 + 4 * i + j);
        make_clique(g, clique);
        expected.push_back(mask_of(clique));
    }
    require_blocks(g, 2, std::move(expected), "glued complete graphs");
    return g;
}

namespace {

Graph pinned_graph(int count, VertexSet sx, VertexSet sy) {
    Graph g(5 + 2 * count);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    for (int i = 0; i < count; ++i) {
        int x = 5 + 2 * i, y = x + 1;
        g.add_edge(x, y);
        for (VertexSet r = sx; r; r &= r - 1) g.add_edge(lowest_bit(r), x);
        for (VertexSet r = sy; r; r &= r - 1) g.add_edge(lowest_bit(r), y);
    }
    return g;
}

// Members carrying v strictly on the first side and the block inside the
// second.
std::vector<Separation> peeling_members(const SeparationSystem& sys, int v,
                                        VertexSet block) {
    std::vector<Separation> out;
    for (const Separation& m : sys.members)
        if (contains(m.a & ~m.b, v) && (block & ~m.b) == 0) out.push_back(m);
    return out;
}

bool pinned_pairs_verify(const Graph& g, int count,
                         std::vector<PinnedPair>* report) {
    if (!g.is_l_connected(4)) return false;
    if (k_blocks(g, 5) != std::vector<VertexSet>{full_set(5)}) return false;
    auto sys = enumerate_separations(g, 5, 4096);
    for (int i = 0; i < count; ++i) {
        PinnedPair pr;
        pr.x = 5 + 2 * i;
        pr.y = pr.x + 1;
        auto xs = peeling_members(sys, pr.x, full_set(5));
        auto ys = peeling_members(sys, pr.y, full_set(5));
        pr.x_separations = xs.size();
        pr.y_separations = ys.size();
        pr.all_cross = !xs.empty() && !ys.empty();
        for (const Separation& s : xs)
            for (const Separation& t : ys)
                if (nested(s, t)) pr.all_cross = false;
        if (!pr.all_cross) return false;
        if (report) report->push_back(pr);
    }
    return true;
}

}  // namespace

PinnedPairs gen_pinned_pairs(int count) {
    if (count < 0) throw InputError("pair count must be nonnegative");
    if (5 + 2 * count > 24) throw InputError("too many pairs to verify");
    PinnedPairs out;
    out.block = full_set(5);
    if (count > 0) {
        static const std::pair<VertexSet, VertexSet> pattern = [] {
            for (int sx : {4, 3})
                for (int sy : {4, 3})
                    for (VertexSet mx = 0; mx < 32; ++mx) {
                        if (popcount(mx) != sx) continue;
                        for (VertexSet my = 0; my < 32; ++my) {
                            if (popcount(my) != sy) continue;
                            if (pinned_pairs_verify(pinned_graph(1, mx, my), 1,
                                                    nullptr))
                                return std::pair<VertexSet, VertexSet>{mx, my};
                        }
                    }
            throw InvariantError(
                "pinned pair search exhausted without a verified pattern");
        }();
        out.attach_x = pattern.first;
        out.attach_y = pattern.second;
    }
    out.g = pinned_graph(count, out.attach_x, out.attach_y);
    if (!pinned_pairs_verify(out.g, count, &out.pairs))
        throw InvariantError("pinned pair construction failed verification at " +
                             std::to_string(count) + " pairs");
    return out;
}

Graph gen_random(int n, double density, std::uint64_t seed) {
    if (n < 0 || n > 64) throw InputError("vertex count out of range");
    if (!(density >= 0.0 && density <= 1.0))
        throw InputError("density must lie in [0, 1]");
    Graph g(n);
    std::mt19937_64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() >> 11) * 0x1.0p-53 < density) g.add_edge(u, v);
    return g;
}

}  // namespace ctd
