#include "refinement.hpp"

#include <algorithm>
#include <set>

namespace ctd {

namespace {

// Members of sys whose second side contains the block.
std::vector<Separation> towards_block(VertexSet block,
                                      const SeparationSystem& sys) {
    std::vector<Separation> out;
    for (const Separation& m : sys.members)
        if ((block & ~m.b) == 0) out.push_back(m);
    return out;
}

std::vector<Separation> maximal_members(const std::vector<Separation>& seps) {
    std::vector<Separation> out;
    for (const Separation& m : seps) {
        bool dominated = false;
        for (const Separation& d : seps)
            if (!(d == m) && leq(m, d)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(m);
    }
    return out;
}

}  // namespace

WellSeparatedCheck well_separated_check(VertexSet block,
                                        const SeparationSystem& sys) {
    WellSeparatedCheck out;
    out.maximal = maximal_members(towards_block(block, sys));
    out.well_separated = true;
    for (std::size_t i = 0; i < out.maximal.size() && out.well_separated; ++i)
        for (std::size_t j = i + 1; j < out.maximal.size(); ++j)
            if (crosses(out.maximal[i], out.maximal[j])) {
                out.well_separated = false;
                out.witness = {out.maximal[i], out.maximal[j]};
                break;
            }
    return out;
}

BlockFan block_fan(const Graph& g, VertexSet block) {
    BlockFan fan;
    fan.block = block;
    for (VertexSet c : g.components(g.vertices() & ~block)) {
        Separation s{c | g.neighbors_of_set(c), g.vertices() & ~c};
        if (is_tight(g, s)) fan.members.push_back(s);
    }
    std::sort(fan.members.begin(), fan.members.end());
    for (std::size_t i = 0; i < fan.members.size(); ++i)
        for (std::size_t j = i + 1; j < fan.members.size(); ++j)
            if (!nested(fan.members[i], fan.members[j]))
                throw InvariantError("fan members cross: " +
                                     sep_text(fan.members[i]) + " and " +
                                     sep_text(fan.members[j]));
    return fan;
}

bool fan_orders_below(const Graph& g, int k, VertexSet block) {
    for (const Separation& s : block_fan(g, block).members)
        if (order(s) >= k) return false;
    return true;
}

int min_distinguisher_order(const Graph& g, int k, VertexSet x1, VertexSet x2,
                            const Limits& lim) {
    SeparationSystem sys = enumerate_separations(g, k, lim.max_system_pairs);
    int best = -1;
    for (const Separation& m : sys.members)
        if ((x1 & ~m.a) == 0 && (x2 & ~m.b) == 0 &&
            (best < 0 || order(m) < best))
            best = order(m);
    if (best < 0)
        throw InvariantError("no separation distinguishes " + set_text(x1) +
                             " from " + set_text(x2));
    return best;
}

RefineReport refine_decomposition(const Graph& g, int k,
                                  const SeparationSystem& s, StrategyKind kind,
                                  const Limits& lim) {
    SeparationSystem full = enumerate_separations(g, k, lim.max_system_pairs);
    std::vector<VertexSet> blocks = k_blocks(g, k);
    std::vector<OrientedSeps> profiles;
    profiles.reserve(blocks.size());
    for (VertexSet x : blocks) profiles.push_back(block_profile(full, x));

    StrategyRun run = run_iterated(g, k, kind, profiles, lim);
    for (const Separation& m : run.chosen)
        if (!s.contains(m))
            throw InfeasibleError("membership",
                                  "chosen separation " + sep_text(m) +
                                      " lies outside the given system");

    RefineReport rep;
    rep.base = run.chosen;
    std::vector<Separation> refined = run.chosen;
    for (VertexSet x : blocks) {
        WellSeparatedCheck wsc = well_separated_check(x, s);
        BlockVerdict v;
        v.block = x;
        v.well_separated = wsc.well_separated;
        v.ws_witness = wsc.witness;
        if (wsc.well_separated)
            for (const Separation& m : wsc.maximal) {
                refined.push_back(m);
                refined.push_back(inverse(m));
            }
        rep.blocks.push_back(v);
    }
    refined = sorted_unique(std::move(refined));
    for (std::size_t i = 0; i < refined.size(); ++i)
        for (std::size_t j = i + 1; j < refined.size(); ++j)
            if (crosses(refined[i], refined[j]))
                throw InfeasibleError("crossing",
                                      "refined system: " + sep_text(refined[i]) +
                                          " crosses " + sep_text(refined[j]));
    rep.refined = refined;
    rep.td = decomposition_from_nested(g, make_nested(refined, k),
                                       lim.max_orientations);

    std::set<int> seen;
    rep.distinct_parts = true;
    rep.ws_parts_exact = true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        BlockVerdict& v = rep.blocks[i];
        v.node = inhabited_node(rep.td, profiles[i]);
        v.part_equals_block = rep.td.parts[v.node] == v.block;
        if (!seen.insert(v.node).second) rep.distinct_parts = false;
        if (v.well_separated && !v.part_equals_block) rep.ws_parts_exact = false;
    }

    rep.leaves_applicable = !blocks.empty();
    for (const Separation& m : s.members) {
        if (!rep.leaves_applicable) break;
        bool held = false, inverted = false;
        for (const OrientedSeps& p : profiles)
            (oriented_member(p, m) ? held : inverted) = true;
        if (!(held && inverted)) rep.leaves_applicable = false;
    }

    std::vector<int> degree(rep.td.node_count(), 0);
    for (const TreeEdge& e : rep.td.edges) {
        ++degree[e.u];
        ++degree[e.v];
    }
    rep.leaves_are_blocks = true;
    for (int t = 0; t < rep.td.node_count(); ++t) {
        if (degree[t] > 1) continue;
        bool is_block = false;
        for (VertexSet x : blocks)
            if (rep.td.parts[t] == x) {
                is_block = true;
                break;
            }
        if (!is_block) rep.leaves_are_blocks = false;
    }
    return rep;
}

GoodnessReport goodness(const Graph& g, int k, const TreeDecomposition& td,
                        const Limits& lim) {
    GoodnessReport rep;
    const std::vector<Separation>& n = td.nested.sys.members;

    rep.canonical = true;
    for (const std::vector<int>& perm : g.automorphisms(lim.max_automorphisms))
        for (const Separation& m : n) {
            Separation im = map_separation(perm, m);
            if (!td.nested.sys.contains(im)) {
                rep.canonical = false;
                rep.reasons.push_back("an automorphism maps " + sep_text(m) +
                                      " to " + sep_text(im) +
                                      ", outside the system");
                break;
            }
        }

    rep.adhesion_ok = td.adhesion() < k;
    if (!rep.adhesion_ok)
        rep.reasons.push_back("adhesion " + std::to_string(td.adhesion()) +
                              " reaches " + std::to_string(k));

    rep.efficient = true;
    std::vector<VertexSet> blocks = k_blocks(g, k);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            int want = min_distinguisher_order(g, k, blocks[i], blocks[j], lim);
            bool found = false;
            for (const Separation& m : n)
                if ((blocks[i] & ~m.a) == 0 && (blocks[j] & ~m.b) == 0 &&
                    order(m) == want) {
                    found = true;
                    break;
                }
            if (!found) {
                rep.efficient = false;
                rep.reasons.push_back("blocks " + set_text(blocks[i]) +
                                      " and " + set_text(blocks[j]) +
                                      " not separated at order " +
                                      std::to_string(want));
            }
        }
    return rep;
}

HypothesisReport part_exactness_hypotheses(const Graph& g, int k) {
    if (k < 2) throw InputError("k must be at least 2");
    HypothesisReport rep;
    rep.connected_enough = g.is_l_connected(k - 1);
    std::vector<VertexSet> blocks = k_blocks(g, k);
    rep.holds = rep.connected_enough;
    for (const Edge& e : g.edges()) {
        EdgeVerdict v;
        v.e = e;
        v.common_neighbors =
            popcount(g.neighbors(e.u) & g.neighbors(e.v)) >= k - 3;
        v.many_paths =
            g.independent_paths_excluding_edge(e.u, e.v) >= (3 * (k - 2)) / 2;
        for (VertexSet x : blocks)
            if (contains(x, e.u) && contains(x, e.v)) {
                v.shared_block = true;
                break;
            }
        if (!v.ok()) rep.holds = false;
        rep.edges.push_back(v);
    }
    return rep;
}

}  // namespace ctd
