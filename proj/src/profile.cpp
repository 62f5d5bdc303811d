#include "profile.hpp"

#include <algorithm>

namespace ctd {

OrientedSeps sorted_unique(OrientedSeps seps) {
    std::sort(seps.begin(), seps.end());
    seps.erase(std::unique(seps.begin(), seps.end()), seps.end());
    return seps;
}

bool oriented_member(const OrientedSeps& o, const Separation& s) {
    return std::binary_search(o.begin(), o.end(), s);
}

bool orients(const SeparationSystem& sys, const OrientedSeps& o) {
    if (o.size() != sys.pairs.size()) return false;
    for (const Separation& s : o)
        if (!sys.contains(s)) return false;
    for (auto [i, j] : sys.pairs)
        if (oriented_member(o, sys.members[i]) == oriented_member(o, sys.members[j]))
            return false;
    return true;
}

namespace {

void bron_kerbosch(VertexSet r, VertexSet p, VertexSet x,
                   const std::vector<VertexSet>& adj, std::vector<VertexSet>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    while (p) {
        int v = lowest_bit(p);
        bron_kerbosch(r | bit(v), p & adj[v], x & adj[v], adj, out);
        p &= p - 1;
        x |= bit(v);
    }
}

}  // namespace

std::vector<VertexSet> k_blocks(const Graph& g, int k) {
    int n = g.n();
    std::vector<VertexSet> insep(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto kappa = g.local_connectivity(u, v);
            if (!kappa || *kappa >= k) {
                insep[u] |= bit(v);
                insep[v] |= bit(u);
            }
        }
    std::vector<VertexSet> cliques;
    bron_kerbosch(0, full_set(n), 0, insep, cliques);
    std::vector<VertexSet> blocks;
    for (VertexSet c : cliques)
        if (popcount(c) >= k) blocks.push_back(c);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

OrientedSeps block_profile(const SeparationSystem& sys, VertexSet block) {
    OrientedSeps out;
    for (auto [i, j] : sys.pairs) {
        const Separation& s = sys.members[i];
        bool in_b = (block & ~s.b) == 0;
        bool in_a = (block & ~s.a) == 0;
        if (in_b == in_a)
            throw InvariantError("block fits neither or both sides of a system pair");
        out.push_back(in_b ? s : sys.members[j]);
    }
    return sorted_unique(std::move(out));
}

std::optional<std::pair<Separation, Separation>> inconsistency_witness(const OrientedSeps& o) {
    for (const Separation& s : o)
        for (const Separation& t : o)
            if (leq(inverse(t), s)) return std::make_pair(s, t);
    return std::nullopt;
}

std::optional<std::array<Separation, 3>> profile_violation(const OrientedSeps& o) {
    for (const Separation& s : o)
        for (const Separation& t : o) {
            Separation corner{s.b & t.b, s.a | t.a};
            if (oriented_member(o, corner)) return std::array<Separation, 3>{s, t, corner};
        }
    return std::nullopt;
}

std::optional<std::pair<Separation, Separation>> p2_violation(const OrientedSeps& p, int k) {
    for (const Separation& s : p)
        for (const Separation& t : p) {
            Separation corner{s.a | t.a, s.b & t.b};
            if (!is_proper(corner) || order(corner) >= k) continue;
            if (!oriented_member(p, corner)) return std::make_pair(s, t);
        }
    return std::nullopt;
}

namespace {

struct OrientationSearch {
    const SeparationSystem& sys;
    bool require_profile;
    std::uint64_t max_nodes;
    const std::function<bool(const OrientedSeps&)>& emit;
    std::uint64_t nodes = 0;
    std::vector<Separation> chosen;
    bool stopped = false;

    OrientationSearch(const SeparationSystem& s, std::uint64_t cap, bool profile,
                      const std::function<bool(const OrientedSeps&)>& fn)
        : sys(s), require_profile(profile), max_nodes(cap), emit(fn) {}

    bool in_chosen(const Separation& s) const {
        return std::find(chosen.begin(), chosen.end(), s) != chosen.end();
    }

    // Violations of consistency and of the profile axiom always involve only
    // members already present, so checking each new member against the
    // current set makes the pruning exact. The axiom corner formula is
    // symmetric in its two members, so one orientation of each check covers
    // both roles of s.
    bool admissible(const Separation& s) const {
        for (const Separation& t : chosen)
            if (leq(inverse(s), t) || leq(inverse(t), s)) return false;
        if (require_profile) {
            for (const Separation& t : chosen) {
                Separation c{s.b & t.b, s.a | t.a};
                if (c == s || in_chosen(c)) return false;
            }
            for (const Separation& t : chosen)
                for (const Separation& u : chosen)
                    if (Separation{t.b & u.b, t.a | u.a} == s) return false;
        }
        return true;
    }

    void run(std::size_t pair_idx) {
        if (stopped) return;
        if (++nodes > max_nodes) throw LimitError("orientation search exceeds node cap");
        if (pair_idx == sys.pairs.size()) {
            if (!emit(sorted_unique(chosen))) stopped = true;
            return;
        }
        auto [i, j] = sys.pairs[pair_idx];
        for (int idx : {i, j}) {
            const Separation& s = sys.members[idx];
            if (admissible(s)) {
                chosen.push_back(s);
                run(pair_idx + 1);
                chosen.pop_back();
            }
        }
    }
};

}  // namespace

bool for_each_consistent_orientation(const SeparationSystem& sys,
                                     std::uint64_t max_nodes, bool require_profile,
                                     const std::function<bool(const OrientedSeps&)>& fn) {
    OrientationSearch search(sys, max_nodes, require_profile, fn);
    search.run(0);
    return !search.stopped;
}

std::vector<OrientedSeps> consistent_orientations(const SeparationSystem& sys,
                                                  std::uint64_t max_nodes,
                                                  bool require_profile) {
    std::vector<OrientedSeps> found;
    for_each_consistent_orientation(sys, max_nodes, require_profile,
                                    [&found](const OrientedSeps& o) {
                                        found.push_back(o);
                                        return true;
                                    });
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<OrientedSeps> enumerate_profiles(const Graph& g, int k, const Limits& lim) {
    auto sys = enumerate_separations(g, k, lim.max_system_pairs);
    return consistent_orientations(sys, lim.max_orientations, true);
}

bool is_tangle(const Graph& g, const OrientedSeps& o) {
    std::size_t m = o.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            for (std::size_t l = j; l < m; ++l) {
                VertexSet a1 = o[i].a, a2 = o[j].a, a3 = o[l].a;
                if ((a1 | a2 | a3) != g.vertices()) continue;
                bool all_edges = true;
                for (const Edge& e : g.edges()) {
                    VertexSet both = bit(e.u) | bit(e.v);
                    if ((both & ~a1) && (both & ~a2) && (both & ~a3)) {
                        all_edges = false;
                        break;
                    }
                }
                if (all_edges) return false;
            }
    return true;
}

OrientedSeps restrict_profile(const OrientedSeps& p, int l) {
    OrientedSeps out;
    for (const Separation& s : p)
        if (order(s) < l) out.push_back(s);
    return out;
}

}  // namespace ctd
