#include "separation.hpp"

#include <algorithm>
#include <sstream>

namespace ctd {

namespace {

std::optional<Edge> crossing_edge(const Graph& g, const Separation& s) {
    VertexSet left = s.a & ~s.b;
    VertexSet right = s.b & ~s.a;
    for (VertexSet rest = left; rest;) {
        int v = lowest_bit(rest);
        rest &= rest - 1;
        VertexSet hit = g.neighbors(v) & right;
        if (hit) return Edge{v, lowest_bit(hit)};
    }
    return std::nullopt;
}

}  // namespace

bool is_separation(const Graph& g, const Separation& s) {
    if ((s.a | s.b) != g.vertices()) return false;
    return !crossing_edge(g, s).has_value();
}

bool is_tight(const Graph& g, const Separation& s) {
    VertexSet left = s.a & ~s.b;
    VertexSet right = s.b & ~s.a;
    for (VertexSet rest = separator(s); rest;) {
        int v = lowest_bit(rest);
        rest &= rest - 1;
        if (!(g.neighbors(v) & left) || !(g.neighbors(v) & right)) return false;
    }
    return true;
}

Classification classify(const Graph& g, const Separation& s) {
    if ((s.a | s.b) != g.vertices()) {
        int missing = lowest_bit(g.vertices() & ~(s.a | s.b));
        throw InvariantError("separation sides do not cover vertex " +
                             std::to_string(missing));
    }
    if (auto e = crossing_edge(g, s)) {
        std::ostringstream os;
        os << "edge " << e->u << "-" << e->v << " joins the two strict sides";
        throw InvariantError(os.str());
    }
    return {order(s), is_proper(s), is_tight(g, s)};
}

std::array<Separation, 4> corners(const Separation& s1, const Separation& s2) {
    return {Separation{s1.a & s2.a, s1.b | s2.b},
            Separation{s1.a | s2.a, s1.b & s2.b},
            Separation{s1.a & s2.b, s1.b | s2.a},
            Separation{s1.a | s2.b, s1.b & s2.a}};
}

int SeparationSystem::index_of(const Separation& s) const {
    auto it = std::lower_bound(members.begin(), members.end(), s);
    if (it == members.end() || *it != s) return -1;
    return static_cast<int>(it - members.begin());
}

SeparationSystem make_system(std::vector<Separation> seps, int k_bound) {
    std::size_t base = seps.size();
    for (std::size_t i = 0; i < base; ++i) seps.push_back(inverse(seps[i]));
    std::sort(seps.begin(), seps.end());
    seps.erase(std::unique(seps.begin(), seps.end()), seps.end());
    SeparationSystem sys;
    sys.k_bound = k_bound;
    sys.members = std::move(seps);
    sys.inv.resize(sys.members.size());
    for (int i = 0; i < sys.size(); ++i) {
        const Separation& s = sys.members[i];
        if (!is_proper(s)) throw InvariantError("system member is improper");
        if (order(s) >= k_bound)
            throw InvariantError("system member order " + std::to_string(order(s)) +
                                 " reaches bound " + std::to_string(k_bound));
        sys.inv[i] = sys.index_of(inverse(s));
        if (i < sys.inv[i]) sys.pairs.emplace_back(i, sys.inv[i]);
    }
    return sys;
}

SeparationSystem enumerate_separations(const Graph& g, int k,
                                       std::size_t max_pairs) {
    if (k < 1) throw InputError("order bound must be at least 1");
    int n = g.n();
    if (n > 24) throw LimitError("graph too large for separation enumeration");
    std::vector<Separation> out;
    for (VertexSet t = 0; t < (VertexSet{1} << n); ++t) {
        if (popcount(t) >= k) continue;
        auto comps = g.components(g.vertices() & ~t);
        int r = static_cast<int>(comps.size());
        if (r > 20) throw LimitError("too many components for bipartition sweep");
        if (r < 2) continue;
        for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
            VertexSet ca = 0;
            for (int i = 0; i < r; ++i)
                if ((mask >> i) & 1) ca |= comps[i];
            VertexSet cb = 0;
            for (int i = 0; i < r; ++i)
                if (!((mask >> i) & 1)) cb |= comps[i];
            out.push_back({ca | t, cb | t});
            if (out.size() > 2 * max_pairs)
                throw LimitError("separation count exceeds configured limit");
        }
    }
    auto sys = make_system(std::move(out), k);
    if (sys.pairs.size() > max_pairs)
        throw LimitError("separation count exceeds configured limit");
    return sys;
}

SeparationSystem tight_subsystem(const Graph& g, const SeparationSystem& sys) {
    std::vector<Separation> keep;
    for (const Separation& s : sys.members)
        if (is_tight(g, s)) keep.push_back(s);
    return make_system(std::move(keep), sys.k_bound);
}

std::string set_text(VertexSet s) {
    std::string out = "{";
    for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
        if (out.size() > 1) out += ',';
        out += std::to_string(lowest_bit(rest));
    }
    return out + "}";
}

std::string sep_text(const Separation& s) {
    return "(" + set_text(s.a) + "," + set_text(s.b) + ")";
}

}  // namespace ctd
