#include "strategy.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ctd {

namespace {

bool nested_with_all(const Separation& s, const std::vector<Separation>& ns) {
    for (const Separation& t : ns)
        if (!nested(s, t)) return false;
    return true;
}

// s splits o: both orientations of s extend o consistently. For proper
// separations this reduces to: neither orientation of s lies below a member.
bool splits(const Separation& s, const OrientedSeps& o) {
    Separation is = inverse(s);
    for (const Separation& m : o)
        if (leq(s, m) || leq(is, m)) return false;
    return true;
}

void require_pairwise_nested(const std::vector<Separation>& seps,
                             const char* where) {
    for (std::size_t i = 0; i < seps.size(); ++i)
        for (std::size_t j = i + 1; j < seps.size(); ++j)
            if (crosses(seps[i], seps[j]))
                throw InfeasibleError("crossing",
                                      std::string(where) + ": " + sep_text(seps[i]) +
                                          " crosses " + sep_text(seps[j]));
}

// The orientation of the sorted members `ns` induced by profile p.
OrientedSeps induced_orientation(const OrientedSeps& p,
                                 const std::vector<Separation>& ns) {
    OrientedSeps o;
    for (const Separation& m : ns)
        if (oriented_member(p, m)) o.push_back(m);
    return o;
}

void run_single_rec(const Task& t, StrategyKind kind,
                    std::vector<Separation>& acc) {
    if (t.profiles.size() <= 1) return;
    Task r = reduce_task(t);
    if (r.s.members.empty())
        throw InfeasibleError("undistinguished",
                              "no candidate separation distinguishes two of "
                              "the remaining profiles");
    SeparationSystem chosen = kind == StrategyKind::Ext
                                  ? extremal_separations(r).system
                                  : locally_maximal_separations(r);
    acc.insert(acc.end(), chosen.members.begin(), chosen.members.end());

    std::map<OrientedSeps, std::vector<OrientedSeps>> classes;
    for (const OrientedSeps& p : r.profiles)
        classes[induced_orientation(p, chosen.members)].push_back(p);
    for (auto& [o, group] : classes) {
        if (group.size() < 2) continue;
        std::vector<Separation> sub;
        for (const Separation& m : r.s.members)
            if (nested_with_all(m, chosen.members) && splits(m, o))
                sub.push_back(m);
        std::vector<Separation> ctx = r.context;
        ctx.insert(ctx.end(), chosen.members.begin(), chosen.members.end());
        run_single_rec(make_task(make_system(sub, r.s.k_bound), group,
                                 sorted_unique(std::move(ctx))),
                       kind, acc);
    }
}

}  // namespace

std::string to_string(StrategyKind kind) {
    return kind == StrategyKind::Ext ? "ext" : "loc";
}

StrategyKind strategy_from_string(const std::string& name) {
    if (name == "ext") return StrategyKind::Ext;
    if (name == "loc") return StrategyKind::Loc;
    throw InputError("unknown strategy '" + name + "' (expected ext or loc)");
}

Task make_task(SeparationSystem s, std::vector<OrientedSeps> profiles,
               std::vector<Separation> context) {
    for (const OrientedSeps& p : profiles)
        for (const Separation& m : s.members)
            if (!oriented_member(p, m) && !oriented_member(p, inverse(m)))
                throw InputError("task profile does not orient member " +
                                 sep_text(m));
    for (const Separation& m : s.members)
        for (const Separation& c : context)
            if (crosses(m, c))
                throw InputError("task member " + sep_text(m) +
                                 " crosses context member " + sep_text(c));
    return {std::move(s), std::move(profiles), std::move(context)};
}

Task reduce_task(const Task& t) {
    std::vector<Separation> kept;
    for (const Separation& m : t.s.members) {
        bool held = false, inverted = false;
        for (const OrientedSeps& p : t.profiles)
            (oriented_member(p, m) ? held : inverted) = true;
        if (held && inverted) kept.push_back(m);
    }
    return {make_system(std::move(kept), t.s.k_bound), t.profiles, t.context};
}

ExtremalChoice extremal_separations(const Task& t) {
    ExtremalChoice out;
    for (const Separation& m : t.s.members) {
        bool maximal = true;
        for (const Separation& other : t.s.members)
            if (other != m && leq(m, other)) {
                maximal = false;
                break;
            }
        if (maximal) out.maximal.push_back(m);
    }
    require_pairwise_nested(out.maximal, "extremal choice");
    for (const Separation& m : out.maximal) {
        int owner = -1;
        for (std::size_t i = 0; i < t.profiles.size(); ++i) {
            if (!oriented_member(t.profiles[i], m)) continue;
            if (owner >= 0)
                throw InfeasibleError("non_unique_extremal",
                                      "two profiles contain the maximal member " +
                                          sep_text(m));
            owner = static_cast<int>(i);
        }
        if (owner < 0)
            throw InfeasibleError("non_unique_extremal",
                                  "no profile contains the maximal member " +
                                      sep_text(m));
        out.owner.push_back(owner);
    }
    std::vector<Separation> all = out.maximal;
    for (const Separation& m : out.maximal) all.push_back(inverse(m));
    out.system = make_system(std::move(all), t.s.k_bound);
    std::set<int> owners(out.owner.begin(), out.owner.end());
    if (out.system.members.size() > 2 * owners.size())
        throw InfeasibleError("ext_bound",
                              "extremal choice exceeds twice its profile count");
    return out;
}

SeparationSystem locally_maximal_separations(const Task& t) {
    std::vector<Separation> chosen;
    for (const OrientedSeps& p : t.profiles) {
        OrientedSeps held = induced_orientation(p, t.s.members);
        for (const Separation& m : held) {
            bool maximal = true;
            for (const Separation& other : held)
                if (other != m && leq(m, other)) {
                    maximal = false;
                    break;
                }
            if (maximal) {
                chosen.push_back(m);
                chosen.push_back(inverse(m));
            }
        }
    }
    auto sys = make_system(std::move(chosen), t.s.k_bound);
    require_pairwise_nested(sys.members, "locally maximal choice");
    return sys;
}

std::vector<Separation> run_single(const Task& t, StrategyKind kind) {
    std::vector<Separation> acc;
    run_single_rec(t, kind, acc);
    acc = sorted_unique(std::move(acc));
    require_pairwise_nested(acc, "strategy result");
    return acc;
}

StrategyRun run_iterated(const Graph& g, int k, StrategyKind kind,
                         const std::vector<OrientedSeps>& profiles,
                         const Limits& lim) {
    if (k < 1 || k > lim.max_k) throw InputError("order out of range");
    if (g.n() > lim.max_n) throw InputError("graph too large for limits");
    auto sys = enumerate_separations(g, k, lim.max_system_pairs);
    for (const OrientedSeps& p : profiles) {
        if (!orients(sys, p))
            throw InputError("input does not orient the full system");
        if (!is_profile(p)) throw InputError("input orientation is not a profile");
    }

    // levels[l]: the order < l restrictions of the input profiles, deduplicated.
    std::vector<std::vector<OrientedSeps>> levels(k + 1);
    {
        std::set<OrientedSeps> distinct(profiles.begin(), profiles.end());
        levels[k].assign(distinct.begin(), distinct.end());
    }
    for (int l = k - 1; l >= 1; --l) {
        std::set<OrientedSeps> distinct;
        for (const OrientedSeps& p : levels[l + 1])
            distinct.insert(restrict_profile(p, l));
        levels[l].assign(distinct.begin(), distinct.end());
    }

    StrategyRun run;
    run.kind = kind;
    run.k = k;
    run.p = static_cast<int>(levels[k].size());
    run.child_counts.push_back(static_cast<int>(levels[1].size()));
    for (int l = 1; l < k; ++l)
        for (const OrientedSeps& parent : levels[l]) {
            int c = 0;
            for (const OrientedSeps& p : levels[l + 1])
                if (restrict_profile(p, l) == parent) ++c;
            run.child_counts.push_back(c);
        }

    std::vector<Separation> n;
    for (int l = 1; l <= k; ++l) {
        LevelTrace trace;
        trace.level = l;
        std::vector<Separation> pool;
        for (const Separation& m : sys.members)
            if (order(m) == l - 1) pool.push_back(m);

        std::vector<std::vector<OrientedSeps>> groups;
        if (l == 1) {
            groups.push_back(levels[1]);
        } else {
            for (const OrientedSeps& parent : levels[l - 1]) {
                std::vector<OrientedSeps> children;
                for (const OrientedSeps& p : levels[l])
                    if (restrict_profile(p, l - 1) == parent)
                        children.push_back(p);
                groups.push_back(std::move(children));
            }
        }

        std::size_t before = n.size();
        for (const auto& group : groups) {
            if (group.size() < 2) continue;
            OrientedSeps region = induced_orientation(group.front(), n);
            std::vector<Separation> sub;
            for (const Separation& m : pool)
                if (nested_with_all(m, n) && splits(m, region)) sub.push_back(m);
            auto got = run_single(make_task(make_system(std::move(sub), k),
                                            group, n),
                                  kind);
            trace.tasks_solved += 1;
            n.insert(n.end(), got.begin(), got.end());
            n = sorted_unique(std::move(n));
        }
        trace.separations_added = static_cast<int>(n.size() - before);
        run.per_level.push_back(trace);
    }

    require_pairwise_nested(n, "iterated strategy result");
    for (std::size_t i = 0; i < levels[k].size(); ++i)
        for (std::size_t j = i + 1; j < levels[k].size(); ++j) {
            bool split = false;
            for (const Separation& m : n)
                if (oriented_member(levels[k][i], m) &&
                    oriented_member(levels[k][j], inverse(m))) {
                    split = true;
                    break;
                }
            if (!split)
                throw InfeasibleError("undistinguished",
                                      "chosen system fails to distinguish two "
                                      "input profiles");
        }

    run.chosen = std::move(n);
    return run;
}

BoundReport bound_report(const Graph& g, const StrategyRun& run) {
    BoundReport r;
    r.p = run.p;
    r.chosen_size = static_cast<int>(run.chosen.size());
    r.node_count = r.chosen_size / 2 + 1;
    r.inessential = r.node_count - r.p;
    r.connected_enough = g.is_l_connected(run.k - 1);
    auto add = [&](const char* name, bool holds) {
        r.lines.push_back({name, holds});
    };
    add("lower", 2 * (r.p - 1) <= r.chosen_size);
    if (r.p >= 1) {
        add("upper_iterated", r.chosen_size <= 4 * (r.p - 1));
        if (r.connected_enough && run.kind == StrategyKind::Ext)
            add("upper_connected", r.chosen_size <= 2 * r.p);
    }
    r.all_hold = std::all_of(r.lines.begin(), r.lines.end(),
                             [](const BoundLine& l) { return l.holds; });
    return r;
}

}  // namespace ctd
