#include "corpus.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "errors.hpp"

namespace ctd {

namespace {

// Extend every n-1 vertex representative by one vertex with every possible
// neighbourhood, keeping one graph per isomorphism class. Buckets keyed by
// the degree-refinement signature keep the pairwise isomorphism tests rare.
std::vector<Graph> extend_all(const std::vector<Graph>& smaller, int n) {
    std::vector<Graph> out;
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (const Graph& h : smaller) {
        for (VertexSet nb = 0; nb < bit(n - 1); ++nb) {
            Graph g(n);
            for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
            for (int v = 0; v < n - 1; ++v)
                if (contains(nb, v)) g.add_edge(v, n - 1);
            auto& bucket = buckets[g.wl_signature()];
            bool seen = false;
            for (std::size_t i : bucket)
                if (Graph::isomorphic(out[i], g)) {
                    seen = true;
                    break;
                }
            if (!seen) {
                bucket.push_back(out.size());
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    if (n > 8) throw LimitError("graph census capped at 8 vertices");
    static std::mutex guard;
    static std::vector<std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(guard);
    if (cache.empty()) cache.push_back({Graph(0)});
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(
            extend_all(cache.back(), static_cast<int>(cache.size())));
    return cache[n];
}

}  // namespace ctd
