#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ctd {

// Oriented separation (A, B), read "towards B". Ordering is lexicographic on
// the two masks and is used only for canonical sorting.
struct Separation {
    VertexSet a = 0, b = 0;
    friend bool operator==(const Separation&, const Separation&) = default;
    friend auto operator<=>(const Separation&, const Separation&) = default;
};

inline Separation inverse(const Separation& s) { return {s.b, s.a}; }
inline int order(const Separation& s) { return popcount(s.a & s.b); }
inline VertexSet separator(const Separation& s) { return s.a & s.b; }
inline bool is_proper(const Separation& s) {
    return (s.a & ~s.b) != 0 && (s.b & ~s.a) != 0;
}

// (A1,B1) <= (A2,B2) iff A1 is contained in A2 and B1 contains B2.
inline bool leq(const Separation& s1, const Separation& s2) {
    return (s1.a & ~s2.a) == 0 && (s2.b & ~s1.b) == 0;
}

inline bool nested(const Separation& s1, const Separation& s2) {
    return leq(s1, s2) || leq(s2, s1) || leq(s1, inverse(s2)) ||
           leq(inverse(s2), s1);
}

inline bool crosses(const Separation& s1, const Separation& s2) {
    return !nested(s1, s2);
}

inline Separation map_separation(const std::vector<int>& perm, const Separation& s) {
    return {map_vertices(perm, s.a), map_vertices(perm, s.b)};
}

// Both sides cover V and no edge joins the two strict sides.
bool is_separation(const Graph& g, const Separation& s);

// Every separator vertex has a neighbour in each strict side.
bool is_tight(const Graph& g, const Separation& s);

struct Classification {
    int order;
    bool proper;
    bool tight;
};

// Throws InvariantError naming an offending edge or the uncovered vertex if
// s is not a separation of g.
Classification classify(const Graph& g, const Separation& s);

// The four corner separations of s1 = (A,B), s2 = (C,D):
// (A&C, B|D), (A|C, B&D), (A&D, B|C), (A|D, B&C).
std::array<Separation, 4> corners(const Separation& s1, const Separation& s2);

// A set of oriented separations, inversion-closed and canonically sorted.
struct SeparationSystem {
    std::vector<Separation> members;
    std::vector<int> inv;                    // inv[i]: index of members[i] inverted
    std::vector<std::pair<int, int>> pairs;  // one (i, inv[i]) per unordered pair, i < inv[i]
    int k_bound = 0;

    int size() const { return static_cast<int>(members.size()); }
    int index_of(const Separation& s) const;
    bool contains(const Separation& s) const { return index_of(s) >= 0; }
};

// Sorts, deduplicates, closes under inversion. Members must be proper and
// have order < k_bound.
SeparationSystem make_system(std::vector<Separation> seps, int k_bound);

// All proper separations of order < k: for each T with |T| < k, each split of
// the components of G - T into two nonempty groups CA, CB yields
// (CA | T, CB | T). Throws LimitError past max_pairs unordered pairs.
SeparationSystem enumerate_separations(const Graph& g, int k,
                                       std::size_t max_pairs);

// The inversion-closed subsystem of tight members.
SeparationSystem tight_subsystem(const Graph& g, const SeparationSystem& sys);

// "{0,2,5}" and "({0,1}|{1,2})" renderings for error messages.
std::string set_text(VertexSet s);
std::string sep_text(const Separation& s);

}  // namespace ctd
