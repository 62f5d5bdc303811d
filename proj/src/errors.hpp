#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ctd {

struct InputError : std::runtime_error {
    int line = 0;
    explicit InputError(const std::string& msg, int line_no = 0)
        : std::runtime_error(msg), line(line_no) {}
};

struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a task has no valid output by design (not a bug): e.g. a
// strategy's chosen separations cross, an extremal profile is not unique,
// or no candidate separation distinguishes two remaining profiles.
struct InfeasibleError : std::runtime_error {
    std::string kind;
    InfeasibleError(std::string k, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(k)) {}
};

// A checked internal invariant failed. Always a bug in this library.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Limits {
    int max_n = 16;
    int max_k = 5;
    std::uint64_t max_orientations = 1u << 20;
    std::size_t max_system_pairs = 4096;
    std::uint64_t max_automorphisms = 1u << 20;
};

}  // namespace ctd
