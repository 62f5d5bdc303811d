#pragma once

#include <vector>

#include "graph.hpp"

namespace ctd {

// All simple graphs on n vertices up to isomorphism, in a deterministic
// order (extension order, one representative per class). Sizes follow the
// known census: 1, 1, 2, 4, 11, 34, 156, 1044, 12346 for n = 0..8.
// Results are cached per n for the lifetime of the process.
// Throws InputError for n < 0 and LimitError for n > 8.
const std::vector<Graph>& all_graphs(int n);

}  // namespace ctd
