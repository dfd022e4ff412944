#pragma once

#include <vector>

namespace dadqc::detail {

// Maximum matching in a general graph (blossom contraction, O(V^3)).
// adj[v] lists neighbors; traversal order follows the given list order, so
// output is deterministic for a fixed input ordering. Returns match[v] = the
// vertex matched to v, or -1.
std::vector<int> max_matching(int n, const std::vector<std::vector<int>>& adj);

}  // namespace dadqc::detail
