#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dadqc/rng.hpp"

namespace dadqc {

using Edge = std::pair<int, int>;  // stored with first < second

// Fixed simple D-regular host graph on vertices 0..n-1.
struct HardwareGraph {
    int n = 0;
    int degree = 0;  // common degree D
    std::vector<Edge> edges;  // lexicographically sorted, u < v
    std::string name;

    bool has_edge(int u, int v) const;
    bool is_complete() const;
};

// Spanning d-regular subgraph of a host; edges are a subset of the host's.
struct InteractionGraph {
    int n = 0;
    int degree = 0;  // common degree d
    std::vector<Edge> edges;
    std::string host_name;

    std::vector<int> vertex_degrees() const;
    // Order-independent fingerprint of (n, edge set), stable across runs.
    std::uint64_t hash() const;
};

std::vector<int> vertex_degrees(int n, const std::vector<Edge>& edges);

HardwareGraph build_complete(int n);

// Vertex i is joined to i +- o (mod n) for each offset o in 1..n/2.
HardwareGraph build_circulant(int n, const std::vector<int>& offsets);

// Some d-factor of the host if one exists (Tutte gadget reduction to perfect
// matching), nullopt otherwise. The existence answer is exact; output is
// deterministic via lexicographic edge ordering.
std::optional<InteractionGraph> find_d_factor(const HardwareGraph& host, int d);

struct FactorSampleInfo {
    std::string method;  // "pairing" or "edge-swap"
    std::uint64_t swap_steps = 0;
    std::uint64_t rejections = 0;
};

std::uint64_t default_swap_steps(const HardwareGraph& host, int d);

// Uniform d-factor sample. Complete hosts use the pairing model with
// rejection (exactly uniform over simple labeled d-regular graphs); other
// hosts run an edge-swap chain of length swap_steps from find_d_factor's
// output, and the info record keeps swap_steps auditable.
InteractionGraph sample_d_factor(const HardwareGraph& host, int d, RandomSeed seed,
                                 std::uint64_t swap_steps,
                                 FactorSampleInfo* info = nullptr,
                                 std::uint64_t rejection_cap = 100000);

// Complete list of d-factors by backtracking; refuses hosts with n > 10.
std::vector<InteractionGraph> enumerate_d_factors(const HardwareGraph& host, int d);

// Throws std::invalid_argument when g is not a d-factor of host.
void validate_d_factor(const InteractionGraph& g, const HardwareGraph& host);

}  // namespace dadqc
