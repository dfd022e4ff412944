#include "dadqc/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dadqc/error.hpp"
#include "matching.hpp"

namespace dadqc {

namespace {

Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

void fnv_mix(std::uint64_t& h, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xffull;
        h *= 1099511628211ull;
    }
}

std::vector<char> adjacency_matrix(int n, const std::vector<Edge>& edges) {
    std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u) * n + v] = 1;
        adj[static_cast<std::size_t>(v) * n + u] = 1;
    }
    return adj;
}

}  // namespace

bool HardwareGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
}

bool HardwareGraph::is_complete() const {
    return n >= 2 && degree == n - 1 &&
           static_cast<long long>(edges.size()) == static_cast<long long>(n) * (n - 1) / 2;
}

std::vector<int> vertex_degrees(int n, const std::vector<Edge>& edges) {
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<int> InteractionGraph::vertex_degrees() const {
    return dadqc::vertex_degrees(n, edges);
}

std::uint64_t InteractionGraph::hash() const {
    std::uint64_t h = 14695981039346656037ull;
    fnv_mix(h, static_cast<std::uint64_t>(n));
    for (const auto& [u, v] : edges) {
        fnv_mix(h, static_cast<std::uint64_t>(u));
        fnv_mix(h, static_cast<std::uint64_t>(v));
    }
    return h;
}

HardwareGraph build_complete(int n) {
    if (n < 2) throw std::invalid_argument("build_complete: n must be at least 2");
    HardwareGraph g;
    g.n = n;
    g.degree = n - 1;
    g.name = "K" + std::to_string(n);
    g.edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    }
    return g;
}

HardwareGraph build_circulant(int n, const std::vector<int>& offsets) {
    if (n < 2) throw std::invalid_argument("build_circulant: n must be at least 2");
    if (offsets.empty()) throw std::invalid_argument("build_circulant: offsets must be nonempty");
    std::set<int> seen;
    for (const int o : offsets) {
        if (o < 1 || 2 * o > n) {
            throw std::invalid_argument("build_circulant: offset " + std::to_string(o) +
                                        " outside 1..n/2");
        }
        if (!seen.insert(o).second) {
            throw std::invalid_argument("build_circulant: duplicate offset " + std::to_string(o));
        }
    }
    std::set<Edge> edge_set;
    for (const int o : offsets) {
        for (int i = 0; i < n; ++i) edge_set.insert(make_edge(i, (i + o) % n));
    }
    HardwareGraph g;
    g.n = n;
    g.edges.assign(edge_set.begin(), edge_set.end());
    const auto deg = vertex_degrees(n, g.edges);
    g.degree = deg[0];
    for (const int d : deg) {
        if (d != g.degree)
            throw std::invalid_argument("build_circulant: offsets yield a non-regular graph");
    }
    g.name = "C" + std::to_string(n);
    for (const int o : offsets) g.name += "_" + std::to_string(o);
    return g;
}

void validate_d_factor(const InteractionGraph& g, const HardwareGraph& host) {
    if (g.n != host.n) throw std::invalid_argument("d-factor: vertex count mismatch");
    for (const auto& [u, v] : g.edges) {
        if (!host.has_edge(u, v))
            throw std::invalid_argument("d-factor: edge not present in host");
    }
    for (const int d : g.vertex_degrees()) {
        if (d != g.degree) throw std::invalid_argument("d-factor: vertex degree != d");
    }
    if (!std::is_sorted(g.edges.begin(), g.edges.end()))
        throw std::invalid_argument("d-factor: edge list not sorted");
}

std::optional<InteractionGraph> find_d_factor(const HardwareGraph& host, int d) {
    if (d < 1 || d > host.degree)
        throw std::invalid_argument("find_d_factor: d must satisfy 1 <= d <= D");
    if ((static_cast<long long>(host.n) * d) % 2 != 0) return std::nullopt;

    // Tutte gadget: per vertex, one external node per incident edge plus
    // (D - d) internal nodes joined to all of that vertex's externals; host
    // edges join their two externals. A perfect matching leaves exactly d
    // externals per vertex matched across, and those edges form the factor.
    const int n = host.n;
    const int m = static_cast<int>(host.edges.size());
    std::vector<std::vector<int>> incident(n);  // edge indices, ascending
    for (int e = 0; e < m; ++e) {
        incident[host.edges[e].first].push_back(e);
        incident[host.edges[e].second].push_back(e);
    }

    // External node ids: 2e for the lower endpoint of edge e, 2e+1 for the upper.
    auto ext_id = [&](int v, int e) {
        return host.edges[e].first == v ? 2 * e : 2 * e + 1;
    };
    std::vector<int> internal_base(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        const int spare = static_cast<int>(incident[v].size()) - d;
        if (spare < 0) return std::nullopt;  // vertex cannot reach degree d
        internal_base[v + 1] = internal_base[v] + spare;
    }
    const int total = 2 * m + internal_base[n];

    std::vector<std::vector<int>> adj(total);
    for (int e = 0; e < m; ++e) {
        adj[2 * e].push_back(2 * e + 1);
        adj[2 * e + 1].push_back(2 * e);
    }
    for (int v = 0; v < n; ++v) {
        for (const int e : incident[v]) {
            const int x = ext_id(v, e);
            for (int j = internal_base[v]; j < internal_base[v + 1]; ++j) {
                const int y = 2 * m + j;
                adj[x].push_back(y);
                adj[y].push_back(x);
            }
        }
    }

    const std::vector<int> match = detail::max_matching(total, adj);
    for (int i = 0; i < total; ++i) {
        if (match[i] == -1) return std::nullopt;
    }

    InteractionGraph g;
    g.n = n;
    g.degree = d;
    g.host_name = host.name;
    for (int e = 0; e < m; ++e) {
        if (match[2 * e] == 2 * e + 1) g.edges.push_back(host.edges[e]);
    }
    validate_d_factor(g, host);
    return g;
}

std::uint64_t default_swap_steps(const HardwareGraph& host, int d) {
    return 100ull * static_cast<std::uint64_t>(host.n) * static_cast<std::uint64_t>(d) / 2;
}

namespace {

InteractionGraph sample_pairing(const HardwareGraph& host, int d, RandomSeed seed,
                                FactorSampleInfo* info, std::uint64_t rejection_cap);

// Complementation is a uniformity-preserving bijection between d-factors and
// (n-1-d)-factors of K_n; dense degrees are sampled on the sparse side where
// the pairing model's acceptance rate is healthy.
InteractionGraph sample_pairing_complement(const HardwareGraph& host, int d,
                                           RandomSeed seed, FactorSampleInfo* info,
                                           std::uint64_t rejection_cap) {
    const int sparse_d = host.n - 1 - d;
    const InteractionGraph sparse =
        sample_pairing(host, sparse_d, seed, info, rejection_cap);
    std::vector<char> keep(static_cast<std::size_t>(host.n) * host.n, 1);
    for (const auto& [u, v] : sparse.edges) {
        keep[static_cast<std::size_t>(u) * host.n + v] = 0;
    }
    InteractionGraph g;
    g.n = host.n;
    g.degree = d;
    g.host_name = host.name;
    g.edges.reserve(host.edges.size() - sparse.edges.size());
    for (const auto& e : host.edges) {
        if (keep[static_cast<std::size_t>(e.first) * host.n + e.second]) {
            g.edges.push_back(e);
        }
    }
    if (info) info->method = "pairing-complement";
    validate_d_factor(g, host);
    return g;
}

InteractionGraph sample_pairing(const HardwareGraph& host, int d, RandomSeed seed,
                                FactorSampleInfo* info, std::uint64_t rejection_cap) {
    const int n = host.n;
    if (2 * d > n - 1) {
        return sample_pairing_complement(host, d, seed, info, rejection_cap);
    }
    CounterRng rng(seed, 0);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v) {
        for (int k = 0; k < d; ++k) stubs.push_back(v);
    }
    std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
    std::uint64_t rejections = 0;
    for (;;) {
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            const std::size_t j = rng.next_below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        std::fill(used.begin(), used.end(), 0);
        bool ok = true;
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
            const int u = stubs[k], v = stubs[k + 1];
            if (u == v) {
                ok = false;
                break;
            }
            char& flag = used[static_cast<std::size_t>(std::min(u, v)) * n + std::max(u, v)];
            if (flag) {
                ok = false;
                break;
            }
            flag = 1;
            edges.push_back(make_edge(u, v));
        }
        if (ok) {
            std::sort(edges.begin(), edges.end());
            InteractionGraph g;
            g.n = n;
            g.degree = d;
            g.edges = std::move(edges);
            g.host_name = host.name;
            if (info) {
                info->method = "pairing";
                info->swap_steps = 0;
                info->rejections = rejections;
            }
            validate_d_factor(g, host);
            return g;
        }
        if (++rejections > rejection_cap) {
            throw NumericalError("sample_d_factor: pairing-model rejection cap (" +
                                 std::to_string(rejection_cap) + ") exceeded");
        }
    }
}

InteractionGraph sample_edge_swap(const HardwareGraph& host, int d, RandomSeed seed,
                                  std::uint64_t swap_steps, FactorSampleInfo* info) {
    auto start = find_d_factor(host, d);
    if (!start) throw std::invalid_argument("sample_d_factor: host has no d-factor");
    const int n = host.n;
    std::vector<Edge> edges = std::move(start->edges);
    const std::size_t m = edges.size();
    const auto host_adj = adjacency_matrix(n, host.edges);
    auto in_factor = adjacency_matrix(n, edges);
    auto at = [&](int u, int v) -> char& {
        return in_factor[static_cast<std::size_t>(u) * n + v];
    };
    auto in_host = [&](int u, int v) {
        return host_adj[static_cast<std::size_t>(u) * n + v] != 0;
    };

    CounterRng rng(seed, 1);
    if (m >= 2) {
        for (std::uint64_t step = 0; step < swap_steps; ++step) {
            const std::size_t i = rng.next_below(m);
            std::size_t j = rng.next_below(m - 1);
            if (j >= i) ++j;
            int a = edges[i].first, b = edges[i].second;
            if (rng.next_bool()) std::swap(a, b);
            int c = edges[j].first, e = edges[j].second;
            if (rng.next_bool()) std::swap(c, e);
            // Proposed rewiring {a,b},{c,e} -> {a,c},{b,e}.
            if (a == c || a == e || b == c || b == e) continue;
            if (!in_host(a, c) || !in_host(b, e)) continue;
            if (at(a, c) || at(b, e)) continue;
            at(a, b) = at(b, a) = 0;
            at(c, e) = at(e, c) = 0;
            at(a, c) = at(c, a) = 1;
            at(b, e) = at(e, b) = 1;
            edges[i] = make_edge(a, c);
            edges[j] = make_edge(b, e);
        }
    }
    std::sort(edges.begin(), edges.end());
    InteractionGraph g;
    g.n = n;
    g.degree = d;
    g.edges = std::move(edges);
    g.host_name = host.name;
    if (info) {
        info->method = "edge-swap";
        info->swap_steps = swap_steps;
        info->rejections = 0;
    }
    validate_d_factor(g, host);
    return g;
}

}  // namespace

InteractionGraph sample_d_factor(const HardwareGraph& host, int d, RandomSeed seed,
                                 std::uint64_t swap_steps, FactorSampleInfo* info,
                                 std::uint64_t rejection_cap) {
    if (d < 1 || d > host.degree)
        throw std::invalid_argument("sample_d_factor: d must satisfy 1 <= d <= D");
    if ((static_cast<long long>(host.n) * d) % 2 != 0)
        throw std::invalid_argument("sample_d_factor: host has no d-factor (n*d odd)");
    if (d == host.degree) {
        // The only d-factor of a D-regular host with d = D is the host itself.
        InteractionGraph g;
        g.n = host.n;
        g.degree = d;
        g.edges = host.edges;
        g.host_name = host.name;
        if (info) {
            info->method = "full-host";
            info->swap_steps = 0;
            info->rejections = 0;
        }
        return g;
    }
    if (host.is_complete()) return sample_pairing(host, d, seed, info, rejection_cap);
    return sample_edge_swap(host, d, seed, swap_steps, info);
}

std::vector<InteractionGraph> enumerate_d_factors(const HardwareGraph& host, int d) {
    if (host.n > 10)
        throw std::invalid_argument("enumerate_d_factors: refusing host with n > 10");
    if (d < 1 || d > host.degree)
        throw std::invalid_argument("enumerate_d_factors: d must satisfy 1 <= d <= D");
    const int n = host.n;
    const int m = static_cast<int>(host.edges.size());
    std::vector<int> deg(n, 0);
    std::vector<int> remaining(n, 0);  // undecided incidences per vertex
    for (const auto& [u, v] : host.edges) {
        ++remaining[u];
        ++remaining[v];
    }
    std::vector<InteractionGraph> out;
    std::vector<Edge> chosen;

    auto feasible = [&](int v) { return deg[v] <= d && deg[v] + remaining[v] >= d; };

    auto recurse = [&](auto&& self, int k) -> void {
        if (k == m) {
            for (int v = 0; v < n; ++v) {
                if (deg[v] != d) return;
            }
            InteractionGraph g;
            g.n = n;
            g.degree = d;
            g.edges = chosen;
            g.host_name = host.name;
            out.push_back(std::move(g));
            return;
        }
        const auto [u, v] = host.edges[k];
        --remaining[u];
        --remaining[v];
        if (deg[u] < d && deg[v] < d) {
            ++deg[u];
            ++deg[v];
            chosen.push_back(host.edges[k]);
            if (feasible(u) && feasible(v)) self(self, k + 1);
            chosen.pop_back();
            --deg[u];
            --deg[v];
        }
        if (feasible(u) && feasible(v)) self(self, k + 1);
        ++remaining[u];
        ++remaining[v];
    };
    recurse(recurse, 0);
    return out;
}

}  // namespace dadqc
