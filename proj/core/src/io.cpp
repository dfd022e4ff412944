#include "dadqc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dadqc {

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::string bitstring(std::uint64_t s, int n) {
    std::string out(n, '0');
    for (int i = 0; i < n; ++i) {
        if ((s >> i) & 1ull) out[i] = '1';
    }
    return out;
}

std::uint64_t parse_bitstring(const std::string& text) {
    if (text.empty() || text.size() > 64)
        throw std::invalid_argument("parse_bitstring: length outside 1..64");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            s |= 1ull << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("parse_bitstring: characters must be 0 or 1");
        }
    }
    return s;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Provenance& Provenance::add(const std::string& key, const std::string& value) {
    items_.emplace_back(key, "\"" + value + "\"");
    return *this;
}

Provenance& Provenance::add(const std::string& key, std::uint64_t value) {
    items_.emplace_back(key, std::to_string(value));
    return *this;
}

Provenance& Provenance::add(const std::string& key, double value) {
    items_.emplace_back(key, format_double(value));
    return *this;
}

std::string Provenance::line() const {
    std::string out = "# {";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ",";
        out += "\"" + items_[i].first + "\":" + items_[i].second;
    }
    out += "}";
    return out;
}

void write_graph(std::ostream& os, const InteractionGraph& g, const Provenance& prov) {
    os << prov.line() << "\n";
    os << g.n << " " << g.edges.size() << "\n";
    for (const auto& [u, v] : g.edges) os << u << " " << v << "\n";
}

namespace {

// Returns the next content line, skipping '#' comments and blank lines.
bool next_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

InteractionGraph read_interaction_graph(std::istream& is) {
    std::string line;
    if (!next_line(is, line)) throw std::invalid_argument("graph file: missing header line");
    std::istringstream head(line);
    int n = 0;
    std::size_t m = 0;
    if (!(head >> n >> m)) throw std::invalid_argument("graph file: bad 'n m' header");
    if (n < 1) throw std::invalid_argument("graph file: n must be positive");
    InteractionGraph g;
    g.n = n;
    for (std::size_t k = 0; k < m; ++k) {
        if (!next_line(is, line)) throw std::invalid_argument("graph file: missing edge line");
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v)) throw std::invalid_argument("graph file: bad edge line");
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw std::invalid_argument("graph file: edge must satisfy 0 <= u < v < n");
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    const auto deg = g.vertex_degrees();
    g.degree = deg.empty() ? 0 : deg[0];
    for (const int d : deg) {
        if (d != g.degree)
            throw std::invalid_argument("graph file: graph is not regular");
    }
    return g;
}

void write_ising(std::ostream& os, const IsingParams& params, const Provenance& prov,
                 const MeasurementAngles* theta, std::optional<double> beta) {
    write_graph(os, params.graph, prov);
    for (std::size_t i = 0; i < params.h.size(); ++i) {
        os << "h " << i << " " << format_double(params.h[i]) << "\n";
    }
    for (std::size_t k = 0; k < params.J.size(); ++k) {
        os << "J " << params.graph.edges[k].first << " " << params.graph.edges[k].second
           << " " << format_double(params.J[k]) << "\n";
    }
    if (theta) {
        for (std::size_t i = 0; i < theta->theta.size(); ++i) {
            os << "theta " << i << " " << format_double(theta->theta[i]) << "\n";
        }
    }
    if (beta) os << "beta " << format_double(*beta) << "\n";
}

IsingInstanceFile read_ising(std::istream& is) {
    const InteractionGraph g = read_interaction_graph(is);
    std::vector<double> h(g.n, 0.0);
    std::vector<double> J(g.edges.size(), 0.0);
    std::vector<double> theta(g.n, 0.0);
    bool has_theta = false;
    std::optional<double> beta;

    std::string line;
    while (next_line(is, line)) {
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "h") {
            int i = 0;
            double v = 0;
            if (!(row >> i >> v) || i < 0 || i >= g.n)
                throw std::invalid_argument("ising file: bad 'h i value' line");
            h[i] = v;
        } else if (tag == "J") {
            int u = 0, v = 0;
            double val = 0;
            if (!(row >> u >> v >> val))
                throw std::invalid_argument("ising file: bad 'J u v value' line");
            const Edge e = u < v ? Edge{u, v} : Edge{v, u};
            const auto it = std::lower_bound(g.edges.begin(), g.edges.end(), e);
            if (it == g.edges.end() || *it != e)
                throw std::invalid_argument("ising file: J on a non-edge");
            J[it - g.edges.begin()] = val;
        } else if (tag == "theta") {
            int i = 0;
            double v = 0;
            if (!(row >> i >> v) || i < 0 || i >= g.n)
                throw std::invalid_argument("ising file: bad 'theta i value' line");
            theta[i] = v;
            has_theta = true;
        } else if (tag == "beta") {
            double v = 0;
            if (!(row >> v)) throw std::invalid_argument("ising file: bad 'beta value' line");
            beta = v;
        } else {
            throw std::invalid_argument("ising file: unknown line tag '" + tag + "'");
        }
    }
    double h_cap = 0, j_cap = 0;
    for (const double v : h) h_cap = std::max(h_cap, std::abs(v));
    for (const double v : J) j_cap = std::max(j_cap, std::abs(v));
    IsingInstanceFile out{
        IsingParams::create(g, std::move(h), std::move(J),
                            std::max(h_cap, 3.15), std::max(j_cap, 3.15)),
        std::nullopt, beta};
    if (has_theta) out.theta = MeasurementAngles{std::move(theta)};
    return out;
}

void write_distribution_csv(std::ostream& os, const Distribution& dist,
                            const Provenance& prov) {
    os << prov.line() << "\n";
    os << "index,probability\n";
    for (std::size_t i = 0; i < dist.p.size(); ++i) {
        os << i << "," << format_double(dist.p[i]) << "\n";
    }
}

void write_samples(std::ostream& os, const std::vector<std::uint64_t>& samples, int n,
                   const Provenance& prov) {
    os << prov.line() << "\n";
    for (const auto s : samples) os << bitstring(s, n) << "\n";
}

}  // namespace dadqc
