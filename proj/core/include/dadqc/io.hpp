#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dadqc/distribution.hpp"
#include "dadqc/evolution.hpp"
#include "dadqc/graph.hpp"
#include "dadqc/ising.hpp"

namespace dadqc {

// 64-bit FNV-1a, used for config hashes in provenance headers.
std::uint64_t fnv1a(std::string_view bytes);

// Qubit i at character position i (most-significant qubit last).
std::string bitstring(std::uint64_t s, int n);
std::uint64_t parse_bitstring(const std::string& text);

// One-line JSON provenance header, emitted as a '#' comment before the body
// of every output file. Keys are written in insertion order.
class Provenance {
public:
    Provenance& add(const std::string& key, const std::string& value);
    Provenance& add(const std::string& key, std::uint64_t value);
    Provenance& add(const std::string& key, double value);
    std::string line() const;

private:
    std::vector<std::pair<std::string, std::string>> items_;
};

// Graph exchange format: '#' comment lines, then "n m", then m lines "u v"
// with u < v, vertices 0-based.
void write_graph(std::ostream& os, const InteractionGraph& g, const Provenance& prov);
InteractionGraph read_interaction_graph(std::istream& is);

// Ising instance file: graph format followed by "h i value" and "J u v value"
// lines; optional "theta i value" lines and a "beta value" line extend it to
// a circuit description.
struct IsingInstanceFile {
    IsingParams params;
    std::optional<MeasurementAngles> theta;
    std::optional<double> beta;
};

void write_ising(std::ostream& os, const IsingParams& params, const Provenance& prov,
                 const MeasurementAngles* theta = nullptr,
                 std::optional<double> beta = std::nullopt);
IsingInstanceFile read_ising(std::istream& is);

// "index,probability" rows.
void write_distribution_csv(std::ostream& os, const Distribution& dist,
                            const Provenance& prov);

// One bitstring per line.
void write_samples(std::ostream& os, const std::vector<std::uint64_t>& samples, int n,
                   const Provenance& prov);

// Fixed-format floating point for reproducible text output (%.17g).
std::string format_double(double v);

}  // namespace dadqc
