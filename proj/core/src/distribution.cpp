#include "dadqc/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace dadqc {

double Distribution::sum() const {
    double acc = 0;
    for (const double v : p) acc += v;
    return acc;
}

void Distribution::validate(double tol) const {
    if (n < 1 || p.size() != (1ull << n))
        throw std::invalid_argument("Distribution: entry count != 2^n");
    for (const double v : p) {
        if (v < -tol) throw std::invalid_argument("Distribution: negative probability");
    }
    if (std::abs(sum() - 1.0) > tol)
        throw std::invalid_argument("Distribution: probabilities do not sum to 1");
}

double tv_distance(const Distribution& a, const Distribution& b) {
    if (a.n != b.n || a.p.size() != b.p.size())
        throw std::invalid_argument("tv_distance: size mismatch");
    double acc = 0;
    for (std::size_t i = 0; i < a.p.size(); ++i) acc += std::abs(a.p[i] - b.p[i]);
    return 0.5 * acc;
}

}  // namespace dadqc
