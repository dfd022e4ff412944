#pragma once

#include <vector>

namespace dadqc {

// Output probabilities over 2^n bitstrings; bit i of the index is qubit i.
struct Distribution {
    int n = 0;
    std::vector<double> p;

    double sum() const;
    // Throws std::invalid_argument when entries are negative or the total
    // deviates from 1 by more than tol.
    void validate(double tol = 1e-10) const;
};

// Total variation distance (half the L1 distance); sizes must match.
double tv_distance(const Distribution& a, const Distribution& b);

}  // namespace dadqc
