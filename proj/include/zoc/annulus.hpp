#pragma once

#include <map>

#include "zoc/series.hpp"

namespace zoc {

// One representation w = m*xi + eta with |xi| = |eta| = R0 and m a
// positive integer.
struct AnnulusTriple {
    int m;
    Complex xi;
    Complex eta;
};

// Deterministic decomposition. m is the smallest positive integer with
// (m-1)*R0 <= |w| <= (m+1)*R0; of the two intersection points of
// |zeta| = m*R0 with |w - zeta| = R0, m*xi is the one with the larger
// imaginary part (ties: larger real part). w = 0 maps to (1, R0, -R0).
AnnulusTriple decompose(Complex w, double R0);

// For each admissible m, the number of distinct (xi, eta) pairs
// (tangencies count once). Requires w != 0.
std::map<int, int> count_representations(Complex w, double R0);

inline int total_representations(Complex w, double R0) {
    int total = 0;
    for (auto& [m, c] : count_representations(w, R0)) total += c;
    return total;
}

}  // namespace zoc
