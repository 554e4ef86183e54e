#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zoc/series.hpp"

namespace zoc {

// Eigenphases of a Haar-random U(N) matrix.
struct EigenphaseSample {
    int N;
    std::vector<double> phases;  // in [0, 2*pi)
    uint64_t seed;
};

// Complex Ginibre matrix, QR with the diagonal phase correction, then
// eigenvalue arguments. Deterministic per seed.
EigenphaseSample sample_haar(int N, uint64_t seed);

// Lambda(z) = det(I - U* z) = prod_k (1 - e^{-i theta_k} z). Constant
// term exactly 1; all roots unimodular.
struct CharPoly {
    TruncatedSeries coeffs;
};

CharPoly char_poly(const EigenphaseSample& s);

// (Lambda'/Lambda, ..., Lambda^{(n)}/Lambda) at x, from the coefficient
// list.
std::vector<Complex> logderiv_tuple(const CharPoly& p, double x, int n);

struct ApproxProbability {
    double probability;
    double wilson_low;   // 95% Wilson interval
    double wilson_high;
    int successes;
    int trials;
};

// Fraction of Haar samples whose characteristic polynomial stays within
// epsilon of f on a 32x32 polar grid over |z| < r. Trial t uses seed
// seed + t.
ApproxProbability approx_probability(const std::function<Complex(Complex)>& f, double r,
                                     double epsilon, int N, int trials, uint64_t seed);

}  // namespace zoc
