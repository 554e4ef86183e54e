#pragma once

#include "zoc/matcher.hpp"

namespace zoc {

struct MissingDenominator : std::invalid_argument {
    MissingDenominator()
        : std::invalid_argument("factors must carry denominator ratio R = r^2") {}
};

// One index-j Blaschke block ((alpha + w^j)/(1 + conj(alpha) w^j))^nu
// * (beta + w^j)/(1 + conj(beta) w^j), with |alpha| = |beta| = r^j.
struct BlaschkeTerm {
    int j;
    Complex alpha;
    Complex beta;
    int nu;
};

// c_B times a finite Blaschke product with all zeros on |w| = r.
// leading is the source product's constant; it equals c_B times
// prod_j alpha_j^{nu(j)} beta_j and is kept separately because c_B and
// that product overflow/underflow in opposite directions as J grows.
struct BlaschkeApproximant {
    Complex c_B;
    std::vector<BlaschkeTerm> terms;
    double r;
    Complex leading{1.0};
};

// Rearrange a rational product built with denom_R = r^2 (against the
// log-derivative of z -> g(r z)) into the Blaschke form in w = r z:
// alpha_j = r^j conj(xi_j), beta_j = r^j conj(eta_j), with the constant
// picking up (r^{-j} xi_j)^{nu(j)} * r^{-j} eta_j per index.
BlaschkeApproximant to_blaschke(const FactorProduct& factors, double r);

Complex eval_blaschke(const BlaschkeApproximant& B, Complex w);

// j-th roots of -alpha_j (multiplicity nu(j)) and -beta_j (multiplicity 1);
// all of modulus r.
std::vector<Complex> blaschke_zeros(const BlaschkeApproximant& B);

}  // namespace zoc
