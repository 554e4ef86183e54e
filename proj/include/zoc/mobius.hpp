#pragma once

#include <functional>

#include "zoc/blaschke.hpp"

namespace zoc {

struct OutsideDisc : std::domain_error {
    OutsideDisc() : std::domain_error("point lies outside the open unit disc") {}
};
struct DiscNotInUnitDisc : std::invalid_argument {
    DiscNotInUnitDisc()
        : std::invalid_argument("closure of the disc must lie in the open unit disc") {}
};
struct VanishingOnDisc : std::domain_error {
    VanishingOnDisc() : std::domain_error("target function vanishes on the sampled disc") {}
};
struct ZeroOutsideDisc : std::invalid_argument {
    ZeroOutsideDisc() : std::invalid_argument("prescribed zero lies outside the open unit disc") {}
};
struct RootInsideDisc : std::invalid_argument {
    RootInsideDisc()
        : std::invalid_argument("polynomial has a root inside the closed unit disc") {}
};

// rho(z, w) = |(z - w)/(1 - conj(w) z)|. Requires |z| < 1, |w| < 1.
double pseudohyperbolic_distance(Complex z, Complex w);

// Disc automorphism z -> rotation * (z + a)/(1 + conj(a) z).
struct MobiusMap {
    Complex a{0.0};
    Complex rotation{1.0};

    Complex apply(Complex z) const;
    Complex apply_inverse(Complex w) const;
};

// Euclidean disc D(center, radius) in pseudohyperbolic form: the map
// z -> rotation * alpha_a(z) carries D(0, pseudo_r) onto it.
struct DiscSpec {
    Complex center;
    double radius;
    Complex pseudo_a;
    double pseudo_r;
    Complex rotation;

    MobiusMap transport() const { return {pseudo_a, rotation}; }
};

DiscSpec to_disc_spec(Complex center, double radius);

// Taylor coefficients of an analytic function from samples on the
// circle |z| = sample_radius (trapezoid rule for the Cauchy integral).
TruncatedSeries taylor_from_samples(const std::function<Complex(Complex)>& fn,
                                    double sample_radius, int order,
                                    int num_samples = 0);

using AnalyticFn = std::function<Complex(Complex)>;

struct PolyOnDiscResult {
    FactorProduct q;       // polynomial variant; zeros on the unit circle
    int J_stage1;
    int J_stage2;
    double grid_error;     // sup |f - q| over the Euclidean disc grid
};

// Two-stage construction: match f pulled back to the
// centered disc, push the polynomial forward, and re-approximate the
// resulting rational function by a second polynomial with zeros on the
// unit circle.
PolyOnDiscResult approx_poly_on_disc(const AnalyticFn& f, const DiscSpec& disc, double epsilon);

struct BlaschkeOnDiscResult {
    BlaschkeApproximant B;  // zeros on |z| = pseudo_r, in pullback coordinates
    MobiusMap map;          // composite approximant is w -> eval_blaschke(B, map^{-1}(w))
    int J;
    double grid_error;

    Complex eval(Complex w) const { return eval_blaschke(B, map.apply_inverse(w)); }
    std::vector<Complex> zeros() const;  // on |w - center| = radius
};

BlaschkeOnDiscResult approx_blaschke_on_disc(const AnalyticFn& f, const DiscSpec& disc,
                                             double delta, double epsilon);

// Factorization f ~ c0 * C1 * (C2 / c0): C1 carries the prescribed
// zeros exactly, c0 is the constant of the C2 approximant. eval keeps
// c0 folded into C2 so nothing depends on its (possibly huge) modulus.
struct PrescribedZeroResult {
    Complex c0;
    std::vector<Complex> prescribed;   // zeros of the exact Blaschke factor C1
    BlaschkeOnDiscResult C2;

    Complex eval_C1(Complex z) const;
    Complex eval(Complex z) const { return eval_C1(z) * C2.eval(z); }
};

PrescribedZeroResult factor_prescribed_zeros(const std::vector<Complex>& zeros,
                                             const AnalyticFn& remainder, const DiscSpec& disc,
                                             double delta, double epsilon);

// p + z^k p* with p*(z) = z^m conj(p(1/conj(z))). Requires p free of
// roots in the closed unit disc; all roots of the result are unimodular.
std::vector<Complex> rubinstein_approx(const std::vector<Complex>& p, int k);

}  // namespace zoc
