#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "zoc/series.hpp"

namespace zoc {

struct InvalidR : std::invalid_argument {
    InvalidR() : std::invalid_argument("denominator ratio R must lie in [0,1)") {}
};
struct DivergentTail : std::domain_error {
    DivergentTail() : std::domain_error("tail bound requires |z| < 1/kappa") {}
};
struct PoleHit : std::domain_error {
    PoleHit() : std::domain_error("evaluation point hits a denominator zero") {}
};

// Index-j factor (1 + xi z^j)^nu (1 + eta z^j), optionally divided by
// (1 + xi R^j z^j)^nu (1 + eta R^j z^j) when denom_R is set.
struct CircleFactor {
    int j;
    Complex xi;
    Complex eta;
    int nu;
    std::optional<double> denom_R;
};

// leading_constant * prod_{j=1..J} of the factors above.
struct FactorProduct {
    std::vector<CircleFactor> factors;  // sorted by j, one per index
    Complex leading_constant{1.0};

    int truncation_index() const { return static_cast<int>(factors.size()); }
};

// Taylor coefficients b_0..b_K of the product's logarithmic derivative,
// via the divisor sum
//   b_k = -sum_{j | k+1, j <= J} (-1)^{(k+1)/j} j (nu(j) xi_j^{(k+1)/j} + eta_j^{(k+1)/j}),
// scaled by (1 - R^{k+1}) when the factors carry a denominator ratio.
TruncatedSeries logderiv_of_factors(const FactorProduct& factors, int K);

// Choose xi_j, eta_j, nu(j) for j = 1..J so the log-derivative
// coefficients b_0..b_{J-1} match the target (coefficients of f'/f).
// With denom_R set, matches c_k = (1-R^{k+1}) b_k instead.
FactorProduct match_factors(const TruncatedSeries& target, int J,
                            std::optional<double> denom_R = std::nullopt);

// Direct coefficient matching: divide out one factor per stage so the
// partial product reproduces f's Taylor coefficients through order J.
FactorProduct formal_match_direct(const TruncatedSeries& f, int J,
                                  std::optional<double> denom_R = std::nullopt);

// Smallest C' with n*nu(n) <= C' * kappa^n over the stored factors.
struct NuBoundReport {
    double Cprime;
    bool holds;
};
NuBoundReport verify_nu_bound(const FactorProduct& factors, const GrowthBound& bound);

// c_tail * J^2 * kappa^J * z_abs^J / (1 - z_abs). Throws DivergentTail
// when z_abs >= 1/kappa.
double tail_bound(int J, double kappa, double z_abs, double c_tail = 1.0);

Complex evaluate_product(const FactorProduct& factors, Complex z);

// Leading constant for the approximant: exp(log f(0)) = f(0).
Complex approximant_constant(Complex f0);

// Polynomial coefficients of leading_constant * prod (1+xi z^j)^nu (1+eta z^j).
// Only meaningful for the polynomial variant (denominators ignored).
std::vector<Complex> expand_polynomial(const FactorProduct& factors);

// Zeros of the polynomial variant: j-th roots of -conj(xi_j) with
// multiplicity nu(j), and of -conj(eta_j) with multiplicity 1. All on
// the unit circle.
std::vector<Complex> product_zeros(const FactorProduct& factors);

// Raise J until tail_bound < eps/2 and the measured sup error of
// |target_fn - evaluate_product| on a polar grid over |z| <= grid_radius
// drops below eps/2. Throws BudgetExceeded past j_max.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("J budget exhausted before reaching the requested accuracy") {}
};

struct MatchToEpsResult {
    FactorProduct product;
    int J;
    double grid_error;
    double tail;
};

MatchToEpsResult match_to_epsilon(const TruncatedSeries& target_logderiv, Complex f0,
                                  const std::function<Complex(Complex)>& target_fn,
                                  double grid_radius, double eps,
                                  std::optional<double> denom_R = std::nullopt,
                                  double growth_r = 1.0, int j_max = 200);

}  // namespace zoc
