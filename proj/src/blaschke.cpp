#include "zoc/blaschke.hpp"

#include <cmath>

namespace zoc {

namespace {

Complex pow_int(Complex z, int n) {
    Complex acc{1.0};
    Complex base = z;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

BlaschkeApproximant to_blaschke(const FactorProduct& factors, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r must lie in (0,1)");
    double R = r * r;
    BlaschkeApproximant B;
    B.r = r;
    B.terms.reserve(factors.factors.size());

    // Constant: leading * prod_j (r^{-j} xi_j)^{nu(j)} r^{-j} eta_j,
    // accumulated in log space so r^{-2j} cannot overflow for large J.
    double log_mod = std::log(std::abs(factors.leading_constant));
    double arg = std::arg(factors.leading_constant);
    for (const CircleFactor& f : factors.factors) {
        if (!f.denom_R || std::abs(*f.denom_R - R) > 1e-12) throw MissingDenominator{};
        double rj = std::pow(r, f.j);
        B.terms.push_back({f.j, rj * std::conj(f.xi), rj * std::conj(f.eta), f.nu});
        log_mod -= static_cast<double>(f.j) * (f.nu + 1) * std::log(r);
        arg += f.nu * std::arg(f.xi) + std::arg(f.eta);
    }
    B.c_B = std::polar(std::exp(log_mod), arg);
    B.leading = factors.leading_constant;
    return B;
}

Complex eval_blaschke(const BlaschkeApproximant& B, Complex w) {
    // Balanced form: fold c_B into the factors via c_B = leading *
    // prod (1/alpha)^nu (1/beta), so each factor is O(1) for |w| < r and
    // nothing depends on the (possibly astronomically large) c_B.
    Complex acc = B.leading;
    for (const BlaschkeTerm& t : B.terms) {
        Complex wj = pow_int(w, t.j);
        Complex d1 = 1.0 + std::conj(t.alpha) * wj;
        Complex d2 = 1.0 + std::conj(t.beta) * wj;
        if (std::abs(d1) < 1e-14 || std::abs(d2) < 1e-14) throw PoleHit{};
        acc *= pow_int((1.0 + wj / t.alpha) / d1, t.nu) * (1.0 + wj / t.beta) / d2;
    }
    return acc;
}

std::vector<Complex> blaschke_zeros(const BlaschkeApproximant& B) {
    std::vector<Complex> zeros;
    for (const BlaschkeTerm& t : B.terms) {
        auto push_roots = [&](Complex a, int mult) {
            if (mult == 0) return;
            // w^j = -a, |a| = r^j: roots of modulus r.
            double mod = std::pow(std::abs(a), 1.0 / t.j);
            double phi = std::arg(-a);
            for (int k = 0; k < t.j; ++k) {
                Complex root = std::polar(mod, (phi + kTwoPi * k) / t.j);
                for (int rep = 0; rep < mult; ++rep) zeros.push_back(root);
            }
        };
        push_roots(t.alpha, t.nu);
        push_roots(t.beta, 1);
    }
    return zeros;
}

}  // namespace zoc
