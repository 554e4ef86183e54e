#include "zoc/matcher.hpp"

#include <cmath>
#include <limits>

#include "zoc/annulus.hpp"

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

std::optional<double> product_denom_R(const FactorProduct& fp) {
    if (fp.factors.empty()) return std::nullopt;
    return fp.factors.front().denom_R;
}

// -sum over j | k+1 of (-1)^{(k+1)/j} j (nu xi^{(k+1)/j} + eta^{(k+1)/j}).
Complex divisor_sum_coeff(const FactorProduct& fp, int k, int j_limit) {
    Complex b{0.0};
    int n = k + 1;
    for (const CircleFactor& f : fp.factors) {
        if (f.j > j_limit || n % f.j != 0) continue;
        int q = n / f.j;
        double sgn = (q % 2 == 0) ? 1.0 : -1.0;
        b -= sgn * static_cast<double>(f.j) *
             (static_cast<double>(f.nu) * pow_int(f.xi, q) + pow_int(f.eta, q));
    }
    return b;
}

}  // namespace

TruncatedSeries logderiv_of_factors(const FactorProduct& fp, int K) {
    std::vector<Complex> out(static_cast<size_t>(K) + 1, Complex{0.0});
    auto R = product_denom_R(fp);
    for (int k = 0; k <= K; ++k) {
        Complex b = divisor_sum_coeff(fp, k, std::numeric_limits<int>::max());
        if (R) b *= 1.0 - std::pow(*R, k + 1);
        out[static_cast<size_t>(k)] = b;
    }
    return TruncatedSeries(std::move(out));
}

FactorProduct match_factors(const TruncatedSeries& target, int J,
                            std::optional<double> denom_R) {
    if (denom_R && (*denom_R < 0.0 || *denom_R >= 1.0)) throw InvalidR{};
    if (J < 1) throw std::invalid_argument("J must be positive");
    if (target.order() < J - 1)
        throw std::invalid_argument("target must carry coefficients a_0..a_{J-1}");

    FactorProduct fp;
    fp.factors.reserve(static_cast<size_t>(J));
    for (int K = 0; K < J; ++K) {
        Complex aK = target[K];
        if (denom_R) aK /= 1.0 - std::pow(*denom_R, K + 1);
        // Contribution of the already-chosen proper divisors of K+1.
        Complex partial = divisor_sum_coeff(fp, K, K);
        Complex w = (aK - partial) / static_cast<double>(K + 1);
        AnnulusTriple t = decompose(w, 1.0);
        fp.factors.push_back({K + 1, t.xi, t.eta, t.m, denom_R});
    }
    return fp;
}

FactorProduct formal_match_direct(const TruncatedSeries& f, int J,
                                  std::optional<double> denom_R) {
    if (denom_R && (*denom_R < 0.0 || *denom_R >= 1.0)) throw InvalidR{};
    if (std::abs(f[0]) == 0.0) throw ZeroConstantTerm{};
    if (f.order() < J)
        throw std::invalid_argument("f must carry coefficients through order J");

    FactorProduct fp;
    fp.leading_constant = f[0];
    // remaining = f / (a_0 * partial product); stage j reads off its z^j term.
    TruncatedSeries remaining = series_mul(f, TruncatedSeries::constant(1.0 / f[0], f.order()));
    for (int j = 1; j <= J; ++j) {
        double R0 = denom_R ? 1.0 - std::pow(*denom_R, j) : 1.0;
        AnnulusTriple t = decompose(remaining[j], R0);
        Complex xi = t.xi / R0;
        Complex eta = t.eta / R0;
        fp.factors.push_back({j, xi, eta, t.m, denom_R});

        // Divide out this stage's factor pair.
        auto expand_pair = [&](Complex cx, Complex ce) {
            std::vector<Complex> p(static_cast<size_t>(f.order()) + 1, Complex{0.0});
            p[0] = 1.0;
            for (int rep = 0; rep < t.m + 1; ++rep) {
                Complex c = rep < t.m ? cx : ce;
                for (int k = f.order(); k >= j; --k)
                    p[static_cast<size_t>(k)] += c * p[static_cast<size_t>(k - j)];
            }
            return TruncatedSeries(std::move(p));
        };
        TruncatedSeries Pj = expand_pair(xi, eta);
        if (denom_R) {
            double Rj = std::pow(*denom_R, j);
            Pj = series_mul(Pj, series_reciprocal(expand_pair(xi * Rj, eta * Rj)));
        }
        remaining = series_mul(remaining, series_reciprocal(Pj));
    }
    return fp;
}

NuBoundReport verify_nu_bound(const FactorProduct& fp, const GrowthBound& bound) {
    double Cprime = 0.0;
    for (const CircleFactor& f : fp.factors) {
        double lhs = static_cast<double>(f.j) * f.nu;
        Cprime = std::max(Cprime, lhs / std::pow(bound.kappa, f.j));
    }
    return {Cprime, std::isfinite(Cprime)};
}

double tail_bound(int J, double kappa, double z_abs, double c_tail) {
    if (z_abs == 0.0) return 0.0;
    if (z_abs >= 1.0 / kappa) throw DivergentTail{};
    double dJ = static_cast<double>(J);
    return c_tail * dJ * dJ * std::pow(kappa * z_abs, dJ) / (1.0 - z_abs);
}

Complex evaluate_product(const FactorProduct& fp, Complex z) {
    Complex acc = fp.leading_constant;
    for (const CircleFactor& f : fp.factors) {
        Complex zj = pow_int(z, f.j);
        acc *= pow_int(1.0 + f.xi * zj, f.nu) * (1.0 + f.eta * zj);
        if (f.denom_R) {
            double Rj = std::pow(*f.denom_R, f.j);
            Complex d1 = 1.0 + f.xi * Rj * zj;
            Complex d2 = 1.0 + f.eta * Rj * zj;
            if (std::abs(d1) < 1e-14 || std::abs(d2) < 1e-14) throw PoleHit{};
            acc /= pow_int(d1, f.nu) * d2;
        }
    }
    return acc;
}

Complex approximant_constant(Complex f0) {
    if (std::abs(f0) == 0.0) throw ZeroConstantTerm{};
    return f0;
}

std::vector<Complex> expand_polynomial(const FactorProduct& fp) {
    int degree = 0;
    for (const CircleFactor& f : fp.factors) degree += f.j * (f.nu + 1);
    std::vector<Complex> out(static_cast<size_t>(degree) + 1, Complex{0.0});
    out[0] = fp.leading_constant;
    int top = 0;
    for (const CircleFactor& f : fp.factors) {
        for (int rep = 0; rep < f.nu + 1; ++rep) {
            Complex c = rep < f.nu ? f.xi : f.eta;
            top += f.j;
            for (int k = top; k >= f.j; --k)
                out[static_cast<size_t>(k)] += c * out[static_cast<size_t>(k - f.j)];
        }
    }
    return out;
}

std::vector<Complex> product_zeros(const FactorProduct& fp) {
    std::vector<Complex> zeros;
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    for (const CircleFactor& f : fp.factors) {
        auto push_roots = [&](Complex coef, int mult) {
            // Roots of 1 + coef z^j: z^j = -1/coef = -conj(coef) for |coef| = 1.
            double phi = std::arg(-std::conj(coef));
            for (int k = 0; k < f.j; ++k) {
                Complex root = std::polar(1.0, (phi + kTwoPi * k) / f.j);
                for (int rep = 0; rep < mult; ++rep) zeros.push_back(root);
            }
        };
        if (f.nu > 0) push_roots(f.xi, f.nu);
        push_roots(f.eta, 1);
    }
    return zeros;
}

MatchToEpsResult match_to_epsilon(const TruncatedSeries& target_logderiv, Complex f0,
                                  const std::function<Complex(Complex)>& target_fn,
                                  double grid_radius, double eps,
                                  std::optional<double> denom_R,
                                  double growth_r, int j_max) {
    GrowthBound gb = fit_growth_bound(target_logderiv, growth_r);
    int j_cap = std::min(j_max, target_logderiv.order() + 1);
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    for (int J = 4; J <= j_cap; J += 4) {
        FactorProduct fp = match_factors(target_logderiv, J, denom_R);
        fp.leading_constant = approximant_constant(f0);
        double err = 0.0;
        for (int ir = 1; ir <= 12; ++ir) {
            double rr = grid_radius * ir / 12.0;
            for (int ia = 0; ia < 32; ++ia) {
                Complex z = std::polar(rr, kTwoPi * ia / 32.0);
                double e = std::abs(target_fn(z) - evaluate_product(fp, z));
                if (!std::isfinite(e)) e = std::numeric_limits<double>::infinity();
                err = std::max(err, e);
            }
        }
        if (err < eps / 2.0) {
            double tail = std::numeric_limits<double>::infinity();
            if (grid_radius < 1.0 / gb.kappa)
                tail = tail_bound(J, gb.kappa, grid_radius, verify_nu_bound(fp, gb).Cprime);
            return {std::move(fp), J, err, tail};
        }
    }
    throw BudgetExceeded{};
}

}  // namespace zoc
