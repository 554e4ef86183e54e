// Acceptance harness: one pass/fail line per criterion, nonzero exit if
// anything fails. Each check re-derives its expectations independently
// of the library internals (brute-force series oracles, closed forms,
// statistical tests).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "zoc/annulus.hpp"
#include "zoc/blaschke.hpp"
#include "zoc/matcher.hpp"
#include "zoc/mobius.hpp"
#include "zoc/rmt.hpp"
#include "zoc/roots.hpp"
#include "zoc/series.hpp"

using namespace zoc;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

int failures = 0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void report(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("criterion %2d %-28s %s  (%s)\n", idx, name, ok ? "PASS" : "FAIL",
                detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Complex random_in_disc(std::mt19937_64& g, double radius = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Complex z;
    do {
        z = Complex{u(g), u(g)};
    } while (std::abs(z) > 1.0);
    return z * radius;
}

Complex random_unit(std::mt19937_64& g) {
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    return std::polar(1.0, u(g));
}

// Brute-force oracle: expand the product as a power series, then take
// its logarithmic derivative with series arithmetic only.
TruncatedSeries expanded_logderiv(const FactorProduct& fp, int order) {
    TruncatedSeries prod = TruncatedSeries::constant(1.0, order);
    for (const CircleFactor& f : fp.factors) {
        auto factor_series = [&](Complex coef) {
            std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex{0.0});
            c[0] = 1.0;
            if (f.j <= order) c[static_cast<size_t>(f.j)] = coef;
            return TruncatedSeries(std::move(c));
        };
        for (int rep = 0; rep < f.nu; ++rep) prod = series_mul(prod, factor_series(f.xi));
        prod = series_mul(prod, factor_series(f.eta));
        if (f.denom_R) {
            double Rj = std::pow(*f.denom_R, f.j);
            for (int rep = 0; rep < f.nu; ++rep)
                prod = series_mul(prod, series_reciprocal(factor_series(f.xi * Rj)));
            prod = series_mul(prod, series_reciprocal(factor_series(f.eta * Rj)));
        }
    }
    return log_derivative(prod);
}

FactorProduct random_factor_set(std::mt19937_64& g, int J, std::optional<double> R) {
    FactorProduct fp;
    for (int j = 1; j <= J; ++j) {
        int nu = 1 + static_cast<int>(g() % 3);
        fp.factors.push_back({j, random_unit(g), random_unit(g), nu, R});
    }
    return fp;
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 g(101);
    const int J = 32;
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Complex> a(J);
        double scale = 1.0;
        for (int k = 0; k < J; ++k) {
            a[static_cast<size_t>(k)] = random_in_disc(g, scale);
            scale *= 2.0;
        }
        TruncatedSeries target(a);
        for (std::optional<double> R : {std::optional<double>{}, std::optional<double>{0.25}}) {
            FactorProduct fp = match_factors(target, J, R);
            TruncatedSeries got = logderiv_of_factors(fp, J - 1);
            for (int k = 0; k < J; ++k)
                worst = std::max(worst, std::abs(got[k] - target[k]) /
                                            std::max(1.0, std::abs(target[k])));
        }
    }
    double dt = seconds_since(t0);
    report(1, "coefficient matching", worst < 1e-9 && dt < 1.0,
           "rel err " + fmt(worst) + ", " + fmt(dt) + " s");
}

void criterion_2() {
    std::mt19937_64 g(102);
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        int J = 1 + static_cast<int>(g() % 12);
        std::optional<double> R = (rep % 2) ? std::optional<double>{0.3} : std::nullopt;
        std::vector<Complex> a(static_cast<size_t>(J));
        for (auto& c : a) c = random_in_disc(g, 2.0);
        FactorProduct fp = match_factors(TruncatedSeries(std::move(a)), J, R);
        TruncatedSeries lib = logderiv_of_factors(fp, 2 * J);
        TruncatedSeries oracle = expanded_logderiv(fp, 2 * J + 1);
        for (int k = 0; k <= 2 * J; ++k) worst = std::max(worst, std::abs(lib[k] - oracle[k]));
    }
    report(2, "symbolic oracle", worst < 1e-10, "max dev " + fmt(worst));
}

void criterion_3() {
    std::mt19937_64 g(103);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        int J = 1 + static_cast<int>(g() % 10);
        double R = 0.05 + 0.9 * static_cast<double>(g() % 1000) / 1000.0;
        FactorProduct rational = random_factor_set(g, J, R);
        FactorProduct plain = rational;
        for (auto& f : plain.factors) f.denom_R = std::nullopt;
        TruncatedSeries c = logderiv_of_factors(rational, 2 * J);
        TruncatedSeries b = logderiv_of_factors(plain, 2 * J);
        for (int k = 0; k <= 2 * J; ++k)
            worst = std::max(worst, std::abs(c[k] - (1.0 - std::pow(R, k + 1)) * b[k]));
    }
    report(3, "c_k identity", worst < 1e-12, "max dev " + fmt(worst));
}

void criterion_4() {
    std::mt19937_64 g(104);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    bool census_ok = true;
    double worst_residual = 0.0;
    int outside = 0, inside = 0;
    while (outside < 1000 || inside < 1000) {
        double R0 = 0.2 + u(g);
        Complex w = random_in_disc(g, 6.0 * R0);
        if (std::abs(w) < 1e-6 * R0) continue;
        double d = std::abs(w) / R0;
        // Skip integer-modulus boundaries (tangency changes the census).
        if (std::abs(d - std::round(d)) < 1e-3) continue;
        int total = total_representations(w, R0);
        if (d > 1.0 && outside < 1000) {
            ++outside;
            if (total != 4) census_ok = false;
        } else if (d <= 1.0 && inside < 1000) {
            ++inside;
            if (total != 2) census_ok = false;
        }
        AnnulusTriple t = decompose(w, R0);
        double res = std::abs(static_cast<double>(t.m) * t.xi + t.eta - w);
        worst_residual = std::max(worst_residual, res / R0);
    }
    report(4, "annulus census", census_ok && worst_residual < 1e-12,
           std::string(census_ok ? "census ok" : "census wrong") + ", residual " +
               fmt(worst_residual));
}

void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    DiscSpec disc = to_disc_spec(Complex{0.0}, 0.5);
    // delta = 0.1 relative: measured region |w| <= 0.45.
    BlaschkeOnDiscResult res = approx_blaschke_on_disc(
        [](Complex w) { return std::exp(w); }, disc, 0.1 * 0.5, 1e-2);
    double worst_zero = 0.0;
    for (Complex z : res.zeros()) worst_zero = std::max(worst_zero, std::abs(std::abs(z) - 0.5));
    double sup = 0.0;
    for (int ir = 1; ir <= 15; ++ir)
        for (int ia = 0; ia < 40; ++ia) {
            Complex w = std::polar(0.45 * ir / 15.0, kTwoPi * ia / 40.0);
            sup = std::max(sup, std::abs(std::exp(w) - res.eval(w)));
        }
    double dt = seconds_since(t0);
    report(5, "blaschke end-to-end",
           worst_zero < 1e-9 && sup < 1e-2 && res.J <= 60 && dt < 5.0,
           "J=" + std::to_string(res.J) + ", sup " + fmt(sup) + ", zero dev " +
               fmt(worst_zero) + ", " + fmt(dt) + " s");
}

double exp_sup_error(int J, double radius) {
    TruncatedSeries target = TruncatedSeries::constant(1.0, J - 1);
    FactorProduct fp = match_factors(target, J, std::nullopt);
    fp.leading_constant = 1.0;
    double sup = 0.0;
    for (int ir = 1; ir <= 12; ++ir)
        for (int ia = 0; ia < 32; ++ia) {
            Complex z = std::polar(radius * ir / 12.0, kTwoPi * ia / 32.0);
            sup = std::max(sup, std::abs(std::exp(z) - evaluate_product(fp, z)));
        }
    return sup;
}

void criterion_6() {
    double e12 = exp_sup_error(12, 0.4);
    double e24 = exp_sup_error(24, 0.4);
    bool tails_ok = true;
    double kappa = fit_growth_bound(TruncatedSeries::constant(1.0, 39), 1.0).kappa;
    double prev = tail_bound(10, kappa, 0.4);
    for (int J = 11; J <= 40; ++J) {
        double cur = tail_bound(J, kappa, 0.4);
        if (!(cur < prev)) tails_ok = false;
        prev = cur;
    }
    report(6, "convergence monotonicity", e24 < e12 && tails_ok,
           "err(12)=" + fmt(e12) + ", err(24)=" + fmt(e24) +
               (tails_ok ? ", tail decreasing" : ", tail NOT decreasing"));
}

void criterion_7() {
    TruncatedSeries target = TruncatedSeries::constant(1.0, 29);
    GrowthBound gb = fit_growth_bound(target, 1.5, 0.05);
    double c15 = verify_nu_bound(match_factors(target, 15), gb).Cprime;
    double c30 = verify_nu_bound(match_factors(target, 30), gb).Cprime;
    report(7, "nu growth bound", c30 <= 1.05 * c15,
           "C'(15)=" + fmt(c15) + ", C'(30)=" + fmt(c30));
}

void criterion_8() {
    std::mt19937_64 g(108);
    double round_trip = 0.0, boundary = 0.0, invariance = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        MobiusMap T{random_in_disc(g, 0.95), random_unit(g)};
        Complex z = random_in_disc(g, 0.999);
        round_trip = std::max(round_trip, std::abs(T.apply_inverse(T.apply(z)) - z));
        boundary = std::max(boundary, std::abs(std::abs(T.apply(random_unit(g))) - 1.0));
        Complex a = random_in_disc(g, 0.95), b = random_in_disc(g, 0.95);
        invariance = std::max(invariance,
                              std::abs(pseudohyperbolic_distance(T.apply(a), T.apply(b)) -
                                       pseudohyperbolic_distance(a, b)));
    }
    DiscSpec d = to_disc_spec(Complex{0.25, -0.35}, 0.18);
    MobiusMap T = d.transport();
    double disc_boundary = 0.0;
    for (int k = 0; k < 100; ++k) {
        Complex z = std::polar(d.pseudo_r, kTwoPi * k / 100.0);
        disc_boundary =
            std::max(disc_boundary, std::abs(std::abs(T.apply(z) - d.center) - d.radius));
    }
    report(8, "mobius suite",
           round_trip < 1e-12 && boundary < 1e-12 && invariance < 1e-10 &&
               disc_boundary < 1e-9,
           "round " + fmt(round_trip) + ", bound " + fmt(boundary) +
               ", inv " + fmt(invariance) + ", disc " +
               fmt(disc_boundary));
}

void criterion_9() {
    std::mt19937_64 g(109);
    std::uniform_real_distribution<double> u(1.2, 3.0);
    double worst_root = 0.0;
    bool decay_ok = true;
    for (int rep = 0; rep < 20; ++rep) {
        int deg = 1 + static_cast<int>(g() % 8);
        // Build p from roots strictly outside the closed disc.
        std::vector<Complex> p{Complex{1.0}};
        for (int i = 0; i < deg; ++i) {
            Complex root = std::polar(u(g), std::arg(random_unit(g)));
            std::vector<Complex> next(p.size() + 1, Complex{0.0});
            for (size_t n = 0; n < p.size(); ++n) {
                next[n] += -root * p[n];
                next[n + 1] += p[n];
            }
            p = std::move(next);
        }
        int k = 1 + static_cast<int>(g() % 30);
        for (Complex r : poly_roots(rubinstein_approx(p, k)))
            worst_root = std::max(worst_root, std::abs(std::abs(r) - 1.0));

        auto sup_diff = [&](int kk) {
            std::vector<Complex> q = rubinstein_approx(p, kk);
            double s = 0.0;
            for (int a = 0; a < 48; ++a) {
                Complex z = std::polar(0.9, kTwoPi * a / 48.0);
                Complex pv{0.0}, qv{0.0};
                for (size_t i = p.size(); i-- > 0;) pv = pv * z + p[i];
                for (size_t i = q.size(); i-- > 0;) qv = qv * z + q[i];
                s = std::max(s, std::abs(qv - pv));
            }
            return s;
        };
        if (!(sup_diff(30) < sup_diff(15))) decay_ok = false;
    }
    report(9, "rubinstein oracle", worst_root < 1e-9 && decay_ok,
           "root dev " + fmt(worst_root) +
               (decay_ok ? ", decay ok" : ", decay FAILED"));
}

void criterion_10() {
    auto t0 = std::chrono::steady_clock::now();

    bool lambda0_ok = true, roots_ok = true;
    for (uint64_t seed = 1; seed <= 5; ++seed)
        for (int N : {3, 8, 12}) {
            CharPoly p = char_poly(sample_haar(N, seed));
            if (std::abs(p.coeffs[0] - 1.0) != 0.0) lambda0_ok = false;
            for (Complex r : poly_roots(p.coeffs.coeffs()))
                if (std::abs(std::abs(r) - 1.0) > 1e-10) roots_ok = false;
        }

    // Pooled eigenphase KS test, 10^4 samples at N = 6, 1% level.
    std::vector<double> pool;
    pool.reserve(60000);
    for (int t = 0; t < 10000; ++t)
        for (double x : sample_haar(6, 5000 + static_cast<uint64_t>(t)).phases)
            pool.push_back(x / kTwoPi);
    std::sort(pool.begin(), pool.end());
    double n = static_cast<double>(pool.size());
    double ks = 0.0;
    for (size_t i = 0; i < pool.size(); ++i) {
        double lo = static_cast<double>(i) / n, hi = static_cast<double>(i + 1) / n;
        ks = std::max({ks, pool[i] - lo, hi - pool[i]});
    }
    bool ks_ok = ks < 1.63 / std::sqrt(n);

    auto one = [](Complex) { return Complex{1.0}; };
    bool monotone = true;
    int prev = -1;
    for (double eps : {0.3, 0.6, 1.2, 2.4}) {
        ApproxProbability pr = approx_probability(one, 0.5, eps, 3, 200, 300);
        if (pr.successes < prev) monotone = false;
        prev = pr.successes;
    }

    double dt = seconds_since(t0);
    report(10, "rmt suite", lambda0_ok && roots_ok && ks_ok && monotone && dt < 60.0,
           std::string("KS ") + fmt(ks) + (monotone ? ", monotone" : ", NOT monotone") +
               ", " + fmt(dt) + " s");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
