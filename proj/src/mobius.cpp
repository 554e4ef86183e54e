#include "zoc/mobius.hpp"

#include <cmath>
#include <limits>

#include "zoc/roots.hpp"

namespace zoc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_nonvanishing(const AnalyticFn& f, Complex center, double radius) {
    // Empirical stand-in for the analytic hypothesis: the center plus a
    // 64x64 polar grid over the disc inflated by 5%.
    if (std::abs(f(center)) < 1e-9) throw VanishingOnDisc{};
    for (int ir = 0; ir < 64; ++ir) {
        double rr = 1.05 * radius * (ir + 1) / 64.0;
        for (int ia = 0; ia < 64; ++ia) {
            Complex z = center + std::polar(rr, kTwoPi * ia / 64.0);
            if (std::abs(f(z)) < 1e-9) throw VanishingOnDisc{};
        }
    }
}

}  // namespace

double pseudohyperbolic_distance(Complex z, Complex w) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0) throw OutsideDisc{};
    return std::abs((z - w) / (1.0 - std::conj(w) * z));
}

Complex MobiusMap::apply(Complex z) const {
    return rotation * (z + a) / (1.0 + std::conj(a) * z);
}

Complex MobiusMap::apply_inverse(Complex w) const {
    Complex u = w / rotation;
    return (u - a) / (1.0 - std::conj(a) * u);
}

DiscSpec to_disc_spec(Complex center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
    if (std::abs(center) + radius >= 1.0) throw DiscNotInUnitDisc{};

    DiscSpec d;
    d.center = center;
    d.radius = radius;
    double c = std::abs(center);
    if (c < 1e-14) {
        d.pseudo_a = 0.0;
        d.pseudo_r = radius;
        d.rotation = 1.0;
        return d;
    }
    d.rotation = center / c;
    double x = c - radius;
    double y = c + radius;
    double R = (1.0 + x * y) / (x + y);
    double a = R - std::sqrt(R * R - 1.0);
    d.pseudo_a = a;
    d.pseudo_r = (y - a) / (1.0 - a * y);

    MobiusMap T = d.transport();
    for (int k = 0; k < 8; ++k) {
        Complex z = std::polar(d.pseudo_r, kTwoPi * k / 8.0);
        if (std::abs(std::abs(T.apply(z) - center) - radius) > 1e-9)
            throw std::logic_error("pseudohyperbolic conversion failed its boundary check");
    }
    return d;
}

TruncatedSeries taylor_from_samples(const AnalyticFn& fn, double sample_radius, int order,
                                    int num_samples) {
    int M = num_samples > 0 ? num_samples : std::max(256, 4 * (order + 1));
    std::vector<Complex> samples(static_cast<size_t>(M));
    for (int m = 0; m < M; ++m)
        samples[static_cast<size_t>(m)] = fn(std::polar(sample_radius, kTwoPi * m / M));

    std::vector<Complex> coeffs(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        Complex acc{0.0};
        for (int m = 0; m < M; ++m)
            acc += samples[static_cast<size_t>(m)] *
                   std::polar(1.0, -kTwoPi * static_cast<double>(m) * n / M);
        coeffs[static_cast<size_t>(n)] = acc / (static_cast<double>(M) * std::pow(sample_radius, n));
    }
    return TruncatedSeries(std::move(coeffs));
}

PolyOnDiscResult approx_poly_on_disc(const AnalyticFn& f, const DiscSpec& disc, double epsilon) {
    check_nonvanishing(f, disc.center, disc.radius);
    MobiusMap T = disc.transport();

    constexpr int kMaxOrder = 200;
    AnalyticFn F1 = [&](Complex z) { return f(T.apply(z)); };

    // Stage 1: polynomial p matching f pulled back to D(0, pseudo_r).
    TruncatedSeries s1 = taylor_from_samples(F1, disc.pseudo_r, kMaxOrder + 1);
    MatchToEpsResult stage1 =
        match_to_epsilon(log_derivative(s1), F1(Complex{0.0}), F1, 0.99 * disc.pseudo_r,
                         epsilon, std::nullopt, disc.pseudo_r, kMaxOrder);

    // Stage 2: p composed with the inverse map is rational with zeros
    // still on the unit circle; re-approximate it by a polynomial on a
    // centered disc D(0, s) covering the target disc.
    FactorProduct p = stage1.product;
    AnalyticFn F2 = [&, p](Complex z) { return evaluate_product(p, T.apply_inverse(z)); };
    double s = std::abs(disc.center) + disc.radius + 0.02;
    if (s >= 1.0) s = (std::abs(disc.center) + disc.radius + 1.0) / 2.0;
    double sample_r = std::min(0.99, (s + 1.0) / 2.0);

    TruncatedSeries s2 = taylor_from_samples(F2, sample_r, kMaxOrder + 1);
    MatchToEpsResult stage2 =
        match_to_epsilon(log_derivative(s2), F2(Complex{0.0}), F2, s - 0.02, epsilon,
                         std::nullopt, s, kMaxOrder);

    PolyOnDiscResult out;
    out.q = std::move(stage2.product);
    out.J_stage1 = stage1.J;
    out.J_stage2 = stage2.J;

    double err = 0.0;
    for (int ir = 1; ir <= 20; ++ir) {
        double rr = 0.99 * disc.radius * ir / 20.0;
        for (int ia = 0; ia < 41; ++ia) {
            Complex z = disc.center + std::polar(rr, kTwoPi * ia / 41.0);
            err = std::max(err, std::abs(f(z) - evaluate_product(out.q, z)));
        }
    }
    out.grid_error = err;
    return out;
}

std::vector<Complex> BlaschkeOnDiscResult::zeros() const {
    std::vector<Complex> out = blaschke_zeros(B);
    for (Complex& z : out) z = map.apply(z);
    return out;
}

BlaschkeOnDiscResult approx_blaschke_on_disc(const AnalyticFn& f, const DiscSpec& disc,
                                             double delta, double epsilon) {
    if (!(delta > 0.0 && delta < disc.radius))
        throw std::invalid_argument("delta must lie in (0, radius)");
    check_nonvanishing(f, disc.center, disc.radius);
    MobiusMap T = disc.transport();
    double rp = disc.pseudo_r;

    constexpr int kMaxOrder = 200;
    AnalyticFn F1 = [&](Complex z) { return f(T.apply(z)); };
    // f_hat(z) = F1(rp z) is analytic past |z| = 1; its rational-variant
    // factors with R = rp^2 rearrange into the Blaschke form.
    TruncatedSeries fhat = taylor_from_samples([&](Complex z) { return F1(rp * z); },
                                               1.0, kMaxOrder + 1);
    TruncatedSeries L = log_derivative(fhat);
    Complex f0 = F1(Complex{0.0});
    double grid_radius = disc.radius - delta;

    for (int J = 4; J <= kMaxOrder; J += 4) {
        FactorProduct fp = match_factors(L, J, rp * rp);
        fp.leading_constant = f0;
        BlaschkeApproximant B = to_blaschke(fp, rp);
        double err = 0.0;
        for (int ir = 1; ir <= 16; ++ir) {
            double rr = grid_radius * ir / 16.0;
            for (int ia = 0; ia < 32; ++ia) {
                Complex w = disc.center + std::polar(rr, kTwoPi * ia / 32.0);
                double e = std::abs(f(w) - eval_blaschke(B, T.apply_inverse(w)));
                if (!std::isfinite(e)) e = std::numeric_limits<double>::infinity();
                err = std::max(err, e);
            }
        }
        if (err < epsilon) return {std::move(B), T, J, err};
    }
    throw BudgetExceeded{};
}

Complex PrescribedZeroResult::eval_C1(Complex z) const {
    Complex acc{1.0};
    for (Complex a : prescribed) acc *= (z - a) / (1.0 - std::conj(a) * z);
    return acc;
}

PrescribedZeroResult factor_prescribed_zeros(const std::vector<Complex>& zeros,
                                             const AnalyticFn& remainder, const DiscSpec& disc,
                                             double delta, double epsilon) {
    for (Complex a : zeros)
        if (std::abs(a) >= 1.0) throw ZeroOutsideDisc{};
    PrescribedZeroResult out{Complex{1.0}, zeros,
                             approx_blaschke_on_disc(remainder, disc, delta, epsilon)};
    out.c0 = out.C2.B.c_B;
    return out;
}

std::vector<Complex> rubinstein_approx(const std::vector<Complex>& p, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    size_t m = p.size();
    while (m > 1 && std::abs(p[m - 1]) == 0.0) --m;
    if (m == 0 || std::abs(p[0]) == 0.0) throw RootInsideDisc{};
    for (Complex root : poly_roots(std::vector<Complex>(p.begin(), p.begin() + m)))
        if (std::abs(root) <= 1.0) throw RootInsideDisc{};

    // q = p + z^k p*, with p* the conjugate-reversed coefficients.
    size_t deg = m - 1;
    std::vector<Complex> q(static_cast<size_t>(k) + deg + 1, Complex{0.0});
    for (size_t i = 0; i < m; ++i) q[i] = p[i];
    for (size_t i = 0; i < m; ++i) q[static_cast<size_t>(k) + i] += std::conj(p[deg - i]);
    return q;
}

}  // namespace zoc
