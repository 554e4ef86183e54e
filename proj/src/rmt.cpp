#include "zoc/rmt.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

namespace zoc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

EigenphaseSample sample_haar(int N, uint64_t seed) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;

    Eigen::MatrixXcd G(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) G(i, j) = Complex{normal(rng), normal(rng)};

    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
    Eigen::MatrixXcd Q = qr.householderQ();
    Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the gauge: multiply columns by the phases of R's diagonal so
    // the distribution is Haar rather than QR-convention dependent.
    for (int j = 0; j < N; ++j) {
        Complex d = R(j, j);
        Q.col(j) *= d / std::abs(d);
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(Q, false);
    EigenphaseSample out{N, std::vector<double>(static_cast<size_t>(N)), seed};
    for (int k = 0; k < N; ++k) {
        double phase = std::arg(solver.eigenvalues()(k));
        if (phase < 0.0) phase += kTwoPi;
        if (phase >= kTwoPi) phase -= kTwoPi;
        out.phases[static_cast<size_t>(k)] = phase;
    }
    return out;
}

CharPoly char_poly(const EigenphaseSample& s) {
    std::vector<Complex> c(s.phases.size() + 1, Complex{0.0});
    c[0] = 1.0;
    int top = 0;
    for (double theta : s.phases) {
        Complex root = -std::polar(1.0, -theta);  // factor 1 - e^{-i theta} z
        ++top;
        for (int k = top; k >= 1; --k) c[static_cast<size_t>(k)] += root * c[static_cast<size_t>(k - 1)];
    }
    return {TruncatedSeries(std::move(c))};
}

std::vector<Complex> logderiv_tuple(const CharPoly& p, double x, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    // Lambda^{(m)}(x) by Horner on the m-fold derived coefficients.
    std::vector<Complex> derived = p.coeffs.coeffs();
    Complex value = p.coeffs.eval(Complex{x});
    std::vector<Complex> out(static_cast<size_t>(n), Complex{0.0});
    for (int m = 1; m <= n; ++m) {
        size_t len = derived.size();
        if (len <= 1) break;  // all further derivatives vanish
        std::vector<Complex> next(len - 1);
        for (size_t k = 1; k < len; ++k) next[k - 1] = static_cast<double>(k) * derived[k];
        derived = std::move(next);
        Complex acc{0.0};
        for (size_t k = derived.size(); k-- > 0;) acc = acc * x + derived[k];
        out[static_cast<size_t>(m - 1)] = acc / value;
    }
    return out;
}

ApproxProbability approx_probability(const std::function<Complex(Complex)>& f, double r,
                                     double epsilon, int N, int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    int successes = 0;
    for (int t = 0; t < trials; ++t) {
        CharPoly p = char_poly(sample_haar(N, seed + static_cast<uint64_t>(t)));
        bool ok = true;
        for (int ir = 0; ir < 32 && ok; ++ir) {
            double rr = r * (ir + 0.5) / 32.0;
            for (int ia = 0; ia < 32; ++ia) {
                Complex z = std::polar(rr, kTwoPi * ia / 32.0);
                if (std::abs(p.coeffs.eval(z) - f(z)) >= epsilon) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++successes;
    }

    double n = trials;
    double phat = successes / n;
    const double z95 = 1.959963984540054;
    double z2 = z95 * z95;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double half = z95 * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    // At the boundary counts the exact endpoints are 0 resp. 1; rounding
    // in sqrt otherwise leaves a stray ulp.
    double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    double high = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {phat, low, high, successes, trials};
}

}  // namespace zoc
