#include "zoc/annulus.hpp"

#include <cmath>
#include <stdexcept>

namespace zoc {

namespace {

// Intersection of |zeta| = m with |zeta - d| = 1, d > 0 real, in the
// frame where w sits on the positive real axis. x is the abscissa of
// the intersection, x_eta = d - x, y2 = m^2 - x^2 (slightly negative
// only at tangency). Factored forms keep every output accurate to
// relative rounding even when d >> 1 and m ~ d.
struct RadicalPoint {
    double x;
    double x_eta;
    double y2;
};

RadicalPoint radical_point(int m, double d) {
    if (m == 1) {
        // Exact simplifications; the general forms cancel badly as d -> 0.
        double x = d / 2.0;
        return {x, x, 1.0 - x * x};
    }
    // m >= 2 forces d >= 1, so the factored forms below stay accurate.
    double dm = static_cast<double>(m);
    double u = d - dm;
    double x = (dm * dm + d * d - 1.0) / (2.0 * d);
    double x_eta = (u * (d + dm) + 1.0) / (2.0 * d);
    // y^2 = (m - x)(m + x) with m - x = (1 - u)(1 + u)/(2d).
    double y2 = (1.0 - u) * (1.0 + u) / (2.0 * d) * (dm + x);
    return {x, x_eta, y2};
}

}  // namespace

AnnulusTriple decompose(Complex w, double R0) {
    if (!(R0 > 0.0)) throw std::invalid_argument("R0 must be positive");
    if (w == Complex{0.0}) return {1, Complex{R0}, Complex{-R0}};

    double d = std::abs(w) / R0;
    int m = std::max(1, static_cast<int>(std::ceil(d - 1.0)));

    auto [x, x_eta, y2] = radical_point(m, d);
    double y = y2 > 0.0 ? std::sqrt(y2) : 0.0;
    Complex phase = w / std::abs(w);

    // Candidates for m*xi in the original frame; pick by Im, then Re.
    Complex up = phase * Complex{x, y};
    Complex down = phase * Complex{x, -y};
    double sign = 1.0;
    if (down.imag() > up.imag() ||
        (down.imag() == up.imag() && down.real() > up.real()))
        sign = -1.0;

    Complex xi = phase * Complex{x, sign * y} * (R0 / static_cast<double>(m));
    // eta sits at (x_eta, -sign*y) in the rotated frame: the matching
    // point on the unit circle about d, so |eta| = R0 without
    // cancellation against |w|.
    Complex eta = phase * Complex{x_eta, -sign * y} * R0;
    return {m, xi, eta};
}

std::map<int, int> count_representations(Complex w, double R0) {
    if (!(R0 > 0.0)) throw std::invalid_argument("R0 must be positive");
    if (w == Complex{0.0}) throw std::invalid_argument("w = 0 has infinitely many representations");

    constexpr double kTangentTol = 1e-12;
    double d = std::abs(w) / R0;
    std::map<int, int> tally;
    int m_lo = std::max(1, static_cast<int>(std::floor(d - 1.0)));
    int m_hi = static_cast<int>(std::ceil(d + 1.0));
    for (int m = m_lo; m <= m_hi; ++m) {
        // Circles |zeta| = m and |zeta - d| = 1 meet iff |m - d| <= 1
        // and m + d >= 1.
        double gap = std::abs(static_cast<double>(m) - d);
        if (gap > 1.0 + kTangentTol) continue;
        if (static_cast<double>(m) + d < 1.0 - kTangentTol) continue;
        tally[m] = (radical_point(m, d).y2 > kTangentTol) ? 2 : 1;
    }
    return tally;
}

}  // namespace zoc
