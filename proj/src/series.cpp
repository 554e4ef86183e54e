#include "zoc/series.hpp"

#include <algorithm>
#include <cmath>

namespace zoc {

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::zero(int order) {
    return TruncatedSeries(std::vector<Complex>(static_cast<size_t>(order) + 1, Complex{0.0}));
}

TruncatedSeries TruncatedSeries::constant(Complex c, int order) {
    std::vector<Complex> v(static_cast<size_t>(order) + 1, Complex{0.0});
    v[0] = c;
    return TruncatedSeries(std::move(v));
}

Complex TruncatedSeries::eval(Complex z) const {
    Complex acc{0.0};
    for (size_t n = coeffs_.size(); n-- > 0;) acc = acc * z + coeffs_[n];
    return acc;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order >= this->order()) return *this;
    if (order < 0) throw std::invalid_argument("negative truncation order");
    return TruncatedSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Complex> out(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[static_cast<size_t>(k)] = a[k] + b[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Complex> out(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[static_cast<size_t>(k)] = a[k] - b[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Complex> out(static_cast<size_t>(n) + 1, Complex{0.0});
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n && j <= b.order(); ++j)
            out[static_cast<size_t>(i + j)] += a[i] * b[j];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
    if (std::abs(a[0]) == 0.0) throw ZeroConstantTerm{};
    int n = a.order();
    std::vector<Complex> out(static_cast<size_t>(n) + 1);
    out[0] = 1.0 / a[0];
    for (int k = 1; k <= n; ++k) {
        Complex s{0.0};
        for (int j = 1; j <= k; ++j) s += a[j] * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = -s / a[0];
    }
    // One Newton step b += b (1 - a b); the recurrence amplifies
    // rounding when |a_0| is small and this squares that residual away.
    TruncatedSeries b(std::move(out));
    TruncatedSeries residual = series_sub(TruncatedSeries::constant(1.0, n), series_mul(a, b));
    return series_add(b, series_mul(b, residual));
}

TruncatedSeries series_derivative(const TruncatedSeries& f) {
    if (f.order() == 0) return TruncatedSeries::zero(0);
    std::vector<Complex> out(static_cast<size_t>(f.order()));
    for (int k = 1; k <= f.order(); ++k)
        out[static_cast<size_t>(k - 1)] = static_cast<double>(k) * f[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries log_derivative(const TruncatedSeries& f) {
    if (std::abs(f[0]) == 0.0) throw ZeroConstantTerm{};
    if (f.order() == 0) return TruncatedSeries::zero(0);
    return series_mul(series_derivative(f), series_reciprocal(f).truncated(f.order() - 1));
}

TruncatedSeries scale_argument(const TruncatedSeries& f, Complex R) {
    std::vector<Complex> out(f.coeffs());
    Complex p{1.0};
    for (size_t n = 1; n < out.size(); ++n) {
        p *= R;
        out[n] *= p;
    }
    return TruncatedSeries(std::move(out));
}

GrowthBound fit_growth_bound(const TruncatedSeries& a, double r, double delta) {
    double kappa = std::max(1.0 + delta, 1.0 / r + delta);
    double C = 1.0;
    double pk = 1.0;
    for (int n = 0; n <= a.order(); ++n) {
        C = std::max(C, std::abs(a[n]) / pk);
        pk *= kappa;
    }
    return GrowthBound{C, kappa};
}

}  // namespace zoc
