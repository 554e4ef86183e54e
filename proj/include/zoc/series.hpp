#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace zoc {

using Complex = std::complex<double>;

struct ZeroConstantTerm : std::domain_error {
    ZeroConstantTerm() : std::domain_error("series has zero constant term") {}
};

// Power series truncated at a known order. coeffs[n] is the z^n
// coefficient; terms past `order` are unknown, not zero.
class TruncatedSeries {
  public:
    TruncatedSeries() : coeffs_(1, Complex{0.0}) {}
    explicit TruncatedSeries(std::vector<Complex> coeffs);
    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(Complex c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }

    Complex eval(Complex z) const;
    TruncatedSeries truncated(int order) const;

  private:
    std::vector<Complex> coeffs_;
};

// All results carry the minimum order of the participants.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// 1/a. Requires a[0] != 0; throws ZeroConstantTerm otherwise.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

// Termwise d/dz; order drops by one.
TruncatedSeries series_derivative(const TruncatedSeries& f);

// f'/f to order f.order()-1. Requires f(0) != 0.
TruncatedSeries log_derivative(const TruncatedSeries& f);

// z -> Rz, i.e. coefficient n picks up a factor R^n.
TruncatedSeries scale_argument(const TruncatedSeries& f, Complex R);

// Geometric envelope |a_n| <= C kappa^n over the stored coefficients.
struct GrowthBound {
    double C;
    double kappa;
};

// kappa = max(1+delta, 1/r+delta); for r >= 1 this is just 1+delta.
// C is the smallest envelope constant, floored at 1.
GrowthBound fit_growth_bound(const TruncatedSeries& a, double r, double delta = 0.05);

}  // namespace zoc
