#include "zoc/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace zoc {

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    size_t n = coeffs.size();
    while (n > 1 && std::abs(coeffs[n - 1]) < 1e-300) --n;
    if (n <= 1) return {};

    int deg = static_cast<int>(n) - 1;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) C(i, deg - 1) = -coeffs[static_cast<size_t>(i)] / coeffs[n - 1];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(C, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("companion eigenvalue solve failed");

    std::vector<Complex> roots(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    return roots;
}

}  // namespace zoc
