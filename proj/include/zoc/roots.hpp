#pragma once

#include <vector>

#include "zoc/series.hpp"

namespace zoc {

// All complex roots of c_0 + c_1 z + ... + c_n z^n via companion-matrix
// eigenvalues. Trailing (near-)zero leading coefficients are dropped.
// Verification-only: the constructions elsewhere produce their zeros in
// closed form.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

}  // namespace zoc
