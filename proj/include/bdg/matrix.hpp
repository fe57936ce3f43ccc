#pragma once

#include "bdg/numeric.hpp"

#include <vector>

namespace bdg {

using IntMatrix = std::vector<std::vector<Int>>;

// Exact determinant by fraction-free elimination with row pivoting.
// The empty matrix has determinant 1.
Int determinant(IntMatrix a);

// True iff the symmetric matrix is positive definite, decided by checking
// that every leading principal minor is positive. The fraction-free pivot at
// stage k equals the (k+1)-th leading principal minor, so no extra
// determinant evaluations are needed.
bool is_positive_definite(IntMatrix a);

// Solves a*x = rhs exactly over the rationals; throws InputError when the
// matrix is singular.
std::vector<Rat> solve_linear(const IntMatrix& a, const std::vector<Int>& rhs);

} // namespace bdg
