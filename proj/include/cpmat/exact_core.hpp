#pragma once

#include "cpmat/int_matrix.hpp"
#include "cpmat/rat_matrix.hpp"

namespace cpmat {

/// Exact determinant by Bareiss fraction-free elimination. The pivot is the
/// first nonzero entry at or below the diagonal in the current column; each
/// row swap flips the sign. Throws NonSquare.
Int determinant(const IntMatrix& m);

/// Exact inverse over the rationals. Throws NonSquare or Singular.
RatMatrix inverse_rational(const IntMatrix& m);

/// adj(M) = det(M) * M^-1, for nonsingular M.
IntMatrix adjugate(const IntMatrix& m);

/// |det M| == 1. Throws NonSquare.
bool is_unimodular(const IntMatrix& m);

/// Integer inverse of a unimodular matrix. Throws Singular if M is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace cpmat
