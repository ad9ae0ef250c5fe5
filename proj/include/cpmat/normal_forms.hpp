#pragma once

#include "cpmat/int_matrix.hpp"

namespace cpmat {

/// U * A * V == S with U (r x r) and V (c x c) unimodular and S diagonal,
/// nonnegative, and s_k | s_{k+1} along the diagonal.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;

    /// The min(r, c) diagonal entries of S.
    std::vector<Int> diagonal() const;
};

/// Smith normal form with both transforms tracked. Total: accepts any
/// rectangular integer matrix, including zero.
///
/// Each step moves the smallest nonzero absolute value of the working
/// submatrix to the pivot, clears its row with Euclidean column steps and its
/// column with Euclidean row steps, and restarts whenever a remainder is left
/// or an entry of the trailing block is not divisible by the pivot.
SmithDecomposition smith_decompose(const IntMatrix& a);

/// M * W == H with W unimodular and H the column-style Hermite normal form:
/// lower triangular, positive diagonal, and 0 <= H(i, j) < H(i, i) for j < i.
/// H is the canonical representative of the class { M * W : W unimodular }.
struct HermiteForm {
    IntMatrix H;
    IntMatrix W;
};

/// Throws NonSquare or Singular.
HermiteForm hermite_normalize(const IntMatrix& m);

/// Shorthand for hermite_normalize(m).H.
IntMatrix canonical_form(const IntMatrix& m);

}  // namespace cpmat
