#pragma once

#include "cpmat/int_matrix.hpp"

#include <cstddef>
#include <vector>

namespace cpmat {

/// A nonsingular square modulus with its adjugate cached, so that
/// M^-1 k = adj(M) k / det(M) reduces to integer arithmetic.
class Modulus {
public:
    /// Throws NonSquare or Singular.
    explicit Modulus(IntMatrix m);

    const IntMatrix& matrix() const noexcept { return m_; }
    const IntMatrix& adjugate() const noexcept { return adj_; }
    const Int& det() const noexcept { return det_; }
    Int abs_det() const { return abs(det_); }
    std::size_t dim() const noexcept { return m_.rows(); }

    /// True iff M^-1 k lies in [0,1)^D.
    bool contains(const IntVector& k) const;
    /// Folding vector n = floor(M^-1 f) (toward -infinity).
    IntVector folding(const IntVector& f) const;
    /// f - M floor(M^-1 f), the FPD representative of f.
    IntVector reduce(const IntVector& f) const;
    /// M^-1 (a - b) is integral.
    bool congruent(const IntVector& a, const IntVector& b) const;

private:
    IntMatrix m_;
    IntMatrix adj_;
    Int det_;
};

/// Integer vector remainder r together with its modulus; r lies in FPD(modulus).
class Residue {
public:
    /// Throws NotInFpd if r is not in FPD(modulus), DimensionMismatch on shape.
    Residue(IntVector r, IntMatrix modulus);

    const IntVector& r() const noexcept { return r_; }
    const IntMatrix& modulus() const noexcept { return modulus_; }

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    IntVector r_;
    IntMatrix modulus_;
};

/// Integer points of M [0,1)^D, sorted lexicographically.
struct Fpd {
    IntMatrix modulus;
    std::vector<IntVector> points;
};

/// Walks the |det M| cosets through the Smith decomposition U M V = S:
/// the vectors U^-1 y for y in the box prod [0, s_k) form a complete residue
/// system, and each is folded into the parallelepiped. Throws Singular.
Fpd fpd_enumerate(const IntMatrix& m);

/// Independent oracle: scans the integer bounding box of the vertices
/// {M v : v in {0,1}^D} with exact membership tests.
Fpd fpd_enumerate_bounding_box(const IntMatrix& m);

struct Reduction {
    IntVector n;
    Residue residue;
};

/// f = M n + r with r in FPD(M). Throws Singular.
Reduction mod_reduce(const IntVector& f, const IntMatrix& m);

struct AxisProfile {
    Int min;
    Int max;
    std::size_t distinct_count = 0;
};

/// Extent of FPD(M) along axis `axis` (0-based).
AxisProfile axis_profile(const IntMatrix& m, std::size_t axis);
AxisProfile axis_profile(const Fpd& fpd, std::size_t axis);

struct SpreadRatios {
    Rat peak_over_mean;
    Rat peak_over_min_nonzero;
};

/// peak/mean = (#entries * max|m|) / sum|m|, and max|m| / min nonzero |m|.
/// Throws ZeroMatrix.
SpreadRatios spread_ratios(const IntMatrix& m);

}  // namespace cpmat
