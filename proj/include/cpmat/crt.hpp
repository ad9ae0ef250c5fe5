#pragma once

#include "cpmat/int_matrix.hpp"
#include "cpmat/lattice.hpp"

#include <optional>
#include <vector>

namespace cpmat {

struct BezoutPair {
    IntMatrix P;
    IntMatrix Q;
};

/// P, Q with M1 P + M2 Q = I, read off U (M1 M2) W = (I 0). Throws NotCoprime.
BezoutPair bezout_pair(const IntMatrix& m1, const IntMatrix& m2);

/// Precomputed left fold over a list of moduli: the canonical lcrm after each
/// step and the Bezout multiplier that lifts the running solution. Reusable
/// for any number of remainder tuples.
class CrtPlan {
public:
    /// Throws EmptyList, DimensionMismatch, Singular, or NotCoprime (when the
    /// running lcrm is not left co-prime with the next modulus).
    explicit CrtPlan(std::vector<IntMatrix> moduli);

    const std::vector<IntMatrix>& moduli() const noexcept { return moduli_; }
    /// Canonical lcrm of all moduli.
    const IntMatrix& lcrm() const noexcept { return steps_.back().modulus.matrix(); }

    /// The unique n in FPD(lcrm()) with n = remainders[k] mod moduli[k].
    IntVector solve(const std::vector<IntVector>& remainders) const;

private:
    struct Step {
        IntMatrix lift;   // R_k P_k, with R_k P_k + M_{k+1} Q_k = I
        Modulus modulus;  // canonical lcrm after this step
    };
    std::vector<IntMatrix> moduli_;
    std::vector<Step> steps_;
};

/// Combine two residues into one modulo their canonical lcrm. Throws NotCoprime.
Residue crt_pair(const Residue& a, const Residue& b);

/// Left fold of crt_pair. A single residue is returned unchanged. The result
/// is re-checked against every input residue. Throws EmptyList, NotCoprime.
Residue crt_solve(const std::vector<Residue>& residues);

/// Scans FPD(R) for vectors matching every residue. Returns nullopt when none
/// does; throws MultipleSolutions when more than one does.
std::optional<IntVector> crt_brute_force(const std::vector<Residue>& residues, const IntMatrix& r);

}  // namespace cpmat
