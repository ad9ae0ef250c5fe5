#pragma once

#include "cpmat/family.hpp"
#include "cpmat/int_matrix.hpp"
#include "cpmat/normal_forms.hpp"

#include <vector>

namespace cpmat {

/// True iff the Smith form of (M N) is (I 0). Throws DimensionMismatch or Singular.
bool is_left_coprime(const IntMatrix& m, const IntMatrix& n);

/// gcd of all D x D minors of (M N). Stops early once the running gcd is 1.
Int stacked_minors_gcd(const IntMatrix& m, const IntMatrix& n);

/// Sufficient condition only: gcd(det M, det N) = 1.
bool determinants_coprime(const IntMatrix& m, const IntMatrix& n);

/// A^-1 C is an integer matrix (A nonsingular).
bool left_divides(const IntMatrix& a, const IntMatrix& c);

/// Greatest common left divisor in Hermite canonical form.
IntMatrix gcld(const IntMatrix& m, const IntMatrix& n);

struct LcrmResult {
    IntMatrix raw;        // M U^-1 Lambda_alpha, as produced by the Smith route
    IntMatrix canonical;  // Hermite form of raw
};

/// lcrm via the denominator-clearing Smith route: Q = M^-1 N, m = lcm of the
/// denominators of Q, U (mQ) V = S, Lambda = S/m in lowest terms split into
/// numerators Lambda_alpha and denominators Lambda_beta. Then
/// R = M U^-1 Lambda_alpha = N V Lambda_beta. Throws Singular, or
/// InternalMismatch if the two products disagree.
LcrmResult lcrm_pair(const IntMatrix& m, const IntMatrix& n);

/// Same construction with a caller-supplied Smith decomposition of m * M^-1 N,
/// where m = `scale`. Exposed so the raw output for a specific (U, V) can be
/// checked.
LcrmResult lcrm_from_smith(const IntMatrix& m, const IntMatrix& n, const Int& scale,
                           const SmithDecomposition& smith);

/// Canonical lcrm of a list by a left fold of lcrm_pair. Throws EmptyList.
IntMatrix lcrm_family(const std::vector<IntMatrix>& ms);

/// (q_1 ... q_L)^D I.
IntMatrix r_d_matrix(const std::vector<Int>& qs, std::size_t dim);

struct FamilyLcrmReport {
    std::size_t dim = 0;
    std::vector<Int> qs;
    IntMatrix r_d;
    IntMatrix lcrm;               // canonical lcrm of the whole family
    bool crm_integral = false;    // every M^-1 R_D integral
    bool equals_r_d = false;      // canonical lcrm == canonical R_D
    Int dynamic_range;            // |det lcrm|
    Int expected_range;           // (prod q)^(D^2)
    bool range_matches = false;
    std::vector<Int> reduced_ranges;  // |det lcrm| with member k removed
    bool minimal = false;             // every reduced range < dynamic_range

    bool passed() const { return crm_integral && equals_r_d && range_matches && minimal; }
};

/// Checks that R_D is an lcrm of the family and that no member is redundant.
FamilyLcrmReport verify_family_lcrm(const std::vector<ConstructedMatrix>& family);

}  // namespace cpmat
