#pragma once

#include "cpmat/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cpmat {

/// A permutation of {1..D} written as (sigma(1), ..., sigma(D)), 1-based.
using Permutation = std::vector<std::size_t>;

enum class FeasibleKind { Cyclic, Toeplitz, Explicit };

/// Permutations of {1..D} with pairwise distinct last elements.
class FeasiblePermutationSet {
public:
    /// Validates every permutation and the distinct-last-element rule.
    /// Throws InvalidPermutation or DuplicateLastElement.
    FeasiblePermutationSet(std::size_t dim, std::vector<Permutation> perms);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return perms_.size(); }
    const std::vector<Permutation>& perms() const noexcept { return perms_; }

    friend bool operator==(const FeasiblePermutationSet&, const FeasiblePermutationSet&) = default;

private:
    std::size_t dim_;
    std::vector<Permutation> perms_;
};

/// Cyclic set: (1,..,D), (2,..,D,1), ..., (D,1,..,D-1).
/// Toeplitz set (D even): sigma_j(k) = (k*j) mod (D+1), j = 1..D.
/// Explicit: `perms` as given. Throws ToeplitzOddDimension, InvalidPermutation,
/// DuplicateLastElement.
FeasiblePermutationSet generate_feasible_set(std::size_t dim, FeasibleKind kind,
                                             const std::vector<Permutation>& perms = {});

/// Number of feasible permutation sets of {1..D}: sum_d C(D,d) ((D-1)!)^d.
Int count_feasible_sets(std::size_t dim);

/// Entrywise +-1 mask.
struct SignMask {
    std::size_t dim = 0;
    std::vector<int> signs;  // row-major, each +1 or -1

    static SignMask all_positive(std::size_t dim);
    int operator()(std::size_t r, std::size_t c) const { return signs[r * dim + c]; }
    friend bool operator==(const SignMask&, const SignMask&) = default;
};

/// One member of a constructed family: sign-masked (q*I + A_sigma), where
/// A_sigma has ones at (sigma(k-1), sigma(k)), k = 2..D.
struct ConstructedMatrix {
    IntMatrix matrix;
    Int q;
    Permutation perm;
    std::optional<SignMask> sign_mask;
    std::size_t i = 0;  // 1-based index of q within the family's q list
    std::size_t j = 0;  // sigma(D), the column index of the permutation

    std::size_t dim() const noexcept { return perm.size(); }
    /// The 0/1 matrix A_sigma of the representation q*I + A_sigma.
    IntMatrix binary_part() const;
};

/// Throws InvalidQ (q <= 1) or InvalidPermutation.
ConstructedMatrix construct_matrix(const Int& q, const Permutation& sigma);

/// All L*|pf| matrices, ordered by q index i, then by j = sigma(D) ascending.
/// Throws NotSorted, NotPairwiseCoprime, InvalidQ, EmptyList.
std::vector<ConstructedMatrix> construct_family(const std::vector<Int>& qs,
                                                const FeasiblePermutationSet& pf);

/// Entrywise product with a +-1 mask. Throws DimensionMismatch or InvalidMask.
ConstructedMatrix apply_sign_flips(const ConstructedMatrix& m, const SignMask& mask);

/// Diagonal counterparts diag(1,..,q^D,..,1) with q^D at position j (1-based).
IntMatrix separable_counterpart(const Int& q, std::size_t dim, std::size_t j);

}  // namespace cpmat
