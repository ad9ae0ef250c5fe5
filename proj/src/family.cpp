#include "cpmat/family.hpp"

#include "cpmat/error.hpp"

#include <algorithm>
#include <string>

namespace cpmat {

namespace {

std::string describe(const Permutation& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(p[k]);
    }
    return s + ")";
}

void validate_permutation(const Permutation& p, std::size_t dim) {
    if (p.size() != dim) {
        throw Error(ErrorKind::InvalidPermutation,
                    describe(p) + " has length " + std::to_string(p.size()) + ", expected " +
                        std::to_string(dim));
    }
    std::vector<bool> seen(dim + 1, false);
    for (std::size_t v : p) {
        if (v < 1 || v > dim || seen[v]) {
            throw Error(ErrorKind::InvalidPermutation,
                        describe(p) + " is not a permutation of {1.." + std::to_string(dim) + "}");
        }
        seen[v] = true;
    }
}

}  // namespace

FeasiblePermutationSet::FeasiblePermutationSet(std::size_t dim, std::vector<Permutation> perms)
    : dim_(dim), perms_(std::move(perms)) {
    if (dim_ == 0) throw Error(ErrorKind::InvalidPermutation, "dimension must be positive");
    if (perms_.empty() || perms_.size() > dim_) {
        throw Error(ErrorKind::InvalidPermutation,
                    "a feasible set holds between 1 and D permutations, got " +
                        std::to_string(perms_.size()));
    }
    std::vector<bool> last_seen(dim_ + 1, false);
    for (const auto& p : perms_) {
        validate_permutation(p, dim_);
        if (last_seen[p.back()]) {
            throw Error(ErrorKind::DuplicateLastElement,
                        "last element " + std::to_string(p.back()) + " of " + describe(p) +
                            " already used");
        }
        last_seen[p.back()] = true;
    }
}

FeasiblePermutationSet generate_feasible_set(std::size_t dim, FeasibleKind kind,
                                             const std::vector<Permutation>& perms) {
    switch (kind) {
        case FeasibleKind::Cyclic: {
            std::vector<Permutation> out;
            for (std::size_t start = 1; start <= dim; ++start) {
                Permutation p(dim);
                for (std::size_t k = 0; k < dim; ++k) p[k] = (start - 1 + k) % dim + 1;
                out.push_back(std::move(p));
            }
            return FeasiblePermutationSet(dim, std::move(out));
        }
        case FeasibleKind::Toeplitz: {
            if (dim % 2 != 0) {
                throw Error(ErrorKind::ToeplitzOddDimension,
                            "Toeplitz feasible set needs an even dimension, got " +
                                std::to_string(dim));
            }
            // Only a bijection when D+1 is prime; otherwise validation rejects it.
            std::vector<Permutation> out;
            for (std::size_t j = 1; j <= dim; ++j) {
                Permutation p(dim);
                for (std::size_t k = 1; k <= dim; ++k) p[k - 1] = (k * j) % (dim + 1);
                out.push_back(std::move(p));
            }
            return FeasiblePermutationSet(dim, std::move(out));
        }
        case FeasibleKind::Explicit:
            return FeasiblePermutationSet(dim, perms);
    }
    throw Error(ErrorKind::InvalidPermutation, "unknown feasible set kind");
}

Int count_feasible_sets(std::size_t dim) {
    if (dim == 0) return 0;
    Int fact = 1;
    for (std::size_t k = 2; k < dim; ++k) fact *= static_cast<unsigned long>(k);
    Int total = 0;
    Int binom = 1;
    Int power = 1;
    for (std::size_t d = 1; d <= dim; ++d) {
        binom = binom * static_cast<unsigned long>(dim - d + 1) / static_cast<unsigned long>(d);
        power *= fact;
        total += binom * power;
    }
    return total;
}

SignMask SignMask::all_positive(std::size_t dim) {
    return SignMask{dim, std::vector<int>(dim * dim, 1)};
}

IntMatrix ConstructedMatrix::binary_part() const {
    const std::size_t d = dim();
    IntMatrix a(d, d);
    for (std::size_t k = 1; k < d; ++k) a(perm[k - 1] - 1, perm[k] - 1) = 1;
    return a;
}

ConstructedMatrix construct_matrix(const Int& q, const Permutation& sigma) {
    if (q <= 1) throw Error(ErrorKind::InvalidQ, "q must exceed 1, got " + q.get_str());
    const std::size_t d = sigma.size();
    if (d == 0) throw Error(ErrorKind::InvalidPermutation, "empty permutation");
    validate_permutation(sigma, d);

    ConstructedMatrix out;
    out.q = q;
    out.perm = sigma;
    out.j = sigma.back();
    out.matrix = IntMatrix(d, d);
    // 1-based positions from the permutation become 0-based indices here only.
    out.matrix(sigma[0] - 1, sigma[0] - 1) = q;
    for (std::size_t k = 1; k < d; ++k) {
        out.matrix(sigma[k - 1] - 1, sigma[k] - 1) = 1;
        out.matrix(sigma[k] - 1, sigma[k] - 1) = q;
    }
    return out;
}

std::vector<ConstructedMatrix> construct_family(const std::vector<Int>& qs,
                                                const FeasiblePermutationSet& pf) {
    if (qs.empty()) throw Error(ErrorKind::EmptyList, "no q values given");
    for (std::size_t a = 0; a < qs.size(); ++a) {
        if (qs[a] <= 1) throw Error(ErrorKind::InvalidQ, "q must exceed 1, got " + qs[a].get_str());
        if (a > 0 && qs[a] <= qs[a - 1]) {
            throw Error(ErrorKind::NotSorted, "q values must be strictly increasing");
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (abs(gcd(qs[a], qs[b])) != 1) {
                throw Error(ErrorKind::NotPairwiseCoprime,
                            qs[b].get_str() + " and " + qs[a].get_str() + " share a factor");
            }
        }
    }

    std::vector<Permutation> by_last = pf.perms();
    std::sort(by_last.begin(), by_last.end(),
              [](const Permutation& x, const Permutation& y) { return x.back() < y.back(); });

    std::vector<ConstructedMatrix> family;
    family.reserve(qs.size() * by_last.size());
    for (std::size_t i = 0; i < qs.size(); ++i) {
        for (const auto& sigma : by_last) {
            auto m = construct_matrix(qs[i], sigma);
            m.i = i + 1;
            family.push_back(std::move(m));
        }
    }
    return family;
}

ConstructedMatrix apply_sign_flips(const ConstructedMatrix& m, const SignMask& mask) {
    const std::size_t d = m.matrix.rows();
    if (mask.dim != d || mask.signs.size() != d * d) {
        throw Error(ErrorKind::DimensionMismatch,
                    "mask is " + std::to_string(mask.dim) + "x" + std::to_string(mask.dim) +
                        ", matrix is " + std::to_string(d) + "x" + std::to_string(d));
    }
    for (int s : mask.signs)
        if (s != 1 && s != -1) throw Error(ErrorKind::InvalidMask, "mask entries must be +1 or -1");

    ConstructedMatrix out = m;
    SignMask combined = m.sign_mask.value_or(SignMask::all_positive(d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (mask(r, c) < 0) out.matrix(r, c) = -out.matrix(r, c);
            combined.signs[r * d + c] *= mask(r, c);
        }
    }
    out.sign_mask = std::move(combined);
    return out;
}

IntMatrix separable_counterpart(const Int& q, std::size_t dim, std::size_t j) {
    if (j < 1 || j > dim) throw Error(ErrorKind::DimensionMismatch, "axis index out of range");
    IntMatrix m = IntMatrix::identity(dim);
    Int p;
    mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), dim);
    m(j - 1, j - 1) = p;
    return m;
}

}  // namespace cpmat
