#include "cpmat/divisibility.hpp"

#include "cpmat/error.hpp"
#include "cpmat/exact_core.hpp"

#include <algorithm>
#include <utility>

namespace cpmat {

namespace {

void require_pair(const IntMatrix& m, const IntMatrix& n, const char* op) {
    if (!m.is_square() || !n.is_square() || m.rows() != n.rows()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + " needs two square matrices of equal size");
    }
    if (sgn(determinant(m)) == 0 || sgn(determinant(n)) == 0) {
        throw Error(ErrorKind::Singular, std::string(op) + " needs nonsingular matrices");
    }
}

}  // namespace

bool is_left_coprime(const IntMatrix& m, const IntMatrix& n) {
    require_pair(m, n, "is_left_coprime");
    const auto s = smith_decompose(m.hstack(n)).S;
    const std::size_t d = m.rows();
    return s == IntMatrix::identity(d).hstack(IntMatrix(d, d));
}

Int stacked_minors_gcd(const IntMatrix& m, const IntMatrix& n) {
    if (m.rows() != n.rows()) throw Error(ErrorKind::DimensionMismatch, "row counts differ");
    const IntMatrix a = m.hstack(n);
    const std::size_t d = a.rows();
    const std::size_t w = a.cols();
    if (d > w) return 0;

    std::vector<std::size_t> pick(d);
    for (std::size_t k = 0; k < d; ++k) pick[k] = k;
    Int g = 0;
    IntMatrix minor(d, d);
    for (;;) {
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t k = 0; k < d; ++k) minor(r, k) = a(r, pick[k]);
        g = gcd(g, determinant(minor));
        if (g == 1) return g;

        std::size_t k = d;
        while (k > 0 && pick[k - 1] == w - d + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t t = k; t < d; ++t) pick[t] = pick[t - 1] + 1;
    }
    return g;
}

bool determinants_coprime(const IntMatrix& m, const IntMatrix& n) {
    return abs(gcd(determinant(m), determinant(n))) == 1;
}

bool left_divides(const IntMatrix& a, const IntMatrix& c) {
    return (inverse_rational(a) * c).is_integral();
}

IntMatrix gcld(const IntMatrix& m, const IntMatrix& n) {
    require_pair(m, n, "gcld");
    const std::size_t d = m.rows();
    const auto smith = smith_decompose(m.hstack(n));
    const IntMatrix g = unimodular_inverse(smith.U) * smith.S.block(0, 0, d, d);
    return canonical_form(g);
}

LcrmResult lcrm_from_smith(const IntMatrix& m, const IntMatrix& n, const Int& scale,
                           const SmithDecomposition& smith) {
    const std::size_t d = m.rows();
    std::vector<Int> alpha(d), beta(d);
    for (std::size_t k = 0; k < d; ++k) {
        Rat lambda(smith.S(k, k), scale);
        lambda.canonicalize();
        alpha[k] = lambda.get_num();
        beta[k] = lambda.get_den();
    }
    const IntMatrix via_m = m * unimodular_inverse(smith.U) * IntMatrix::diagonal(alpha);
    const IntMatrix via_n = n * smith.V * IntMatrix::diagonal(beta);
    if (via_m != via_n) {
        throw Error(ErrorKind::InternalMismatch,
                    "M U^-1 Lambda_alpha = " + to_string(via_m) + " but N V Lambda_beta = " +
                        to_string(via_n));
    }
    return LcrmResult{via_m, canonical_form(via_m)};
}

LcrmResult lcrm_pair(const IntMatrix& m, const IntMatrix& n) {
    require_pair(m, n, "lcrm_pair");
    const RatMatrix q = inverse_rational(m) * n;
    const Int scale = q.denominator_lcm();
    const IntMatrix cleared = (Rat(scale) * q).to_integer();
    return lcrm_from_smith(m, n, scale, smith_decompose(cleared));
}

IntMatrix lcrm_family(const std::vector<IntMatrix>& ms) {
    if (ms.empty()) throw Error(ErrorKind::EmptyList, "lcrm of an empty list");
    IntMatrix acc = canonical_form(ms.front());
    for (std::size_t k = 1; k < ms.size(); ++k) acc = lcrm_pair(acc, ms[k]).canonical;
    return acc;
}

IntMatrix r_d_matrix(const std::vector<Int>& qs, std::size_t dim) {
    if (qs.empty()) throw Error(ErrorKind::EmptyList, "R_D needs at least one q");
    Int prod = 1;
    for (const auto& q : qs) prod *= q;
    Int p;
    mpz_pow_ui(p.get_mpz_t(), prod.get_mpz_t(), dim);
    return IntMatrix::scalar(dim, p);
}

FamilyLcrmReport verify_family_lcrm(const std::vector<ConstructedMatrix>& family) {
    if (family.empty()) throw Error(ErrorKind::EmptyList, "empty family");
    FamilyLcrmReport rep;
    rep.dim = family.front().matrix.rows();
    for (const auto& member : family) {
        if (std::find(rep.qs.begin(), rep.qs.end(), member.q) == rep.qs.end()) {
            rep.qs.push_back(member.q);
        }
    }

    std::vector<IntMatrix> ms;
    ms.reserve(family.size());
    for (const auto& member : family) ms.push_back(member.matrix);

    rep.r_d = r_d_matrix(rep.qs, rep.dim);
    rep.crm_integral = std::all_of(ms.begin(), ms.end(),
                                   [&](const IntMatrix& m) { return left_divides(m, rep.r_d); });

    // Prefix folds double as the full left fold (prefix.back() == lcrm_family(ms)).
    const std::size_t count = ms.size();
    std::vector<IntMatrix> prefix(count), suffix(count);
    prefix[0] = canonical_form(ms[0]);
    for (std::size_t k = 1; k < count; ++k) prefix[k] = lcrm_pair(prefix[k - 1], ms[k]).canonical;

    rep.lcrm = prefix.back();
    rep.equals_r_d = rep.lcrm == canonical_form(rep.r_d);
    rep.dynamic_range = abs(determinant(rep.lcrm));
    Int prod = 1;
    for (const auto& q : rep.qs) prod *= q;
    mpz_pow_ui(rep.expected_range.get_mpz_t(), prod.get_mpz_t(), rep.dim * rep.dim);
    rep.range_matches = rep.dynamic_range == rep.expected_range;

    // Leave-one-out lcrms from prefix and suffix folds; associativity of lcrm
    // makes lcrm(prefix, suffix) the lcrm of everything but the skipped member.
    suffix[count - 1] = canonical_form(ms[count - 1]);
    for (std::size_t k = count - 1; k-- > 0;) suffix[k] = lcrm_pair(ms[k], suffix[k + 1]).canonical;

    rep.minimal = true;
    for (std::size_t k = 0; k < count; ++k) {
        IntMatrix rest;
        if (count == 1) rest = IntMatrix::identity(rep.dim);
        else if (k == 0) rest = suffix[1];
        else if (k == count - 1) rest = prefix[count - 2];
        else rest = lcrm_pair(prefix[k - 1], suffix[k + 1]).canonical;
        Int range = abs(determinant(rest));
        if (!(range < rep.dynamic_range)) rep.minimal = false;
        rep.reduced_ranges.push_back(std::move(range));
    }
    return rep;
}

}  // namespace cpmat
