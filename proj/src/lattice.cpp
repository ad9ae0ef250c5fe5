#include "cpmat/lattice.hpp"

#include "cpmat/error.hpp"
#include "cpmat/exact_core.hpp"
#include "cpmat/normal_forms.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace cpmat {

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_points(std::vector<IntVector>& pts) { std::sort(pts.begin(), pts.end(), lex_less); }

std::size_t checked_count(const Int& n) {
    if (!n.fits_ulong_p()) throw Error(ErrorKind::DimensionMismatch, "FPD too large to enumerate");
    return n.get_ui();
}

}  // namespace

Modulus::Modulus(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw Error(ErrorKind::NonSquare, "modulus must be square");
    det_ = determinant(m_);
    if (sgn(det_) == 0) throw Error(ErrorKind::Singular, "modulus is singular");
    adj_ = cpmat::adjugate(m_);
}

bool Modulus::contains(const IntVector& k) const {
    if (k.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector/modulus size mismatch");
    const IntVector y = adj_ * k;
    for (const auto& yi : y) {
        if (sgn(det_) > 0) {
            if (sgn(yi) < 0 || yi >= det_) return false;
        } else {
            if (sgn(yi) > 0 || yi <= det_) return false;
        }
    }
    return true;
}

IntVector Modulus::folding(const IntVector& f) const {
    if (f.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector/modulus size mismatch");
    IntVector n = adj_ * f;
    for (auto& x : n) mpz_fdiv_q(x.get_mpz_t(), x.get_mpz_t(), det_.get_mpz_t());
    return n;
}

IntVector Modulus::reduce(const IntVector& f) const { return f - m_ * folding(f); }

bool Modulus::congruent(const IntVector& a, const IntVector& b) const {
    const IntVector y = adj_ * (a - b);
    for (const auto& yi : y)
        if (!mpz_divisible_p(yi.get_mpz_t(), det_.get_mpz_t())) return false;
    return true;
}

Residue::Residue(IntVector r, IntMatrix modulus) : r_(std::move(r)), modulus_(std::move(modulus)) {
    if (r_.size() != modulus_.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "remainder and modulus sizes differ");
    }
    if (!Modulus(modulus_).contains(r_)) {
        throw Error(ErrorKind::NotInFpd, to_string(r_) + " is not in FPD(" + to_string(modulus_) + ")");
    }
}

Fpd fpd_enumerate(const IntMatrix& m) {
    const Modulus mod(m);
    const std::size_t d = mod.dim();
    const auto smith = smith_decompose(m);
    const IntMatrix u_inv = unimodular_inverse(smith.U);

    std::vector<std::size_t> radix(d);
    for (std::size_t k = 0; k < d; ++k) radix[k] = checked_count(smith.S(k, k));
    const std::size_t total = checked_count(mod.abs_det());

    Fpd out{m, {}};
    out.points.reserve(total);
    std::vector<std::size_t> digits(d, 0);
    IntVector y(d);
    for (std::size_t idx = 0; idx < total; ++idx) {
        for (std::size_t k = 0; k < d; ++k) y[k] = static_cast<unsigned long>(digits[k]);
        out.points.push_back(mod.reduce(u_inv * y));
        for (std::size_t k = 0; k < d; ++k) {
            if (++digits[k] < radix[k]) break;
            digits[k] = 0;
        }
    }
    sort_points(out.points);
    return out;
}

Fpd fpd_enumerate_bounding_box(const IntMatrix& m) {
    const Modulus mod(m);
    const std::size_t d = mod.dim();
    // Row sums of the negative / positive parts give the vertex-set extremes.
    IntVector lo(d), hi(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (sgn(m(r, c)) < 0) lo[r] += m(r, c);
            else hi[r] += m(r, c);
        }
    }

    Fpd out{m, {}};
    if (d == 0) return out;
    IntVector k = lo;
    for (;;) {
        if (mod.contains(k)) out.points.push_back(k);
        std::size_t axis = 0;
        while (axis < d) {
            if (k[axis] < hi[axis]) {
                ++k[axis];
                break;
            }
            k[axis] = lo[axis];
            ++axis;
        }
        if (axis == d) break;
    }
    sort_points(out.points);
    return out;
}

Reduction mod_reduce(const IntVector& f, const IntMatrix& m) {
    const Modulus mod(m);
    IntVector n = mod.folding(f);
    IntVector r = f - m * n;
    return Reduction{std::move(n), Residue(std::move(r), m)};
}

AxisProfile axis_profile(const Fpd& fpd, std::size_t axis) {
    if (fpd.points.empty() || axis >= fpd.points.front().size()) {
        throw Error(ErrorKind::DimensionMismatch, "axis out of range");
    }
    std::set<Int> values;
    for (const auto& p : fpd.points) values.insert(p[axis]);
    return AxisProfile{*values.begin(), *values.rbegin(), values.size()};
}

AxisProfile axis_profile(const IntMatrix& m, std::size_t axis) {
    if (axis >= m.rows()) throw Error(ErrorKind::DimensionMismatch, "axis out of range");
    return axis_profile(fpd_enumerate(m), axis);
}

SpreadRatios spread_ratios(const IntMatrix& m) {
    if (m.empty() || m.is_zero()) throw Error(ErrorKind::ZeroMatrix, "spread of a zero matrix");
    Int peak = 0;
    Int total = 0;
    Int min_nonzero = 0;
    for (const auto& x : m.entries()) {
        const Int a = abs(x);
        total += a;
        if (a > peak) peak = a;
        if (sgn(a) != 0 && (sgn(min_nonzero) == 0 || a < min_nonzero)) min_nonzero = a;
    }
    const Int count = static_cast<unsigned long>(m.rows() * m.cols());
    Rat over_mean(count * peak, total);
    over_mean.canonicalize();
    Rat over_min(peak, min_nonzero);
    over_min.canonicalize();
    return SpreadRatios{std::move(over_mean), std::move(over_min)};
}

}  // namespace cpmat
