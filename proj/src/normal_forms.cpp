#include "cpmat/normal_forms.hpp"

#include "cpmat/error.hpp"
#include "cpmat/exact_core.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace cpmat {

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> d;
    const std::size_t n = std::min(S.rows(), S.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(S(i, i));
    return d;
}

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& s, std::size_t t) {
    std::optional<Position> best;
    Int best_abs;
    for (std::size_t i = t; i < s.rows(); ++i) {
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (sgn(s(i, j)) == 0) continue;
            Int a = abs(s(i, j));
            if (!best || a < best_abs) {
                best = Position{i, j};
                best_abs = std::move(a);
                if (best_abs == 1) return best;
            }
        }
    }
    return best;
}

}  // namespace

SmithDecomposition smith_decompose(const IntMatrix& a) {
    const std::size_t nr = a.rows();
    const std::size_t nc = a.cols();
    IntMatrix s = a;
    IntMatrix u = IntMatrix::identity(nr);
    IntMatrix v = IntMatrix::identity(nc);

    const std::size_t steps = std::min(nr, nc);
    for (std::size_t t = 0; t < steps; ++t) {
        bool trailing_zero = false;
        for (;;) {
            const auto pos = smallest_nonzero(s, t);
            if (!pos) {
                trailing_zero = true;
                break;
            }
            s.swap_rows(t, pos->row);
            u.swap_rows(t, pos->row);
            s.swap_cols(t, pos->col);
            v.swap_cols(t, pos->col);

            bool remainder_left = false;
            Int q;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (sgn(s(i, t)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                q = -q;
                s.add_row_multiple(i, t, q);
                u.add_row_multiple(i, t, q);
                if (sgn(s(i, t)) != 0) remainder_left = true;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (sgn(s(t, j)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                q = -q;
                s.add_col_multiple(j, t, q);
                v.add_col_multiple(j, t, q);
                if (sgn(s(t, j)) != 0) remainder_left = true;
            }
            if (remainder_left) continue;

            // Pivot row and column are clear; enforce s_t | every trailing entry.
            std::optional<std::size_t> offending_row;
            for (std::size_t i = t + 1; i < nr && !offending_row; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
                        offending_row = i;
                        break;
                    }
            if (!offending_row) break;
            s.add_row_multiple(t, *offending_row, Int(1));
            u.add_row_multiple(t, *offending_row, Int(1));
        }
        if (trailing_zero) break;
        if (sgn(s(t, t)) < 0) {
            s.negate_col(t);
            v.negate_col(t);
        }
    }
    return SmithDecomposition{std::move(u), std::move(s), std::move(v)};
}

HermiteForm hermite_normalize(const IntMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "hermite_normalize needs a square matrix");
    if (sgn(determinant(m)) == 0) throw Error(ErrorKind::Singular, "hermite_normalize of a singular matrix");

    const std::size_t n = m.rows();
    IntMatrix h = m;
    IntMatrix w = IntMatrix::identity(n);

    // Replace columns (i, j) by (s*ci + t*cj, -(y/g)*ci + (x/g)*cj); the 2x2
    // transform has determinant (s*x + t*y)/g = 1.
    auto combine = [n](IntMatrix& mat, std::size_t i, std::size_t j, const Int& s, const Int& t,
                       const Int& a, const Int& b) {
        for (std::size_t r = 0; r < n; ++r) {
            Int ci = mat(r, i);
            Int cj = mat(r, j);
            mat(r, i) = s * ci + t * cj;
            mat(r, j) = a * ci + b * cj;
        }
    };

    Int g, s, t, a, b, f;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (sgn(h(i, j)) == 0) continue;
            const Int x = h(i, i);
            const Int y = h(i, j);
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            a = -y / g;
            b = x / g;
            combine(h, i, j, s, t, a, b);
            combine(w, i, j, s, t, a, b);
        }
        if (sgn(h(i, i)) < 0) {
            h.negate_col(i);
            w.negate_col(i);
        }
        for (std::size_t j = 0; j < i; ++j) {
            mpz_fdiv_q(f.get_mpz_t(), h(i, j).get_mpz_t(), h(i, i).get_mpz_t());
            if (sgn(f) == 0) continue;
            f = -f;
            h.add_col_multiple(j, i, f);
            w.add_col_multiple(j, i, f);
        }
    }
    return HermiteForm{std::move(h), std::move(w)};
}

IntMatrix canonical_form(const IntMatrix& m) { return hermite_normalize(m).H; }

}  // namespace cpmat
