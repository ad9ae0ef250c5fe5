#include "cpmat/exact_core.hpp"

#include "cpmat/error.hpp"

#include <utility>

namespace cpmat {

namespace {

void require_square(const IntMatrix& m, const char* op) {
    if (!m.is_square()) {
        throw Error(ErrorKind::NonSquare, std::string(op) + " needs a square matrix, got " +
                                              std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()));
    }
}

}  // namespace

Int determinant(const IntMatrix& m) {
    require_square(m, "determinant");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a(p, k)) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            a.swap_rows(p, k);
            sign = -sign;
        }
        const Int pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * pivot - a(i, k) * a(k, j);
                // Sylvester's identity guarantees an exact quotient.
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = pivot;
    }
    Int det = a(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

RatMatrix inverse_rational(const IntMatrix& m) {
    require_square(m, "inverse_rational");
    const std::size_t n = m.rows();

    // Gauss-Jordan on [M | I] over Q.
    std::vector<Rat> a(n * 2 * n);
    auto at = [&](std::size_t r, std::size_t c) -> Rat& { return a[r * 2 * n + c]; };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) at(r, c) = m(r, c);
        at(r, n + r) = 1;
    }

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(at(p, k)) == 0) ++p;
        if (p == n) throw Error(ErrorKind::Singular, "matrix has no inverse");
        if (p != k)
            for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(p, c), at(k, c));

        const Rat inv_pivot = 1 / at(k, k);
        for (std::size_t c = k; c < 2 * n; ++c) at(k, c) *= inv_pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || sgn(at(r, k)) == 0) continue;
            const Rat f = at(r, k);
            for (std::size_t c = k; c < 2 * n; ++c) at(r, c) -= f * at(k, c);
        }
    }

    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, at(r, n + c));
    return inv;
}

IntMatrix adjugate(const IntMatrix& m) {
    const Int det = determinant(m);
    if (sgn(det) == 0) throw Error(ErrorKind::Singular, "adjugate of a singular matrix");
    return (Rat(det) * inverse_rational(m)).to_integer();
}

bool is_unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!is_unimodular(m)) throw Error(ErrorKind::Singular, "matrix is not unimodular");
    return inverse_rational(m).to_integer();
}

}  // namespace cpmat
