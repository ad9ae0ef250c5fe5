#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace cpmat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Carries square moduli, stacked D x 2D blocks and column vectors alike.
/// Values are regular: copyable, comparable, never shared.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix scalar(std::size_t n, const Int& value);
    static IntMatrix diagonal(const std::vector<Int>& diag);
    static IntMatrix column(const IntVector& v);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Int>& entries() const noexcept { return data_; }

    IntVector row(std::size_t r) const;
    IntVector col(std::size_t c) const;

    IntMatrix transpose() const;
    /// Horizontal concatenation (A B); row counts must agree.
    IntMatrix hstack(const IntMatrix& right) const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

    bool is_zero() const;
    bool is_diagonal() const;

    // Elementary operations, used by the normal-form reductions.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    IntMatrix& operator+=(const IntMatrix& o);
    IntMatrix& operator-=(const IntMatrix& o);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Int& s, IntMatrix m);
IntVector operator*(const IntMatrix& m, const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);

std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace cpmat
