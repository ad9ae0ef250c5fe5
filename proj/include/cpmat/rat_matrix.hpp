#pragma once

#include "cpmat/int_matrix.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace cpmat {

/// Dense matrix of exact rationals. Every stored entry is kept in lowest
/// terms with a positive denominator; set() canonicalizes on the way in.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Rat value);

    const std::vector<Rat>& entries() const noexcept { return data_; }

    bool is_integral() const;
    /// Throws Error(InternalMismatch) unless every entry is an integer.
    IntMatrix to_integer() const;
    /// lcm of all entry denominators (1 for an integral matrix).
    Int denominator_lcm() const;
    /// Per-entry check of the lowest-terms invariant.
    bool all_reduced() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const IntMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const IntMatrix& b);
RatMatrix operator*(const Rat& s, const RatMatrix& m);
std::vector<Rat> operator*(const RatMatrix& m, const IntVector& v);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);
std::string to_string(const RatMatrix& m);

}  // namespace cpmat
