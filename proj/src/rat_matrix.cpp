#include "cpmat/rat_matrix.hpp"

#include "cpmat/error.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace cpmat {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    data_.reserve(m.entries().size());
    for (const auto& x : m.entries()) data_.emplace_back(x);
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

void RatMatrix::set(std::size_t r, std::size_t c, Rat value) {
    value.canonicalize();
    data_[r * cols_ + c] = std::move(value);
}

bool RatMatrix::is_integral() const {
    for (const auto& x : data_)
        if (x.get_den() != 1) return false;
    return true;
}

IntMatrix RatMatrix::to_integer() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rat& x = (*this)(r, c);
            if (x.get_den() != 1) {
                throw Error(ErrorKind::InternalMismatch,
                            "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") = " + x.get_str() + " is not an integer");
            }
            out(r, c) = x.get_num();
        }
    }
    return out;
}

Int RatMatrix::denominator_lcm() const {
    Int l = 1;
    for (const auto& x : data_) l = lcm(l, x.get_den());
    return l;
}

bool RatMatrix::all_reduced() const {
    for (const auto& x : data_) {
        if (sgn(x.get_den()) <= 0) return false;
        if (gcd(x.get_num(), x.get_den()) != 1) return false;
    }
    return true;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "rational product shape");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rat acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

RatMatrix operator*(const IntMatrix& a, const RatMatrix& b) { return RatMatrix(a) * b; }
RatMatrix operator*(const RatMatrix& a, const IntMatrix& b) { return a * RatMatrix(b); }

RatMatrix operator*(const Rat& s, const RatMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, s * m(r, c));
    return out;
}

std::vector<Rat> operator*(const RatMatrix& m, const IntVector& v) {
    if (m.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "rational mat-vec shape");
    std::vector<Rat> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rat acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
        out[r] = std::move(acc);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ", ";
            os << m(r, c).get_str();
        }
        os << ']';
    }
    return os << ']';
}

std::string to_string(const RatMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

}  // namespace cpmat
