#pragma once

// Exact linear algebra over the scalar field, plus a division-free
// determinant usable over any commutative ring (polynomials included).
// Elimination uses exact division with the pivot chosen as the first
// symbolically nonzero entry; magnitudes are meaningless here.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "frob/scalar.hpp"

namespace frob {

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const;

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    Scalar det() const; // square only
    // Inverse, or nullopt when singular.
    std::optional<Matrix> inverse() const;
    // One solution of Ax = b with free variables set to zero, or nullopt
    // when inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// Determinant by cofactor expansion along successive rows, memoized on the
// set of still-unused columns.  Division-free, so it works over polynomial
// rings; zero entries are skipped, which makes almost-triangular matrices
// cheap.  Requires n <= 63.
template <typename R>
R det_memo(const std::vector<std::vector<R>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    std::map<std::uint64_t, R> memo;
    const std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    // returns det of the minor on rows i..n-1 and the columns in mask
    auto rec = [&](auto&& self, std::uint64_t mask) -> R {
        if (mask == 0) return R(1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t i = n;
        {
            std::uint64_t t = mask;
            while (t) {
                t &= t - 1;
                --i;
            }
        }
        R total = R(0);
        bool flip = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::uint64_t(1) << j))) continue;
            if (!m[i][j].is_zero()) {
                R sub = self(self, mask & ~(std::uint64_t(1) << j));
                R piece = m[i][j] * sub;
                total = flip ? total - piece : total + piece;
            }
            flip = !flip;
        }
        memo.emplace(mask, total);
        return total;
    };
    return rec(rec, full);
}

} // namespace frob
