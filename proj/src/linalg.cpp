#include "frob/linalg.hpp"

namespace frob {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail(ErrorCode::BadInput, "matrix shape mismatch in product");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && at(p, col).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Scalar inv = at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Scalar factor = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= factor * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref().size();
}

Scalar Matrix::det() const {
    if (rows_ != cols_) fail(ErrorCode::BadInput, "determinant of a non-square matrix");
    Matrix m = *this;
    Scalar d(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t p = col;
        while (p < rows_ && m.at(p, col).is_zero()) ++p;
        if (p == rows_) return Scalar(0);
        if (p != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                m.at(i, j) -= factor * m.at(col, j);
        }
    }
    return d;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) fail(ErrorCode::BadInput, "inverse of a non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar(1);
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_) fail(ErrorCode::BadInput, "solve shape mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt; // 0 = 1 row
    std::vector<Scalar> x(cols_, Scalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

} // namespace frob
