#include "frob/algebra.hpp"

namespace frob {

FinAlgebra::FinAlgebra(Tensor3 constants, Vec unit, std::vector<std::string> basis_names)
    : dim_(constants.size()), constants_(std::move(constants)), unit_(std::move(unit)),
      names_(std::move(basis_names)) {
    if (dim_ == 0) fail(ErrorCode::BadInput, "algebra dimension must be positive");
    for (const auto& plane : constants_) {
        if (plane.size() != dim_) fail(ErrorCode::BadInput, "structure tensor not cubic");
        for (const auto& row : plane)
            if (row.size() != dim_) fail(ErrorCode::BadInput, "structure tensor not cubic");
    }
    if (unit_.size() != dim_) fail(ErrorCode::BadInput, "unit vector has wrong length");
    if (names_.empty())
        for (std::size_t i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i + 1));
    if (names_.size() != dim_) fail(ErrorCode::BadInput, "basis name count mismatch");

    // Associativity: sum_r a_{ij}^r a_{rk}^s == sum_r a_{jk}^r a_{ir}^s.
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                for (std::size_t s = 0; s < dim_; ++s) {
                    Scalar lhs(0), rhs(0);
                    for (std::size_t r = 0; r < dim_; ++r) {
                        lhs += constants_[i][j][r] * constants_[r][k][s];
                        rhs += constants_[j][k][r] * constants_[i][r][s];
                    }
                    if (lhs != rhs)
                        fail(ErrorCode::NonAssociative,
                             "(" + names_[i] + "*" + names_[j] + ")*" + names_[k] + " != " +
                                 names_[i] + "*(" + names_[j] + "*" + names_[k] + ")");
                }
    // Unit axiom on basis vectors, both sides.
    for (std::size_t i = 0; i < dim_; ++i) {
        Vec e = basis_vec(i);
        if (multiply(unit_, e) != e || multiply(e, unit_) != e)
            fail(ErrorCode::BadUnit, "unit fails on basis element " + names_[i]);
    }
}

Vec FinAlgebra::basis_vec(std::size_t i) const {
    Vec e(dim_, Scalar(0));
    e[i] = Scalar(1);
    return e;
}

Vec FinAlgebra::multiply(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        fail(ErrorCode::BadInput, "vector length mismatch in multiply");
    Vec out(dim_, Scalar(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            Scalar uv = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!constants_[i][j][k].is_zero()) out[k] += uv * constants_[i][j][k];
        }
    }
    return out;
}

Vec FinAlgebra::power(const Vec& a, unsigned k) const {
    Vec out = unit_;
    for (unsigned t = 0; t < k; ++t) out = multiply(out, a);
    return out;
}

bool FinAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (constants_[i][j] != constants_[j][i]) return false;
    return true;
}

bool is_tracial(const FinAlgebra& A, const Functional& f) {
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = i + 1; j < A.dim(); ++j) {
            Scalar ij(0), ji(0);
            for (std::size_t k = 0; k < A.dim(); ++k) {
                ij += A.sc(i, j, k) * f.values[k];
                ji += A.sc(j, i, k) * f.values[k];
            }
            if (ij != ji) return false;
        }
    return true;
}

PairingData frobenius_pairing(const FinAlgebra& A, const Functional& f) {
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar ij = f(A.multiply(A.basis_vec(i), A.basis_vec(j)));
            Scalar ji = f(A.multiply(A.basis_vec(j), A.basis_vec(i)));
            if (ij != ji)
                fail(ErrorCode::NotTracial, "f(" + A.basis_names()[i] + "*" +
                                                A.basis_names()[j] + ") != f(" +
                                                A.basis_names()[j] + "*" + A.basis_names()[i] +
                                                ")");
        }
    PairingData P;
    P.R1 = f.values;
    P.R2 = Matrix(n, n);
    P.R3.assign(n, Matrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec eij = A.multiply(A.basis_vec(i), A.basis_vec(j));
            P.R2.at(i, j) = f(eij);
            for (std::size_t k = 0; k < n; ++k)
                P.R3[i].at(j, k) = f(A.multiply(eij, A.basis_vec(k)));
        }
    auto inv = P.R2.inverse();
    if (!inv) fail(ErrorCode::Degenerate, "pairing matrix R_{ij} is singular");
    P.Rinv = std::move(*inv);
    return P;
}

Tensor3 jordan_constants(const FinAlgebra& A) {
    const std::size_t n = A.dim();
    Scalar half(Rat(1, 2));
    Tensor3 t(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t[i][j][k] = half * (A.sc(i, j, k) + A.sc(j, i, k));
    return t;
}

PairingData pairing_from_phi(const Vec& phi1, const Matrix& phi2,
                             const std::vector<Matrix>& phi3) {
    const std::size_t n = phi1.size();
    PairingData P;
    P.R1 = phi1;
    P.R2 = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            P.R2.at(i, j) = phi1[i] * phi1[j] - phi2.at(i, j);
    Scalar half(Rat(1, 2));
    P.R3.assign(n, Matrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                P.R3[i].at(j, k) =
                    half * (phi3[i].at(j, k) + phi1[i] * P.R2.at(j, k) +
                            phi1[j] * P.R2.at(i, k) + phi1[k] * P.R2.at(i, j) -
                            phi1[i] * phi1[j] * phi1[k]);
    auto inv = P.R2.inverse();
    if (!inv) fail(ErrorCode::Degenerate, "reconstructed pairing matrix is singular");
    P.Rinv = std::move(*inv);
    return P;
}

Tensor3 recover_jordan(const Vec& f_values, const Matrix& phi2,
                       const std::vector<Matrix>& phi3) {
    const std::size_t n = f_values.size();
    Matrix R(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            R.at(i, j) = f_values[i] * f_values[j] - phi2.at(i, j);
    // System matrix over r for fixed (i,j): M[k][r] = R_{rk}.
    Matrix M(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) M.at(k, r) = R.at(r, k);
    auto Minv = M.inverse();
    if (!Minv) fail(ErrorCode::Degenerate, "pairing matrix singular; not a Frobenius pair");
    Scalar half(Rat(1, 2));
    Tensor3 t(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> rhs(n);
            for (std::size_t k = 0; k < n; ++k)
                rhs[k] = f_values[i] * R.at(j, k) + f_values[j] * R.at(i, k) +
                         f_values[k] * R.at(i, j) - f_values[i] * f_values[j] * f_values[k] +
                         phi3[i].at(j, k);
            for (std::size_t r = 0; r < n; ++r) {
                Scalar w(0);
                for (std::size_t k = 0; k < n; ++k) w += Minv->at(r, k) * rhs[k];
                t[i][j][r] = half * w;
            }
        }
    return t;
}

FinAlgebra function_algebra(std::size_t points) {
    Tensor3 t(points, std::vector<Vec>(points, Vec(points, Scalar(0))));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < points; ++i) {
        t[i][i][i] = Scalar(1);
        names.push_back("d" + std::to_string(i + 1));
    }
    return FinAlgebra(std::move(t), Vec(points, Scalar(1)), std::move(names));
}

FinAlgebra truncated_polynomial_algebra(std::size_t order) {
    Tensor3 t(order, std::vector<Vec>(order, Vec(order, Scalar(0))));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j)
            if (i + j < order) t[i][j][i + j] = Scalar(1);
        names.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t" + std::to_string(i)));
    }
    Vec unit(order, Scalar(0));
    unit[0] = Scalar(1);
    return FinAlgebra(std::move(t), std::move(unit), std::move(names));
}

Tensor3 recover_commutative(const PairingData& pairing) {
    const std::size_t n = pairing.R1.size();
    Tensor3 t(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar total(0);
                for (std::size_t m = 0; m < n; ++m)
                    total += pairing.R3[i].at(j, m) * pairing.Rinv.at(m, k);
                t[i][j][k] = total;
            }
    return t;
}

} // namespace frob
