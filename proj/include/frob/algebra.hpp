#pragma once

// Finite-dimensional associative algebras with unit, presented by structure
// constants a_{ij}^k (e_i e_j = sum_k a_{ij}^k e_k).  Construction validates
// associativity and the unit axiom exhaustively.  Linear functionals are
// value vectors in the dual basis; from a tracial functional we derive the
// Frobenius pairing tensors R_i, R_{ij}, R_{ijk} and, when the pairing is
// nondegenerate, recover structure constants back from them.

#include <string>
#include <vector>

#include "frob/linalg.hpp"
#include "frob/scalar.hpp"

namespace frob {

using Vec = std::vector<Scalar>;
using Tensor3 = std::vector<std::vector<Vec>>; // [i][j][k]

class FinAlgebra {
  public:
    // Validates shape, associativity, and the unit axiom; throws
    // NonAssociative (with the offending triple) or BadUnit.
    FinAlgebra(Tensor3 constants, Vec unit, std::vector<std::string> basis_names = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Vec& unit() const { return unit_; }
    const Tensor3& constants() const { return constants_; }
    Scalar sc(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[i][j][k];
    }

    Vec basis_vec(std::size_t i) const;
    Vec multiply(const Vec& u, const Vec& v) const;
    // a^k with a^0 = 1.
    Vec power(const Vec& a, unsigned k) const;
    bool is_commutative() const;

  private:
    std::size_t dim_;
    Tensor3 constants_;
    Vec unit_;
    std::vector<std::string> names_;
};

struct Functional {
    Vec values;

    Scalar operator()(const Vec& a) const {
        if (a.size() != values.size()) fail(ErrorCode::BadInput, "functional arity mismatch");
        Scalar total(0);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) total += values[i] * a[i];
        return total;
    }
};

bool is_tracial(const FinAlgebra& A, const Functional& f);

struct PairingData {
    Vec R1;                 // R_i = f(e_i)
    Matrix R2;              // R_{ij} = f(e_i e_j)
    std::vector<Matrix> R3; // R3[i](j,k) = R_{ijk} = f(e_i e_j e_k)
    Matrix Rinv;            // R^{ij}, exact inverse of R2
};

// Throws NotTracial (with a witness pair) or Degenerate (singular pairing).
PairingData frobenius_pairing(const FinAlgebra& A, const Functional& f);

// a_{(ij)}^k = (a_{ij}^k + a_{ji}^k) / 2.
Tensor3 jordan_constants(const FinAlgebra& A);

// Rebuild the pairing tensors from the multilinear-form tables of a tracial
// functional on a COMMUTATIVE algebra:
//   R_i = phi1_i,  R_{ij} = R_i R_j - phi2(i,j),
//   2 R_{ijk} = phi3(i,j,k) + R_i R_{jk} + R_j R_{ik} + R_k R_{ij} - R_i R_j R_k.
// Throws Degenerate when the reconstructed R_{ij} is singular.
PairingData pairing_from_phi(const Vec& phi1, const Matrix& phi2,
                             const std::vector<Matrix>& phi3);

// Solve, for each fixed (i, j), the linear system over k
//   sum_r 2 a_{(ij)}^r R_{rk}
//     = f_i R_{jk} + f_j R_{ik} + f_k R_{ij} - f_i f_j f_k + phi3(i,j,k)
// with R_{ij} = f_i f_j - phi2(i,j).  Valid for any associative algebra.
// Throws Degenerate when R_{ij} is singular.
Tensor3 recover_jordan(const Vec& f_values, const Matrix& phi2,
                       const std::vector<Matrix>& phi3);

// Structure-constant recovery a_{ij}^k = sum_m R_{ijm} R^{mk} for commutative algebras.
Tensor3 recover_commutative(const PairingData& pairing);

// Functions on a finite set: idempotent basis d1..dm, unit (1,...,1).
FinAlgebra function_algebra(std::size_t points);
// Truncated polynomials C[t]/(t^order), basis 1, t, ..., t^{order-1}.
FinAlgebra truncated_polynomial_algebra(std::size_t order);

} // namespace frob
