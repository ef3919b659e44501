#pragma once

// The Phi_n calculus.  Phi_1(f) = f and
//   Phi_{k+1}(f)(a_1,...,a_{k+1}) = f(a_1) Phi_k(f)(a_2,...,a_{k+1})
//     - sum_{j=2}^{k+1} Phi_k(f)(a_2,...,a_1 a_j,...,a_{k+1});
// a linear functional f is a Frobenius n-homomorphism when f(1) = n and
// Phi_{n+1}(f) vanishes identically.  Three further evaluation routes are
// provided (cycle sum over S_n, moment determinant on the diagonal, and
// polarization of the diagonal), together with the F_n polynomial family
// these determinants expand into and the operator identities it satisfies.

#include <vector>

#include "frob/algebra.hpp"
#include "frob/poly.hpp"
#include "frob/report.hpp"

namespace frob {

class PhiEvaluator {
  public:
    PhiEvaluator(FinAlgebra algebra, Functional f);

    const FinAlgebra& algebra() const { return algebra_; }
    const Functional& functional() const { return f_; }
    bool tracial() const { return tracial_; }

    // Ground truth via the recursion; assumes nothing about f.
    Scalar phi_recursive(const std::vector<Vec>& args) const;
    // Cycle sum over S_n: sum_sigma sign(sigma) prod_cycles f(product along
    // the cycle).  Valid for tracial f only; throws NotTracial otherwise.
    Scalar phi_cycle_sum(const std::vector<Vec>& args) const;
    // Determinant of the almost-triangular moment matrix in f(a^k); equals
    // Phi_n(f)(a,...,a) and F_n at s_k = f(a^k).
    Scalar phi_diagonal(const Vec& a, unsigned n) const;
    // Finite-difference polarization of the diagonal route; for tracial f
    // this recovers Phi_n on arbitrary tuples.  Throws NotTracial.
    Scalar phi_polarized(const std::vector<Vec>& args) const;

    // Full tables on basis tuples, row-major over dim^n index tuples.
    std::vector<Scalar> phi_table(unsigned n) const;
    Vec phi1_table() const;
    Matrix phi2_table() const;
    std::vector<Matrix> phi3_table() const;

    struct CheckResult {
        bool pass;
        std::string witness; // failing tuple / equation when !pass
    };

    // f(1) = n and Phi_{n+1}(f) = 0 on all basis (n+1)-tuples.
    CheckResult is_n_homomorphism(unsigned n) const;
    // Multiplicativity and unit of (1/n!) Phi_n(f) on the n-th symmetric
    // power, checked on symmetrized basis tensors; on positives also
    // cross-checks the symmetrized product identity
    //   sum_sigma Phi_n(a_1 b_sigma(1), ..., a_n b_sigma(n))
    //     = (1/n!) sum_{sigma,tau} Phi_n(a_sigma(1) b_tau(1), ...).
    CheckResult symmetric_power_check(unsigned n) const;
    // Phi_n(f)(p, 1, ..., 1) == f(p) (f(1)-1) ... (f(1)-(n-1)).
    bool unit_slot_identity(const Vec& p, unsigned n) const;

  private:
    FinAlgebra algebra_;
    Functional f_;
    bool tracial_;
};

// F_n by the recursion F_n = (n-1)! sum_{k=1}^n (-1)^{k+1} s_k F_{n-k}/(n-k)!.
Poly fn_polynomial(unsigned n);
// F_n as a sum over integer partitions (multiplicities m_k, sum k m_k = n):
//   F_n = sum_m [ n! / prod_k (k^{m_k} m_k!) ] prod_k ((-1)^{k+1} s_k)^{m_k}.
Poly fn_closed_form(unsigned n);
// Coefficient of t^n/n! in exp(sum_k (-1)^{k+1} s_k t^k / k).
Poly fn_series_coefficient(unsigned n);
// n! e_n: determinant of the almost-triangular moment matrix with symbolic
// entries s_1..s_n (the Newton-identity determinant).
Poly fn_newton_determinant(unsigned n);

// Differential-operator identity checks for 1 <= n <= n_max:
//   dF_n/ds_1 = n F_{n-1};  d F_n = -n(n-1) F_{n-1} for
//   d = sum_{r>=2} r s_{r-1} d/ds_r;  and [d/ds_k, d] = (k+1) d/ds_{k+1}
// applied to every F_n.
std::vector<CheckEntry> operator_identities(unsigned n_max);
// Exact match of fn_polynomial(n) with fn_series_coefficient(n), n <= n_max.
std::vector<CheckEntry> fn_generating_check(unsigned n_max);
// The lowering operator d itself (r ranges over 2..r_max).
Poly d_operator(const Poly& p, unsigned r_max);

// Symbolic polarization of the diagonal: the symmetric multilinear identity
// in commuting symbols f_<sorted indices>, e.g. n=2 gives f_1*f_2 - f_12.
Poly polarize(unsigned n);

// Phi_4 table rebuilt from Phi_1..Phi_3 data only: f values, the pairing
// matrix R_{ij} = f_i f_j - Phi_2(i,j), and the Jordan tensor recovered from
// those tables.  Uses the cycle-type expansion of Phi_4 with every cycle
// value expressed through f, R, and Jordan products (valid for tracial f).
std::vector<Scalar> phi4_from_jordan(const Vec& f_values, const Matrix& R,
                                     const Tensor3& jordan);

} // namespace frob
