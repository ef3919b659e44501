#pragma once

#include "frob/linalg.hpp"
#include "frob/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace frob {

// Exponent pattern (i_1, ..., i_m) for one point of C^m.
using MultiIndex = std::vector<unsigned>;

// |omega| = i_1 + ... + i_m.
unsigned weight(const MultiIndex& omega);

// Variable names: z[i1,...,im] for the generator indexed by omega, and
// x<j>_<k> for coordinate j of point k (both 1-based).
std::string z_name(const MultiIndex& omega);
std::string x_name(unsigned j, unsigned k);
// Inverse of z_name; throws BadInput on anything else.
MultiIndex parse_z_name(const std::string& name);

// Power sum: sum over points k of x_{1k}^{i_1} ... x_{mk}^{i_m}.
Poly newton_polynomial(const MultiIndex& omega, unsigned n, unsigned m);

// Fixed by the transposition (1 2) and the n-cycle of point indices.
bool is_multisymmetric(const Poly& p, unsigned n, unsigned m);

// Ring-homomorphic substitution z_omega -> newton_polynomial(omega).
Poly eval_star(const Poly& q, unsigned n, unsigned m);

// The alternating generator polynomials: F_{w} = z_w and
// F_{w1,...,wj} = z_{w1} F_{w2,...,wj} - sum_t F_{w2,...,w1+wt,...,wj}.
Poly frobenius_type_polynomial(const std::vector<MultiIndex>& omegas);

// True when the generator on n+1 positive-weight indices maps to zero under
// eval_star (it always should; the check is the point).  Throws
// WeightZeroIndex when some |omega_i| = 0.
bool syzygy_generator_check(const std::vector<MultiIndex>& omegas, unsigned n,
                            unsigned m);

// The exact linear system expressing degree-d multi-symmetric polynomials in
// the generators of weight <= n: columns are the z-monomials of weighted
// degree d (graded-lex order), rows the x-monomials reached by their images.
struct DegreeSystem {
    std::vector<Poly> z_monomials;
    std::vector<std::map<std::string, unsigned>> x_monomials;
    Matrix matrix; // matrix[r][c] = coefficient of x_monomials[r] in image of column c
};
DegreeSystem express_system(unsigned d, unsigned n, unsigned m);

// Writes p as a polynomial q in the z_omega with |omega| <= n such that
// eval_star(q, n, m) == p, solving one exact linear system per homogeneous
// part (free coordinates zero, so the output is deterministic).  Throws
// NotMultiSymmetric when p is not invariant, NoSolution when a part lies
// outside the image (impossible for genuine multi-symmetric input).
Poly express(const Poly& p, unsigned n, unsigned m);

// binomial(n+m, n) - 1: the number of generators z_omega with 1 <= |omega| <= n.
Int embedding_dimension(unsigned n, unsigned m);

} // namespace frob
