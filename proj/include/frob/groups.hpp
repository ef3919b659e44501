#pragma once

// Finite groups by Cayley table, their k-characters, and the group
// determinant.  The regular character chi (chi(e) = |G|, zero elsewhere)
// determines the group: Phi_1, Phi_2, Phi_3 of chi/|G| recover the identity,
// the inverse pairing, and for each pair (g, h) the unordered set {gh, hg};
// a backtracking completion then rebuilds the multiplication table (or the
// table and its opposite).  The determinant of the matrix with entries
// x_k at positions where g_i g_j^{-1} = g_k factors through the same
// machinery: it equals (1/n!) Phi_n(chi) on the generic element sum x_i g_i.

#include <optional>
#include <string>
#include <vector>

#include "frob/phi.hpp"

namespace frob {

class FiniteGroup {
  public:
    // table[i][j] is the 0-based index of g_i g_j.  Validates that the
    // first element is a two-sided identity, that rows and columns are
    // permutations, that every element has a two-sided inverse, and that
    // multiplication is associative.
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table,
                         std::vector<std::string> labels = {});

    std::size_t order() const { return n_; }
    std::size_t mul(std::size_t i, std::size_t j) const { return table_[i][j]; }
    std::size_t inv(std::size_t i) const { return inverse_[i]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Smallest k >= 1 with g^k = e.
    std::size_t element_order(std::size_t i) const;
    bool is_abelian() const;

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

  private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::string> labels_;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n, n >= 3
FiniteGroup quaternion_group();             // order 8
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup opposite_group(const FiniteGroup& g);

// The group algebra as a structure-constant algebra, basis named by labels.
FinAlgebra group_algebra(const FiniteGroup& g);
// chi(e) = |G|, chi(g) = 0 otherwise.
Functional regular_character(const FiniteGroup& g);

// Full Phi_k table of the regular character (normalized: of chi/|G|).
struct KCharacterData {
    unsigned k = 0;
    bool normalized = true;
    std::size_t order = 0;
    std::vector<Scalar> values; // row-major over order^k tuples

    const Scalar& at(std::size_t i) const { return values[i]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return values[i * order + j]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t l) const {
        return values[(i * order + j) * order + l];
    }
};
KCharacterData k_character(const FiniteGroup& g, unsigned k, bool normalized);

// det of [x_{k(i,j)}] with g_i g_j^{-1} = g_k, expanded exactly; the x_1^n
// coefficient is +1.  Orders above 8 are refused.
Poly group_determinant(const FiniteGroup& g);
// The same determinant through the moment polynomials: s_k = chi(a^k) for
// the generic a = sum x_i g_i, then (1/n!) F_n(s_1..s_n); raw skips the
// 1/n! (the two differ by exactly n!).  Checks equality with the direct
// determinant.  Orders above 6 are refused.
Poly phi_group_determinant(const FiniteGroup& g, bool raw = false);

struct Irreducible {
    unsigned dim = 1;
    Vec values; // one per element, in table order
};
struct CharacterTable {
    unsigned cyclotomic_order = 0; // 0 = rational entries only
    std::vector<Irreducible> irreducibles;
};
// Rows orthonormal under (1/|G|) sum_g chi_i(g) conj(chi_j(g)).
bool characters_orthonormal(const FiniteGroup& g, const CharacterTable& ct);
// prod_i [ (1/n_i!) F_{n_i}(chi_i(a), chi_i(a^2), ...) ]^{n_i} equals the
// group determinant.  Throws BadCharacterTable when sum n_i^2 != |G| or a
// row has the wrong length.
bool verify_factorization(const FiniteGroup& g, const CharacterTable& ct);

// For each ordered pair (i, j), the set {g_i g_j, g_j g_i} (1 or 2 indices,
// sorted).
struct PairSetTable {
    std::size_t n = 0;
    std::vector<std::vector<std::vector<std::size_t>>> entry; // [i][j] -> set

    const std::vector<std::size_t>& at(std::size_t i, std::size_t j) const {
        return entry[i][j];
    }
};
PairSetTable pair_sets_of(const FiniteGroup& g);

struct RecoveredGroupData {
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;
    PairSetTable pair_sets;
};
// Identity from Phi_1 = 1, inverses from Phi_2 = -1, and the pair sets from
// the Jordan structure constants solved out of the degree-3 identity.
// Inputs must be normalized k-character data of degrees 1, 2, 3.
RecoveredGroupData recover_group_data(const KCharacterData& k1,
                                      const KCharacterData& k2,
                                      const KCharacterData& k3);

// All multiplication tables consistent with the pair sets: orientation
// search with associativity pruning.  A table coming from a group yields
// exactly that group (abelian) or the group and its opposite; anything else
// throws Inconsistent.
std::vector<FiniteGroup> mansfield_reconstruct(const PairSetTable& ps);

// Bijection search respecting multiplication, pruned by element orders.
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

} // namespace frob
