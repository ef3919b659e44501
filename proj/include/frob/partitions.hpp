#pragma once

// Set partitions of {1..n} and the partition expansion of Phi_n.  For a
// commutative algebra, grouping the cycle sum by the underlying partition
// gives
//   Phi_n(f)(a_1,...,a_n) = sum_pi (-1)^{n-|pi|} prod_b (|b|-1)! f(a_b),
// where a_b is the product of the a_i over a block b.  chi(n) records these
// coefficients as a formal integer combination of partitions.  Products of
// such combinations live on disjoint unions of ground sets and decompose as
// a sum over the quotient maps that glue the two ground sets along a partial
// matching (the amalgamated-union identity).

#include <map>
#include <string>
#include <vector>

#include "frob/phi.hpp"

namespace frob {

class SetPartition {
  public:
    SetPartition() = default; // the empty partition of {}
    // Blocks must partition {1..n}; they are brought to canonical form
    // (each block ascending, blocks ordered by least element).
    SetPartition(std::vector<std::vector<unsigned>> blocks, unsigned n);

    unsigned ground_size() const { return n_; }
    const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    bool operator==(const SetPartition& o) const {
        return n_ == o.n_ && blocks_ == o.blocks_;
    }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }
    bool operator<(const SetPartition& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return blocks_ < o.blocks_;
    }

    std::string str() const; // e.g. "{1,3}{2}"

  private:
    unsigned n_ = 0;
    std::vector<std::vector<unsigned>> blocks_;
};

// All partitions of {1..n}, enumerated by restricted growth strings.
std::vector<SetPartition> all_partitions(unsigned n);

// Formal Z-linear combination of set partitions (all on one ground size).
class SetPartitionVector {
  public:
    using Terms = std::map<SetPartition, Int>;

    SetPartitionVector() = default;

    const Terms& terms() const { return terms_; }
    Int coeff(const SetPartition& p) const;
    void add(const SetPartition& p, const Int& c);

    SetPartitionVector& operator+=(const SetPartitionVector& o);
    SetPartitionVector& operator-=(const SetPartitionVector& o);
    friend SetPartitionVector operator+(SetPartitionVector a,
                                        const SetPartitionVector& b) {
        return a += b;
    }
    friend SetPartitionVector operator-(SetPartitionVector a,
                                        const SetPartitionVector& b) {
        return a -= b;
    }
    bool operator==(const SetPartitionVector& o) const { return terms_ == o.terms_; }
    bool operator!=(const SetPartitionVector& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Terms terms_;
};

// Disjoint union of ground sets: blocks of a, then blocks of b shifted by
// the ground size of a.
SetPartition partition_product(const SetPartition& a, const SetPartition& b);
// Bilinear extension to formal combinations.
SetPartitionVector partition_product(const SetPartitionVector& a,
                                     const SetPartitionVector& b);

// chi(n) = sum over sigma in S_n of sign(sigma) times the cycle partition,
// collected by partition.
SetPartitionVector chi(unsigned n);
// The collected coefficient of one partition: (-1)^{n-|pi|} prod (|b|-1)!.
Int chi_coefficient(const SetPartition& p);

// Pull a partition of {1..m} back along q: {1..n} -> {1..m} (q[i-1] is the
// 1-based image of i).  q must be onto {1..m}; throws NotSurjective.
SetPartition pullback(const SetPartition& rho, const std::vector<unsigned>& q,
                      unsigned domain_size);
SetPartitionVector pullback(const SetPartitionVector& v,
                            const std::vector<unsigned>& q, unsigned domain_size);

// A gluing of {1..nx} and {1..ny}: the canonical quotient map onto
// {1..target_size} that identifies a partially matched pair of subsets and
// is injective on each side.  Classes are labelled in order of their least
// element of the disjoint union (X first, Y shifted by nx).
struct AmalgamatedUnion {
    std::vector<unsigned> q; // size nx+ny, values in 1..target_size
    unsigned target_size;
};
std::vector<AmalgamatedUnion> amalgamated_unions(unsigned nx, unsigned ny);

// chi(nx) chi(ny) == sum over amalgamated unions of the pullback of
// chi(target size), checked for every nx, ny >= 1 with nx+ny <= max_total.
std::vector<CheckEntry> verify_lemma10(unsigned max_total);

// prod over blocks of f(product of the a_i, i in the block in ascending
// order); args are 1-based ground elements.
Scalar functional_of_partition(const FinAlgebra& A, const Functional& f,
                               const SetPartition& p, const std::vector<Vec>& args);
Scalar eval_partition_vector(const FinAlgebra& A, const Functional& f,
                             const SetPartitionVector& v,
                             const std::vector<Vec>& args);
// sum over partitions of chi coefficients times block products; equals
// Phi_n(f) when the algebra is commutative.
Scalar phi_via_partitions(const PhiEvaluator& ev, const std::vector<Vec>& args);

} // namespace frob
