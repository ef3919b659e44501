#pragma once

#include "frob/algebra.hpp"
#include "frob/phi.hpp"

#include <map>
#include <string>
#include <vector>

namespace frob {

// A finite set of labelled points. Functions on it form an algebra with the
// idempotent basis of point indicators, which is where evaluation functionals
// and their decompositions live.
class FiniteSpace {
  public:
    // Points labelled p1..pm.
    explicit FiniteSpace(std::size_t m);
    // Custom labels; must be nonempty and pairwise distinct.
    explicit FiniteSpace(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    // Throws UnknownPoint for a label that is not in the space.
    std::size_t index_of(const std::string& label) const;

    // Functions on the space, basis named delta_<label>.
    FinAlgebra algebra() const;

  private:
    std::vector<std::string> labels_;
};

// An unordered selection of points with repetition.
struct PointMultiset {
    // label -> multiplicity; entries with multiplicity zero are not stored.
    std::map<std::string, std::size_t> counts;

    std::size_t total() const;
    void add(const std::string& label, std::size_t times = 1);
    bool operator==(const PointMultiset&) const = default;
    std::string str() const; // e.g. "{p1, p1, p3}"
};

// The functional phi -> sum of phi over the points of the multiset (with
// multiplicity).  Its value on delta_x is the multiplicity of x, and on the
// unit it is the total size.
Functional evaluation_functional(const PointMultiset& pts, const FiniteSpace& space);

// Inverse of the above: reads the multiplicity of x off f(delta_x).  Validates
// that f genuinely is such an evaluation: every weight a nonnegative integer,
// weights summing to n, and the (n+1)-fold alternating form vanishing.
// Throws NotAnNHomomorphism naming the first failing condition.
PointMultiset decompose(const Functional& f, const FiniteSpace& space, std::size_t n);

} // namespace frob
