#pragma once

#include "frob/algebra.hpp"
#include "frob/groups.hpp"

#include <string>
#include <vector>

namespace frob {

// A named algebra with a distinguished tracial functional, plus the two
// properties the verification suites branch on.
struct AlgebraFixture {
    std::string name;
    FinAlgebra algebra;
    Functional functional;
    bool commutative;
    bool frobenius; // the pairing of the functional is nondegenerate
};

// Function algebras on 1..4 points, group algebras of order <= 6 with their
// regular characters, and truncated polynomial algebras.  Every entry is
// tracial; every entry here is also a Frobenius pair.
std::vector<AlgebraFixture> algebra_corpus();

// Pairs whose pairing is singular (degenerate), for rejection tests.
std::vector<AlgebraFixture> degenerate_corpus();

// A functional with f(1) = n whose n-homomorphism status is known.
struct HomFixture {
    std::string name;
    FinAlgebra algebra;
    Functional functional;
    unsigned n;
    bool expected;
};

// At least three genuine n-homomorphisms and three impostors, n <= 3.
std::vector<HomFixture> hom_corpus();

// The thirteen groups of order <= 8 used throughout: cyclic 2..8, the three
// noncyclic abelian ones, both dihedral groups, and the quaternions.
std::vector<std::pair<std::string, FiniteGroup>> group_corpus();

// Full irreducible character tables, values per element, for "c2", "c3",
// "c4", "c2xc2", and "s3" (names as in group_corpus, lowercased).
CharacterTable character_table_fixture(const std::string& name);

} // namespace frob
