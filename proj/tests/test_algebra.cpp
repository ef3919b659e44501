#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frob/algebra.hpp"

#include <array>
#include <random>

using frob::FinAlgebra;
using frob::Functional;
using frob::Matrix;
using frob::Rat;
using frob::Scalar;
using frob::Tensor3;
using frob::Vec;

namespace {

// Group algebra from a 0-based Cayley table.
FinAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table) {
    std::size_t n = table.size();
    Tensor3 t(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j][table[i][j]] = Scalar(1);
    Vec unit(n, Scalar(0));
    unit[0] = Scalar(1);
    return FinAlgebra(std::move(t), std::move(unit));
}

std::vector<std::vector<std::size_t>> c2_table() { return {{0, 1}, {1, 0}}; }

// S3 as permutations of {0,1,2} under composition, identity first.
std::vector<std::vector<std::size_t>> s3_table() {
    std::vector<std::array<int, 3>> elems = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto compose = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
        return std::array<int, 3>{a[b[0]], a[b[1]], a[b[2]]};
    };
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            auto p = compose(elems[i], elems[j]);
            table[i][j] = std::find(elems.begin(), elems.end(), p) - elems.begin();
        }
    return table;
}

// Unrolled recursion values, used as a local oracle for the Phi tables.
Scalar phi2_of(const FinAlgebra& A, const Functional& f, const Vec& a, const Vec& b) {
    return f(a) * f(b) - f(A.multiply(a, b));
}
Scalar phi3_of(const FinAlgebra& A, const Functional& f, const Vec& a, const Vec& b,
               const Vec& c) {
    return f(a) * phi2_of(A, f, b, c) - phi2_of(A, f, A.multiply(a, b), c) -
           phi2_of(A, f, b, A.multiply(a, c));
}

struct PhiTables {
    Vec phi1;
    Matrix phi2;
    std::vector<Matrix> phi3;
};

PhiTables phi_tables(const FinAlgebra& A, const Functional& f) {
    std::size_t n = A.dim();
    PhiTables t{f.values, Matrix(n, n), std::vector<Matrix>(n, Matrix(n, n))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            t.phi2.at(i, j) = phi2_of(A, f, A.basis_vec(i), A.basis_vec(j));
            for (std::size_t k = 0; k < n; ++k)
                t.phi3[i].at(j, k) =
                    phi3_of(A, f, A.basis_vec(i), A.basis_vec(j), A.basis_vec(k));
        }
    return t;
}

} // namespace

TEST_CASE("construction validates") {
    FinAlgebra fa = frob::function_algebra(2);
    CHECK(fa.dim() == 2);
    CHECK(fa.is_commutative());
    Vec dp = fa.basis_vec(0);
    CHECK(fa.multiply(dp, dp) == dp);
    CHECK(fa.multiply(fa.unit(), dp) == dp);

    FinAlgebra c2 = group_algebra(c2_table());
    Vec g = c2.basis_vec(1);
    CHECK(c2.multiply(g, g) == c2.basis_vec(0));

    // Perturbing the unit-times-unit entry breaks associativity against
    // any other basis element.
    Tensor3 bad(2, std::vector<Vec>(2, Vec(2, Scalar(0))));
    bad[0][0][0] = Scalar(2);
    bad[0][1][1] = bad[1][0][1] = Scalar(1);
    bad[1][1][0] = Scalar(1);
    Vec unit = {Scalar(1), Scalar(0)};
    CHECK_THROWS_WITH_AS(FinAlgebra(bad, unit), doctest::Contains("e1"), frob::Error);
    try {
        FinAlgebra a(bad, unit);
    } catch (const frob::Error& e) {
        CHECK(e.code() == frob::ErrorCode::NonAssociative);
    }

    // Wrong unit vector.
    Tensor3 good(2, std::vector<Vec>(2, Vec(2, Scalar(0))));
    good[0][0][0] = Scalar(1);
    good[0][1][1] = good[1][0][1] = Scalar(1);
    good[1][1][0] = Scalar(1);
    try {
        FinAlgebra a(good, Vec{Scalar(0), Scalar(1)});
        FAIL("expected BadUnit");
    } catch (const frob::Error& e) {
        CHECK(e.code() == frob::ErrorCode::BadUnit);
    }
}

TEST_CASE("powers") {
    FinAlgebra tp = frob::truncated_polynomial_algebra(3);
    Vec t = tp.basis_vec(1);
    CHECK(tp.power(t, 0) == tp.unit());
    CHECK(tp.power(t, 2) == tp.basis_vec(2));
    CHECK(tp.power(t, 3) == Vec(3, Scalar(0)));
}

TEST_CASE("traciality") {
    FinAlgebra s3 = group_algebra(s3_table());
    CHECK_FALSE(s3.is_commutative());
    Functional chi{Vec{Scalar(6), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
    CHECK(frob::is_tracial(s3, chi));
    // Coordinate of a fixed non-central element is not tracial.
    Functional coord{Vec{Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
    CHECK_FALSE(frob::is_tracial(s3, coord));
    // Everything is tracial on a commutative algebra.
    FinAlgebra fa = frob::function_algebra(3);
    Functional any{Vec{Scalar(5), Scalar(Rat(-1, 3)), Scalar(2)}};
    CHECK(frob::is_tracial(fa, any));
}

TEST_CASE("frobenius pairing") {
    FinAlgebra c2 = group_algebra(c2_table());
    Functional f{Vec{Scalar(1), Scalar(0)}}; // chi/2
    auto P = frob::frobenius_pairing(c2, f);
    CHECK(P.R2 == Matrix::identity(2));
    CHECK(P.Rinv == Matrix::identity(2));

    Functional zero{Vec{Scalar(0), Scalar(0)}};
    CHECK_THROWS_AS(frob::frobenius_pairing(c2, zero), frob::Error);

    FinAlgebra fa = frob::function_algebra(2);
    Functional evp{Vec{Scalar(1), Scalar(0)}};
    try {
        frob::frobenius_pairing(fa, evp);
        FAIL("expected Degenerate");
    } catch (const frob::Error& e) {
        CHECK(e.code() == frob::ErrorCode::Degenerate);
    }

    FinAlgebra s3 = group_algebra(s3_table());
    Functional coord{Vec{Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
    try {
        frob::frobenius_pairing(s3, coord);
        FAIL("expected NotTracial");
    } catch (const frob::Error& e) {
        CHECK(e.code() == frob::ErrorCode::NotTracial);
    }
}

TEST_CASE("jordan constants") {
    FinAlgebra fa = frob::function_algebra(2);
    CHECK(frob::jordan_constants(fa) == fa.constants());

    auto table = s3_table();
    FinAlgebra s3 = group_algebra(table);
    auto jc = frob::jordan_constants(s3);
    // Two distinct transpositions multiply to the two distinct 3-cycles.
    std::size_t i = 3, j = 4;
    std::size_t ij = table[i][j], ji = table[j][i];
    CHECK(ij != ji);
    CHECK(jc[i][j][ij] == Scalar(Rat(1, 2)));
    CHECK(jc[i][j][ji] == Scalar(Rat(1, 2)));
    // Unit row is untouched by symmetrization.
    for (std::size_t k = 0; k < 6; ++k) CHECK(jc[0][k] == s3.constants()[0][k]);
}

TEST_CASE("jordan recovery round trip") {
    struct Case {
        FinAlgebra A;
        Functional f;
    };
    std::vector<Case> cases;
    cases.push_back({group_algebra(c2_table()), Functional{Vec{Scalar(1), Scalar(0)}}});
    cases.push_back(
        {frob::function_algebra(2), Functional{Vec{Scalar(1), Scalar(1)}}});
    {
        Vec chi6(6, Scalar(0));
        chi6[0] = Scalar(1); // normalized regular character of S3
        cases.push_back({group_algebra(s3_table()), Functional{chi6}});
    }
    for (const auto& c : cases) {
        auto t = phi_tables(c.A, c.f);
        auto rec = frob::recover_jordan(t.phi1, t.phi2, t.phi3);
        CHECK(rec == frob::jordan_constants(c.A));
    }
    // Degenerate data is rejected.
    FinAlgebra fa = frob::function_algebra(2);
    Functional evp{Vec{Scalar(1), Scalar(0)}};
    auto t = phi_tables(fa, evp);
    CHECK_THROWS_AS(frob::recover_jordan(t.phi1, t.phi2, t.phi3), frob::Error);
}

TEST_CASE("commutative recovery") {
    // Function algebra with the full evaluation sum.
    FinAlgebra fa = frob::function_algebra(2);
    Functional f{Vec{Scalar(1), Scalar(1)}};
    auto P = frob::frobenius_pairing(fa, f);
    CHECK(frob::recover_commutative(P) == fa.constants());

    // Truncated polynomials with the residue functional.
    FinAlgebra tp = frob::truncated_polynomial_algebra(2);
    Functional res{Vec{Scalar(0), Scalar(1)}};
    auto Pt = frob::frobenius_pairing(tp, res);
    CHECK(Pt.R2.at(0, 0) == Scalar(0));
    CHECK(Pt.R2.at(0, 1) == Scalar(1));
    CHECK(frob::recover_commutative(Pt) == tp.constants());

    // C2 with chi/2 recovers g*g = e.
    FinAlgebra c2 = group_algebra(c2_table());
    Functional half{Vec{Scalar(1), Scalar(0)}};
    auto Pc = frob::frobenius_pairing(c2, half);
    CHECK(frob::recover_commutative(Pc) == c2.constants());

    // Rebuilding the pairing from Phi tables gives the same tensors.
    auto t = phi_tables(c2, half);
    auto Pphi = frob::pairing_from_phi(t.phi1, t.phi2, t.phi3);
    CHECK(Pphi.R2 == Pc.R2);
    for (std::size_t i = 0; i < 2; ++i) CHECK(Pphi.R3[i] == Pc.R3[i]);
    CHECK(frob::recover_commutative(Pphi) == c2.constants());
}

TEST_CASE("associator identity for tracial functionals") {
    auto jordan = [](const FinAlgebra& A, const Vec& a, const Vec& b) {
        Vec ab = A.multiply(a, b), ba = A.multiply(b, a);
        Vec out(A.dim());
        for (std::size_t k = 0; k < A.dim(); ++k)
            out[k] = Scalar(Rat(1, 2)) * (ab[k] + ba[k]);
        return out;
    };
    FinAlgebra s3 = group_algebra(s3_table());
    Vec chi(6, Scalar(0));
    chi[0] = Scalar(6);
    Functional f{chi};
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> d(-3, 3);
    auto rand_vec = [&] {
        Vec v(6);
        for (auto& x : v) x = Scalar(d(rng));
        return v;
    };
    for (int trial = 0; trial < 100; ++trial) {
        Vec a = rand_vec(), b = rand_vec(), c = rand_vec();
        CHECK(f(jordan(s3, jordan(s3, a, b), c)) == f(jordan(s3, a, jordan(s3, b, c))));
    }
}
