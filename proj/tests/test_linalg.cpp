#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frob/linalg.hpp"
#include "frob/poly.hpp"

#include <random>

using frob::Matrix;
using frob::Poly;
using frob::Rat;
using frob::Scalar;

namespace {
Matrix from_rows(const std::vector<std::vector<int>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar(rows[i][j]);
    return m;
}
} // namespace

TEST_CASE("determinants") {
    CHECK(from_rows({{1, 2}, {3, 4}}).det() == Scalar(-2));
    CHECK(from_rows({{1, 2}, {2, 4}}).det() == Scalar(0));
    CHECK(from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}).det() == Scalar(30));
    CHECK(Matrix::identity(4).det() == Scalar(1));
    // Vandermonde on 1, 2, 3: det = (2-1)(3-1)(3-2) = 2.
    CHECK(from_rows({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}}).det() == Scalar(2));
}

TEST_CASE("inverse and solve") {
    Matrix a = from_rows({{2, 1}, {1, 1}});
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK(a * *inv == Matrix::identity(2));
    CHECK(*inv * a == Matrix::identity(2));
    CHECK_FALSE(from_rows({{1, 2}, {2, 4}}).inverse().has_value());

    auto x = a.solve({Scalar(3), Scalar(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(1));
    CHECK((*x)[1] == Scalar(1));

    // Inconsistent system.
    Matrix s = from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(s.solve({Scalar(0), Scalar(1)}).has_value());
    // Underdetermined: free variable pinned to zero.
    Matrix u = from_rows({{1, 1}});
    auto y = u.solve({Scalar(5)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == Scalar(5));
    CHECK((*y)[1] == Scalar(0));
}

TEST_CASE("rank") {
    CHECK(from_rows({{1, 2}, {2, 4}}).rank() == 1);
    CHECK(from_rows({{1, 0}, {0, 1}}).rank() == 2);
    CHECK(Matrix(3, 3).rank() == 0);
    CHECK(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).rank() == 2);
}

TEST_CASE("randomized inverse round trip") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> d(-6, 6);
    int done = 0;
    while (done < 15) {
        Matrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Scalar(d(rng));
        auto inv = m.inverse();
        if (!inv) {
            CHECK(m.det() == Scalar(0));
            continue;
        }
        ++done;
        CHECK(m * *inv == Matrix::identity(4));
        CHECK(m.det() * inv->det() == Scalar(1));
    }
}

TEST_CASE("memoized determinant matches elimination") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 1 + trial % 5;
        Matrix m(n, n);
        std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = Scalar(d(rng));
                rows[i][j] = m.at(i, j);
            }
        CHECK(frob::det_memo(rows) == m.det());
    }
}

TEST_CASE("polynomial determinant") {
    // det [[x1, x2], [x2, x1]] = x1^2 - x2^2 (the 2x2 circulant).
    Poly x1 = Poly::variable("x1"), x2 = Poly::variable("x2");
    std::vector<std::vector<Poly>> m = {{x1, x2}, {x2, x1}};
    CHECK(frob::det_memo(m) == x1 * x1 - x2 * x2);
    // 3x3 circulant: x1^3 + x2^3 + x3^3 - 3 x1 x2 x3 over the cyclic shifts.
    Poly x3 = Poly::variable("x3");
    std::vector<std::vector<Poly>> c3 = {{x1, x2, x3}, {x3, x1, x2}, {x2, x3, x1}};
    CHECK(frob::det_memo(c3) ==
          x1.pow(3) + x2.pow(3) + x3.pow(3) - Poly(3) * x1 * x2 * x3);
    // Empty matrix has determinant 1 by convention.
    std::vector<std::vector<Poly>> empty;
    CHECK(frob::det_memo(empty) == Poly(1));
}
