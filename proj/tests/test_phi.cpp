#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frob/phi.hpp"

#include <algorithm>
#include <array>
#include <random>

using frob::Error;
using frob::ErrorCode;
using frob::FinAlgebra;
using frob::Functional;
using frob::Matrix;
using frob::PhiEvaluator;
using frob::Poly;
using frob::Rat;
using frob::Scalar;
using frob::Tensor3;
using frob::Vec;

namespace {

FinAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table) {
    std::size_t n = table.size();
    Tensor3 t(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j][table[i][j]] = Scalar(1);
    Vec unit(n, Scalar(0));
    unit[0] = Scalar(1);
    return FinAlgebra(std::move(t), std::move(unit));
}

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

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

// Regular character: order at the identity, zero elsewhere.
Functional regular_character(std::size_t order) {
    Vec v(order, Scalar(0));
    v[0] = Scalar(static_cast<int>(order));
    return Functional{v};
}

Vec random_vec(std::mt19937_64& rng, std::size_t dim, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Vec v(dim);
    for (auto& x : v) x = Scalar(d(rng));
    return v;
}

Scalar falling_factorial_at(const Poly& p, int w) {
    return p.eval({{"w", Scalar(w)}});
}

} // namespace

TEST_CASE("recursion matches the unrolled low-order formulas") {
    std::mt19937_64 rng(20260818);

    // Commutative fixture.
    FinAlgebra A = frob::function_algebra(3);
    Functional f{{Scalar(1), Scalar(1), Scalar(0)}};
    PhiEvaluator ev(A, f);
    // Noncommutative, non-tracial fixture: a coordinate functional on the
    // symmetric-group algebra.  The recursion needs only associativity.
    FinAlgebra B = group_algebra(s3_table());
    Vec coord(6, Scalar(0));
    coord[1] = Scalar(1);
    PhiEvaluator evb(B, Functional{coord});
    CHECK_FALSE(evb.tracial());

    for (int trial = 0; trial < 20; ++trial) {
        for (const PhiEvaluator* e : {&ev, &evb}) {
            const FinAlgebra& alg = e->algebra();
            const Functional& g = e->functional();
            Vec a = random_vec(rng, alg.dim(), -3, 3);
            Vec b = random_vec(rng, alg.dim(), -3, 3);
            Vec c = random_vec(rng, alg.dim(), -3, 3);
            CHECK(e->phi_recursive({a}) == g(a));
            CHECK(e->phi_recursive({a, b}) == g(a) * g(b) - g(alg.multiply(a, b)));
            Scalar lhs = e->phi_recursive({a, b, c});
            Scalar rhs = g(a) * g(b) * g(c) - g(a) * g(alg.multiply(b, c)) -
                         g(b) * g(alg.multiply(a, c)) - g(c) * g(alg.multiply(a, b)) +
                         g(alg.multiply(alg.multiply(a, b), c)) +
                         g(alg.multiply(alg.multiply(b, a), c));
            CHECK(lhs == rhs);
        }
    }

    // Hand value on the two-element group algebra with the halved regular
    // character: Phi_2(g, g) = 0*0 - f(g^2) = -1.
    FinAlgebra C2 = group_algebra(cyclic_table(2));
    PhiEvaluator evc(C2, Functional{{Scalar(1), Scalar(0)}});
    CHECK(evc.phi_recursive({C2.basis_vec(1), C2.basis_vec(1)}) == Scalar(-1));
}

TEST_CASE("all evaluation routes agree for tracial functionals") {
    std::mt19937_64 rng(7);
    std::vector<std::pair<FinAlgebra, Functional>> fixtures;
    fixtures.emplace_back(frob::function_algebra(2),
                          Functional{{Scalar(1), Scalar(1)}});
    fixtures.emplace_back(group_algebra(cyclic_table(3)), regular_character(3));
    fixtures.emplace_back(group_algebra(s3_table()), regular_character(6));

    for (const auto& [A, f] : fixtures) {
        PhiEvaluator ev(A, f);
        REQUIRE(ev.tracial());
        unsigned n_max = A.dim() <= 3 ? 4 : 3;
        for (unsigned n = 1; n <= n_max; ++n) {
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<Vec> args;
                for (unsigned t = 0; t < n; ++t)
                    args.push_back(random_vec(rng, A.dim(), -2, 2));
                Scalar base = ev.phi_recursive(args);
                CHECK(ev.phi_cycle_sum(args) == base);
                CHECK(ev.phi_polarized(args) == base);
                // Tracial Phi_n is symmetric in its arguments.
                std::shuffle(args.begin(), args.end(), rng);
                CHECK(ev.phi_recursive(args) == base);
            }
        }
    }

    // And on every basis pair/triple of the smallest fixtures.
    for (const auto& [A, f] : fixtures) {
        if (A.dim() > 3) continue;
        PhiEvaluator ev(A, f);
        auto t2 = ev.phi_table(2);
        auto t3 = ev.phi_table(3);
        std::size_t d = A.dim();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                std::vector<Vec> p = {A.basis_vec(i), A.basis_vec(j)};
                CHECK(ev.phi_cycle_sum(p) == t2[i * d + j]);
                for (std::size_t k = 0; k < d; ++k) {
                    std::vector<Vec> q = {A.basis_vec(i), A.basis_vec(j), A.basis_vec(k)};
                    CHECK(ev.phi_polarized(q) == t3[(i * d + j) * d + k]);
                }
            }
    }
}

TEST_CASE("non-tracial functionals are rejected by the symmetric routes") {
    FinAlgebra B = group_algebra(s3_table());
    Vec coord(6, Scalar(0));
    coord[3] = Scalar(1); // coordinate of a transposition
    PhiEvaluator ev(B, Functional{coord});
    std::vector<Vec> args = {B.basis_vec(1), B.basis_vec(3)};
    try {
        ev.phi_cycle_sum(args);
        FAIL("expected NotTracial");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotTracial);
    }
    try {
        ev.phi_polarized(args);
        FAIL("expected NotTracial");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotTracial);
    }
}

TEST_CASE("diagonal determinant equals the repeated-argument recursion") {
    std::mt19937_64 rng(11);
    FinAlgebra A = group_algebra(cyclic_table(4));
    PhiEvaluator ev(A, regular_character(4));
    for (unsigned n = 1; n <= 6; ++n) {
        Vec a = random_vec(rng, 4, -2, 2);
        std::vector<Vec> rep(n, a);
        CHECK(ev.phi_diagonal(a, n) == ev.phi_recursive(rep));
    }
    FinAlgebra T = frob::truncated_polynomial_algebra(3);
    PhiEvaluator evt(T, Functional{{Scalar(0), Scalar(0), Scalar(1)}});
    for (unsigned n = 1; n <= 5; ++n) {
        Vec a = random_vec(rng, 3, -3, 3);
        std::vector<Vec> rep(n, a);
        CHECK(evt.phi_diagonal(a, n) == evt.phi_recursive(rep));
    }
    // Phi_n at the unit is f(1)(f(1)-1)...(f(1)-n+1); for f(1) = n this is n!.
    FinAlgebra C3 = group_algebra(cyclic_table(3));
    PhiEvaluator evc(C3, regular_character(3));
    CHECK(evc.phi_diagonal(C3.unit(), 3) == Scalar(6));
    CHECK(evc.phi_diagonal(C3.unit(), 2) == Scalar(6)); // 3*2
    CHECK(evc.phi_diagonal(C3.unit(), 4) == Scalar(0)); // factor (3-3)
}

TEST_CASE("moment polynomials: goldens and route agreement") {
    // Determinant route first; it is the independent oracle for the rest.
    Poly d3 = frob::fn_newton_determinant(3);
    CHECK(d3.str() == "s1^3 - 3*s1*s2 + 2*s3");
    Poly d4 = frob::fn_newton_determinant(4);
    CHECK(d4.str() == "s1^4 - 6*s1^2*s2 + 8*s1*s3 + 3*s2^2 - 6*s4");

    CHECK(frob::fn_polynomial(0) == Poly(1));
    CHECK(frob::fn_polynomial(1).str() == "s1");
    CHECK(frob::fn_polynomial(2).str() == "s1^2 - s2");
    CHECK(frob::fn_polynomial(3) == d3);
    CHECK(frob::fn_polynomial(4) == d4);

    for (unsigned n = 0; n <= 8; ++n) {
        Poly p = frob::fn_polynomial(n);
        CHECK(frob::fn_closed_form(n) == p);
        CHECK(frob::fn_series_coefficient(n) == p);
        CHECK(frob::fn_newton_determinant(n) == p);
        // Weighted homogeneity of degree n with deg s_k = k.
        std::map<std::string, long> w;
        for (unsigned k = 1; k <= n; ++k) w["s" + std::to_string(k)] = long(k);
        CHECK(p.is_homogeneous(w, long(n)));
    }

    // Substituting s_k = w for all k yields the falling factorial.
    for (unsigned n = 1; n <= 6; ++n) {
        std::map<std::string, Poly> repl;
        for (unsigned k = 1; k <= n; ++k)
            repl["s" + std::to_string(k)] = Poly::variable("w");
        Poly p = frob::fn_polynomial(n).substitute(repl);
        for (int w = -2; w <= 8; ++w) {
            Scalar expect(1);
            for (unsigned i = 0; i < n; ++i) expect *= Scalar(w - static_cast<int>(i));
            CHECK(falling_factorial_at(p, w) == expect);
        }
        // In particular s_k = n gives n!.
        CHECK(falling_factorial_at(p, static_cast<int>(n)) ==
              Scalar(frob::factorial(n)));
    }
}

TEST_CASE("lowering and commutation operator identities") {
    Poly f3 = frob::fn_polynomial(3);
    CHECK(frob::d_operator(Poly::variable("s2"), 3) ==
          Poly(2) * Poly::variable("s1"));
    CHECK(frob::d_operator(Poly::variable("s3"), 3) ==
          Poly(3) * Poly::variable("s2"));
    CHECK(frob::d_operator(f3, 4) == Poly(-6) * frob::fn_polynomial(2));

    for (const auto& e : frob::operator_identities(8)) {
        INFO(e.name << " " << e.detail);
        CHECK(e.pass);
    }
    for (const auto& e : frob::fn_generating_check(8)) {
        INFO(e.name << " " << e.detail);
        CHECK(e.pass);
    }
}

TEST_CASE("symbolic polarization: goldens and numeric agreement") {
    CHECK(frob::polarize(1).str() == "f_1");
    CHECK(frob::polarize(2).str() == "f_1*f_2 - f_12");
    CHECK(frob::polarize(3).str() ==
          "f_1*f_2*f_3 - f_1*f_23 - f_12*f_3 - f_13*f_2 + 2*f_123");

    // Evaluate the symbols on a commutative fixture and compare with the
    // recursion on random tuples.
    std::mt19937_64 rng(23);
    FinAlgebra A = frob::function_algebra(3);
    Functional f{{Scalar(1), Scalar(2), Scalar(-1)}};
    PhiEvaluator ev(A, f);
    for (unsigned n = 2; n <= 4; ++n) {
        Poly p = frob::polarize(n);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Vec> args;
            for (unsigned t = 0; t < n; ++t) args.push_back(random_vec(rng, 3, -2, 2));
            std::map<std::string, Scalar> vals;
            for (const auto& name : p.vars()) {
                // name is "f_" followed by 1-based slot digits.
                Vec prod = A.unit();
                for (std::size_t c = 2; c < name.size(); ++c)
                    prod = A.multiply(prod, args[static_cast<std::size_t>(name[c] - '1')]);
                vals[name] = f(prod);
            }
            CHECK(p.eval(vals) == ev.phi_recursive(args));
        }
    }
}

TEST_CASE("n-homomorphism recognition on a mixed corpus") {
    using Fixture = std::tuple<FinAlgebra, Functional, unsigned, bool>;
    std::vector<Fixture> corpus;
    // Positives: sums of point evaluations and regular characters.
    corpus.emplace_back(frob::function_algebra(3),
                        Functional{{Scalar(1), Scalar(1), Scalar(0)}}, 2, true);
    corpus.emplace_back(frob::function_algebra(2), Functional{{Scalar(2), Scalar(0)}}, 2,
                        true);
    corpus.emplace_back(frob::function_algebra(3),
                        Functional{{Scalar(1), Scalar(1), Scalar(1)}}, 3, true);
    corpus.emplace_back(group_algebra(cyclic_table(2)), regular_character(2), 2, true);
    corpus.emplace_back(group_algebra(cyclic_table(3)), regular_character(3), 3, true);
    // Negatives: f(1) = n but some Phi_{n+1} value survives.
    corpus.emplace_back(frob::function_algebra(2), Functional{{Scalar(3), Scalar(-1)}}, 2,
                        false);
    corpus.emplace_back(frob::function_algebra(2),
                        Functional{{Scalar(Rat(1, 2)), Scalar(Rat(3, 2))}}, 2, false);
    corpus.emplace_back(group_algebra(cyclic_table(2)),
                        Functional{{Scalar(1), Scalar(0)}}, 1, false);

    for (const auto& [A, f, n, expect] : corpus) {
        PhiEvaluator ev(A, f);
        auto hom = ev.is_n_homomorphism(n);
        CHECK(hom.pass == expect);
        if (!expect) CHECK(!hom.witness.empty());
        // Multiplicativity on the symmetric power is equivalent.
        auto sym = ev.symmetric_power_check(n);
        CHECK(sym.pass == expect);
    }

    // Wrong n fails fast on the unit value.
    PhiEvaluator ev(group_algebra(cyclic_table(2)), regular_character(2));
    auto r = ev.is_n_homomorphism(3);
    CHECK_FALSE(r.pass);
    CHECK(r.witness.find("f(1)") != std::string::npos);

    // The diagonal witness for the (3, -1) fixture: Phi_3 on the unit slot
    // diagonal evaluates to 6.
    PhiEvaluator bad(frob::function_algebra(2),
                     Functional{{Scalar(3), Scalar(-1)}});
    Vec d1 = bad.algebra().basis_vec(0);
    CHECK(bad.phi_diagonal(d1, 3) == Scalar(6));
}

TEST_CASE("unit-slot identity") {
    std::mt19937_64 rng(31);
    FinAlgebra C2 = group_algebra(cyclic_table(2));
    PhiEvaluator ev(C2, regular_character(2));
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(ev.unit_slot_identity(C2.basis_vec(1), n));
        CHECK(ev.unit_slot_identity(random_vec(rng, 2, -3, 3), n));
    }
    FinAlgebra A = frob::function_algebra(3);
    PhiEvaluator eva(A, Functional{{Scalar(1), Scalar(1), Scalar(0)}});
    for (unsigned n = 1; n <= 4; ++n)
        CHECK(eva.unit_slot_identity(random_vec(rng, 3, -3, 3), n));
    // Holds for any linear functional, tracial or not.
    FinAlgebra B = group_algebra(s3_table());
    Vec coord(6, Scalar(0));
    coord[4] = Scalar(1);
    PhiEvaluator evb(B, Functional{coord});
    for (unsigned n = 1; n <= 3; ++n)
        CHECK(evb.unit_slot_identity(random_vec(rng, 6, -2, 2), n));
}

TEST_CASE("fourth table rebuilt from pairing and Jordan data") {
    std::vector<std::pair<FinAlgebra, Functional>> fixtures;
    fixtures.emplace_back(frob::function_algebra(2),
                          Functional{{Scalar(1), Scalar(1)}});
    fixtures.emplace_back(group_algebra(cyclic_table(4)), regular_character(4));
    fixtures.emplace_back(group_algebra(s3_table()), regular_character(6));

    for (const auto& [A, f] : fixtures) {
        PhiEvaluator ev(A, f);
        std::size_t d = A.dim();
        // Recover the multiplication data from the low tables alone.
        Matrix phi2 = ev.phi2_table();
        std::vector<Matrix> phi3 = ev.phi3_table();
        Tensor3 jordan = frob::recover_jordan(f.values, phi2, phi3);
        Matrix R(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                R.at(i, j) = f.values[i] * f.values[j] - phi2.at(i, j);
        CHECK(frob::phi4_from_jordan(f.values, R, jordan) == ev.phi_table(4));
    }
}

TEST_CASE("symmetrized Jordan and ordinary traces coincide") {
    // sum over S_4 of f(a o (b o (c o d))) equals the same sum with the
    // ordinary product, for tracial f.
    std::mt19937_64 rng(41);
    FinAlgebra B = group_algebra(s3_table());
    Functional f = regular_character(6);
    auto jmul = [&](const Vec& x, const Vec& y) {
        Vec xy = B.multiply(x, y), yx = B.multiply(y, x);
        for (std::size_t k = 0; k < xy.size(); ++k)
            xy[k] = (xy[k] + yx[k]) * Scalar(Rat(1, 2));
        return xy;
    };
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Vec> a;
        for (int t = 0; t < 4; ++t) a.push_back(random_vec(rng, 6, -2, 2));
        std::vector<std::size_t> p = {0, 1, 2, 3};
        Scalar jsum(0), osum(0);
        do {
            jsum += f(jmul(a[p[0]], jmul(a[p[1]], jmul(a[p[2]], a[p[3]]))));
            osum += f(B.multiply(a[p[0]],
                                 B.multiply(a[p[1]], B.multiply(a[p[2]], a[p[3]]))));
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(jsum == osum);
    }
}
