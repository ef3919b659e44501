#include "frob/corpus.hpp"

namespace frob {

namespace {

Functional weights(std::vector<long> w) {
    Vec v;
    v.reserve(w.size());
    for (long x : w) v.push_back(Scalar(x));
    return Functional{std::move(v)};
}

} // namespace

std::vector<AlgebraFixture> algebra_corpus() {
    std::vector<AlgebraFixture> out;
    out.push_back({"functions on 1 point", function_algebra(1), weights({1}), true, true});
    out.push_back({"functions on 2 points", function_algebra(2), weights({1, 1}), true, true});
    out.push_back(
        {"functions on 3 points", function_algebra(3), weights({1, 2, 1}), true, true});
    out.push_back({"functions on 4 points", function_algebra(4), weights({1, 1, 2, 3}),
                   true, true});
    for (std::size_t n = 2; n <= 6; ++n) {
        FiniteGroup g = cyclic_group(n);
        out.push_back({"group algebra C" + std::to_string(n), group_algebra(g),
                       regular_character(g), true, true});
    }
    {
        FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
        out.push_back(
            {"group algebra C2xC2", group_algebra(v4), regular_character(v4), true, true});
        FiniteGroup s3 = dihedral_group(3);
        out.push_back(
            {"group algebra S3", group_algebra(s3), regular_character(s3), false, true});
    }
    out.push_back({"truncated polynomials, order 2", truncated_polynomial_algebra(2),
                   weights({0, 1}), true, true});
    out.push_back({"truncated polynomials, order 3", truncated_polynomial_algebra(3),
                   weights({0, 0, 1}), true, true});
    return out;
}

std::vector<AlgebraFixture> degenerate_corpus() {
    std::vector<AlgebraFixture> out;
    out.push_back({"point evaluation on 2 points", function_algebra(2), weights({1, 0}),
                   true, false});
    out.push_back({"constant term of truncated polynomials",
                   truncated_polynomial_algebra(2), weights({1, 0}), true, false});
    {
        FiniteGroup c2 = cyclic_group(2);
        out.push_back({"all-ones functional on the C2 algebra", group_algebra(c2),
                       weights({1, 1}), true, false});
    }
    return out;
}

std::vector<HomFixture> hom_corpus() {
    std::vector<HomFixture> out;
    out.push_back({"evaluation at one point", function_algebra(1), weights({1}), 1, true});
    out.push_back(
        {"two distinct points", function_algebra(2), weights({1, 1}), 2, true});
    out.push_back({"a double point", function_algebra(2), weights({2, 0}), 2, true});
    out.push_back({"a double point plus a simple one", function_algebra(3),
                   weights({2, 1, 0}), 3, true});
    {
        FiniteGroup c2 = cyclic_group(2);
        out.push_back({"regular character of C2", group_algebra(c2),
                       regular_character(c2), 2, true});
        FiniteGroup c3 = cyclic_group(3);
        out.push_back({"regular character of C3", group_algebra(c3),
                       regular_character(c3), 3, true});
    }
    out.push_back({"mock weights 3 and -1", function_algebra(2), weights({3, -1}), 2,
                   false});
    {
        Vec halves = {Scalar(Rat(1, 2)), Scalar(Rat(3, 2))};
        out.push_back({"fractional weights", function_algebra(2), Functional{halves}, 2,
                       false});
    }
    out.push_back({"mock weights 4, -1, 0", function_algebra(3), weights({4, -1, 0}), 3,
                   false});
    {
        // Twice the trivial character: a sum of two ring homomorphisms, so a
        // genuine 2-homomorphism that is not an evaluation on points.
        FiniteGroup c2 = cyclic_group(2);
        out.push_back({"doubled trivial character of C2", group_algebra(c2),
                       weights({2, 2}), 2, true});
        // chi_triv with 3/2 and chi_sign with 1/2: right value on the unit,
        // fractional multiplicities, so not a 2-homomorphism.
        out.push_back({"unbalanced character mix on C2", group_algebra(c2),
                       weights({2, 1}), 2, false});
    }
    return out;
}

std::vector<std::pair<std::string, FiniteGroup>> group_corpus() {
    std::vector<std::pair<std::string, FiniteGroup>> out;
    for (std::size_t n = 2; n <= 8; ++n)
        out.emplace_back("C" + std::to_string(n), cyclic_group(n));
    out.emplace_back("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
    out.emplace_back("C2xC4", direct_product(cyclic_group(2), cyclic_group(4)));
    out.emplace_back("C2xC2xC2",
                     direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                    cyclic_group(2)));
    out.emplace_back("S3", dihedral_group(3));
    out.emplace_back("D4", dihedral_group(4));
    out.emplace_back("Q8", quaternion_group());
    return out;
}

CharacterTable character_table_fixture(const std::string& name) {
    if (name == "c2")
        return {0, {{1, {Scalar(1), Scalar(1)}}, {1, {Scalar(1), Scalar(-1)}}}};
    if (name == "c3") {
        Scalar z = Scalar::zeta(3);
        return {3,
                {{1, {Scalar(1), Scalar(1), Scalar(1)}},
                 {1, {Scalar(1), z, z * z}},
                 {1, {Scalar(1), z * z, z}}}};
    }
    if (name == "c4") {
        Scalar i = Scalar::zeta(4);
        CharacterTable t{4, {}};
        for (int p = 0; p < 4; ++p) {
            Irreducible chi{1, {}};
            for (int k = 0; k < 4; ++k) chi.values.push_back(i.pow(p * k));
            t.irreducibles.push_back(chi);
        }
        return t;
    }
    if (name == "c2xc2") {
        // Elements in direct-product order (0,0), (0,1), (1,0), (1,1).
        CharacterTable t{0, {}};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Irreducible chi{1, {}};
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        chi.values.push_back(Scalar((a * i + b * j) % 2 == 0 ? 1 : -1));
                t.irreducibles.push_back(chi);
            }
        return t;
    }
    if (name == "s3") {
        // Elements e, r, r2, s, sr, sr2.
        return {0,
                {{1, Vec(6, Scalar(1))},
                 {1, {Scalar(1), Scalar(1), Scalar(1), Scalar(-1), Scalar(-1), Scalar(-1)}},
                 {2, {Scalar(2), Scalar(-1), Scalar(-1), Scalar(0), Scalar(0), Scalar(0)}}}};
    }
    fail(ErrorCode::BadInput, "no character table fixture named " + name);
}

} // namespace frob
