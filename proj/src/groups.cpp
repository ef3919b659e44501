#include "frob/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace frob {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    labels[0] = "e";
    for (std::size_t i = 1; i < n; ++i) labels[i] = "g" + std::to_string(i + 1);
    return labels;
}

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table,
                         std::vector<std::string> labels)
    : n_(table.size()), table_(std::move(table)), labels_(std::move(labels)) {
    if (n_ == 0) fail(ErrorCode::MalformedData, "empty multiplication table");
    for (const auto& row : table_)
        if (row.size() != n_) fail(ErrorCode::MalformedData, "table is not square");
    for (const auto& row : table_)
        for (std::size_t v : row)
            if (v >= n_) fail(ErrorCode::MalformedData, "table index out of range");
    if (labels_.empty()) labels_ = default_labels(n_);
    if (labels_.size() != n_)
        fail(ErrorCode::MalformedData, "label count does not match the order");

    // First element is a two-sided identity.
    for (std::size_t i = 0; i < n_; ++i)
        if (table_[0][i] != i || table_[i][0] != i)
            fail(ErrorCode::NoIdentity, "first element is not a two-sided identity");

    // Rows and columns are permutations.
    for (std::size_t i = 0; i < n_; ++i) {
        std::vector<bool> row(n_, false), col(n_, false);
        for (std::size_t j = 0; j < n_; ++j) {
            if (row[table_[i][j]])
                fail(ErrorCode::NotLatin, "row of " + labels_[i] + " repeats " +
                                              labels_[table_[i][j]]);
            row[table_[i][j]] = true;
            if (col[table_[j][i]])
                fail(ErrorCode::NotLatin, "column of " + labels_[i] + " repeats " +
                                              labels_[table_[j][i]]);
            col[table_[j][i]] = true;
        }
    }

    // Two-sided inverses.
    inverse_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        std::size_t j = 0;
        while (j < n_ && table_[i][j] != 0) ++j;
        if (j == n_ || table_[j][i] != 0)
            fail(ErrorCode::NoInverse, labels_[i] + " has no two-sided inverse");
        inverse_[i] = j;
    }

    // Associativity on all triples.
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
                    fail(ErrorCode::NotAssociative,
                         "(" + labels_[i] + " " + labels_[j] + ") " + labels_[k] +
                             " != " + labels_[i] + " (" + labels_[j] + " " + labels_[k] +
                             ")");
}

std::size_t FiniteGroup::element_order(std::size_t i) const {
    std::size_t p = i, k = 1;
    while (p != 0) {
        p = table_[p][i];
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (table_[i][j] != table_[j][i]) return false;
    return true;
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) fail(ErrorCode::BadInput, "order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup dihedral_group(std::size_t n) {
    if (n < 3) fail(ErrorCode::BadInput, "dihedral group needs n >= 3");
    // Element s^t r^a at index t*n + a; r s = s r^{-1}.
    auto idx = [n](std::size_t t, std::size_t a) { return t * n + a; };
    std::size_t m = 2 * n;
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t u = 0; u < 2; ++u)
                for (std::size_t b = 0; b < n; ++b) {
                    std::size_t aa = u == 0 ? a : (n - a) % n;
                    table[idx(t, a)][idx(u, b)] = idx((t + u) % 2, (aa + b) % n);
                }
    return FiniteGroup(std::move(table));
}

FiniteGroup quaternion_group() {
    // Axes 1, i, j, k; element index 2*axis + sign (0 for +, 1 for -).
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t b = 0; b < 4; ++b)
                for (std::size_t u = 0; u < 2; ++u)
                    t[2 * a + s][2 * b + u] =
                        2 * axis[a][b] + ((s + u + neg[a][b]) % 2);
    return FiniteGroup(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    std::size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            labels[i * nb + j] = "(" + a.labels()[i] + "," + b.labels()[j] + ")";
            for (std::size_t p = 0; p < na; ++p)
                for (std::size_t q = 0; q < nb; ++q)
                    t[i * nb + j][p * nb + q] = a.mul(i, p) * nb + b.mul(j, q);
        }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup opposite_group(const FiniteGroup& g) {
    std::size_t n = g.order();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = g.mul(j, i);
    return FiniteGroup(std::move(t), g.labels());
}

FinAlgebra group_algebra(const FiniteGroup& g) {
    std::size_t n = g.order();
    Tensor3 t(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j][g.mul(i, j)] = Scalar(1);
    Vec unit(n, Scalar(0));
    unit[0] = Scalar(1);
    return FinAlgebra(std::move(t), std::move(unit), g.labels());
}

Functional regular_character(const FiniteGroup& g) {
    Vec v(g.order(), Scalar(0));
    v[0] = Scalar(static_cast<Int>(g.order()));
    return Functional{v};
}

KCharacterData k_character(const FiniteGroup& g, unsigned k, bool normalized) {
    if (k < 1 || k > 3) fail(ErrorCode::BadInput, "k must be 1, 2, or 3");
    Functional f = regular_character(g);
    if (normalized) {
        Scalar inv_n(Rat(Int(1), Int(g.order())));
        for (auto& v : f.values) v *= inv_n;
    }
    PhiEvaluator ev(group_algebra(g), f);
    return {k, normalized, g.order(), ev.phi_table(k)};
}

namespace {

// Coefficient vectors of a^k for the generic element a = sum_i x_i g_i:
// powers[k-1][h] is the coefficient polynomial of g_h in a^k.
std::vector<std::vector<Poly>> generic_powers(const FiniteGroup& g, unsigned k_max) {
    std::size_t n = g.order();
    std::vector<Poly> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = Poly::variable("x" + std::to_string(i + 1));
    std::vector<std::vector<Poly>> powers;
    powers.push_back(x);
    for (unsigned k = 2; k <= k_max; ++k) {
        const auto& cur = powers.back();
        std::vector<Poly> next(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) next[g.mul(i, j)] += cur[i] * x[j];
        powers.push_back(std::move(next));
    }
    return powers;
}

} // namespace

Poly group_determinant(const FiniteGroup& g) {
    std::size_t n = g.order();
    if (n > 8) fail(ErrorCode::OrderTooLarge, "symbolic determinant limited to order 8");
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = Poly::variable("x" + std::to_string(g.mul(i, g.inv(j)) + 1));
    Poly det = det_memo(m);
    std::map<std::string, unsigned> lead;
    lead["x1"] = static_cast<unsigned>(n);
    if (!det.coeff(lead).is_one())
        fail(ErrorCode::Inconsistent, "x1^n coefficient is not 1");
    return det;
}

Poly phi_group_determinant(const FiniteGroup& g, bool raw) {
    std::size_t n = g.order();
    if (n > 6) fail(ErrorCode::OrderTooLarge, "moment-polynomial route limited to order 6");
    auto powers = generic_powers(g, static_cast<unsigned>(n));
    std::map<std::string, Poly> subs;
    for (unsigned k = 1; k <= n; ++k)
        subs["s" + std::to_string(k)] =
            Poly(Scalar(static_cast<Int>(n))) * powers[k - 1][0];
    Poly raw_det = fn_polynomial(static_cast<unsigned>(n)).substitute(subs);
    Poly normalized = raw_det * Poly(Scalar(Rat(Int(1), factorial(static_cast<unsigned>(n)))));
    if (normalized != group_determinant(g))
        fail(ErrorCode::Inconsistent,
             "moment-polynomial determinant disagrees with the direct expansion");
    return raw ? raw_det : normalized;
}

bool characters_orthonormal(const FiniteGroup& g, const CharacterTable& ct) {
    std::size_t n = g.order();
    Scalar inv_n(Rat(Int(1), Int(n)));
    for (std::size_t a = 0; a < ct.irreducibles.size(); ++a)
        for (std::size_t b = 0; b < ct.irreducibles.size(); ++b) {
            const Vec& u = ct.irreducibles[a].values;
            const Vec& v = ct.irreducibles[b].values;
            if (u.size() != n || v.size() != n)
                fail(ErrorCode::BadCharacterTable, "character row length mismatch");
            Scalar dot(0);
            for (std::size_t i = 0; i < n; ++i) dot += u[i] * v[i].conj();
            if (inv_n * dot != Scalar(a == b ? 1 : 0)) return false;
        }
    return true;
}

bool verify_factorization(const FiniteGroup& g, const CharacterTable& ct) {
    std::size_t n = g.order();
    std::size_t dim_sum = 0;
    unsigned k_max = 1;
    for (const auto& irr : ct.irreducibles) {
        if (irr.dim == 0) fail(ErrorCode::BadCharacterTable, "zero-dimensional row");
        if (irr.values.size() != n)
            fail(ErrorCode::BadCharacterTable, "character row length mismatch");
        dim_sum += std::size_t(irr.dim) * irr.dim;
        k_max = std::max(k_max, irr.dim);
    }
    if (dim_sum != n)
        fail(ErrorCode::BadCharacterTable,
             "squared dimensions sum to " + std::to_string(dim_sum) + ", expected " +
                 std::to_string(n));
    auto powers = generic_powers(g, k_max);
    Poly product(1);
    for (const auto& irr : ct.irreducibles) {
        std::map<std::string, Poly> subs;
        for (unsigned k = 1; k <= irr.dim; ++k) {
            Poly sk;
            for (std::size_t h = 0; h < n; ++h) {
                if (irr.values[h].is_zero()) continue;
                sk += powers[k - 1][h] * Poly(irr.values[h]);
            }
            subs["s" + std::to_string(k)] = sk;
        }
        Poly factor = fn_polynomial(irr.dim).substitute(subs) *
                      Poly(Scalar(Rat(Int(1), factorial(irr.dim))));
        product *= factor.pow(irr.dim);
    }
    return product == group_determinant(g);
}

PairSetTable pair_sets_of(const FiniteGroup& g) {
    std::size_t n = g.order();
    PairSetTable ps;
    ps.n = n;
    ps.entry.assign(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t u = g.mul(i, j), v = g.mul(j, i);
            if (u == v)
                ps.entry[i][j] = {u};
            else
                ps.entry[i][j] = {std::min(u, v), std::max(u, v)};
        }
    return ps;
}

RecoveredGroupData recover_group_data(const KCharacterData& k1,
                                      const KCharacterData& k2,
                                      const KCharacterData& k3) {
    if (k1.k != 1 || k2.k != 2 || k3.k != 3)
        fail(ErrorCode::BadInput, "expected k-character data of degrees 1, 2, 3");
    if (!k1.normalized || !k2.normalized || !k3.normalized)
        fail(ErrorCode::BadInput, "expected normalized k-character data");
    std::size_t n = k1.order;
    if (k2.order != n || k3.order != n)
        fail(ErrorCode::BadInput, "k-character data orders disagree");
    if (k1.values.size() != n || k2.values.size() != n * n ||
        k3.values.size() != n * n * n)
        fail(ErrorCode::MalformedData, "k-character table size mismatch");

    RecoveredGroupData out;
    // Identity: the unique element with Phi_1 = 1 (all others 0).
    std::size_t found = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (k1.at(i).is_one()) {
            if (found != n)
                fail(ErrorCode::MalformedData, "two candidate identity elements");
            found = i;
        } else if (!k1.at(i).is_zero()) {
            fail(ErrorCode::MalformedData, "Phi_1 value outside {0,1}");
        }
    }
    if (found == n) fail(ErrorCode::MalformedData, "no identity element in Phi_1 data");
    out.identity = found;

    // Inverses: Phi_2(g,h) = -1 exactly when gh = e, g != e.
    out.inverse.assign(n, n);
    out.inverse[found] = found;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == found) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (k2.at(i, j) != Scalar(-1)) continue;
            if (out.inverse[i] != n)
                fail(ErrorCode::MalformedData,
                     "two inverse candidates for element " + std::to_string(i + 1));
            out.inverse[i] = j;
        }
        if (out.inverse[i] == n)
            fail(ErrorCode::MalformedData,
                 "no inverse candidate for element " + std::to_string(i + 1));
    }

    // Jordan structure constants from the degree-3 identity, then the pair
    // sets: a coefficient 1 names both products, two 1/2s name the pair.
    Matrix phi2(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) phi2.at(i, j) = k2.at(i, j);
    std::vector<Matrix> phi3(n, Matrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) phi3[i].at(j, l) = k3.at(i, j, l);
    Tensor3 jordan = recover_jordan(k1.values, phi2, phi3);

    const Scalar half(Rat(1, 2));
    PairSetTable ps;
    ps.n = n;
    ps.entry.assign(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> ones, halves;
            for (std::size_t l = 0; l < n; ++l) {
                const Scalar& a = jordan[i][j][l];
                if (a.is_zero()) continue;
                if (a.is_one())
                    ones.push_back(l);
                else if (a == half)
                    halves.push_back(l);
                else
                    fail(ErrorCode::MalformedData,
                         "Jordan constant outside {0, 1/2, 1}: " + a.str());
            }
            if (ones.size() == 1 && halves.empty())
                ps.entry[i][j] = {ones[0]};
            else if (ones.empty() && halves.size() == 2)
                ps.entry[i][j] = {halves[0], halves[1]};
            else
                fail(ErrorCode::MalformedData,
                     "Jordan row does not sum to one product pair");
        }
    out.pair_sets = std::move(ps);
    return out;
}

namespace {

constexpr std::size_t UNSET = static_cast<std::size_t>(-1);

struct Completion {
    std::size_t n;
    const PairSetTable& ps;
    std::vector<std::vector<std::size_t>> m;
    std::vector<std::pair<std::size_t, std::size_t>> choices; // i < j, two-element sets
    std::vector<FiniteGroup> results;

    explicit Completion(const PairSetTable& table) : n(table.n), ps(table) {
        m.assign(n, std::vector<std::size_t>(n, UNSET));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto& set = ps.at(i, j);
                if (set.empty() || set.size() > 2)
                    fail(ErrorCode::MalformedData, "pair set must have 1 or 2 members");
                for (std::size_t v : set)
                    if (v >= n) fail(ErrorCode::MalformedData, "pair set index out of range");
                if (ps.at(j, i) != set)
                    fail(ErrorCode::MalformedData, "pair sets are not symmetric");
                if (set.size() == 1)
                    m[i][j] = set[0];
                else if (i < j)
                    choices.push_back({i, j});
                else if (i == j)
                    fail(ErrorCode::MalformedData, "diagonal pair set with two members");
            }
        // Most-constrained pairs first: prefer rows/columns with many forced
        // entries, so contradictions surface early.
        auto forced_around = [&](const std::pair<std::size_t, std::size_t>& p) {
            std::size_t count = 0;
            for (std::size_t t = 0; t < n; ++t) {
                count += (m[p.first][t] != UNSET) + (m[t][p.first] != UNSET);
                count += (m[p.second][t] != UNSET) + (m[t][p.second] != UNSET);
            }
            return count;
        };
        std::stable_sort(choices.begin(), choices.end(),
                         [&](const auto& a, const auto& b) {
                             return forced_around(a) > forced_around(b);
                         });
    }

    bool consistent() const {
        // Latin property on assigned entries.
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<bool> row(n, false), col(n, false);
            for (std::size_t j = 0; j < n; ++j) {
                if (m[i][j] != UNSET) {
                    if (row[m[i][j]]) return false;
                    row[m[i][j]] = true;
                }
                if (m[j][i] != UNSET) {
                    if (col[m[j][i]]) return false;
                    col[m[j][i]] = true;
                }
            }
        }
        // Associativity on fully determined triples.
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (m[a][b] == UNSET) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (m[b][c] == UNSET) continue;
                    std::size_t left = m[m[a][b]][c], right = m[a][m[b][c]];
                    if (left != UNSET && right != UNSET && left != right) return false;
                }
            }
        return true;
    }

    void search(std::size_t depth) {
        if (!consistent()) return;
        if (depth == choices.size()) {
            try {
                FiniteGroup g(m);
                for (const auto& r : results)
                    if (r == g) return;
                results.push_back(std::move(g));
            } catch (const Error&) {
            }
            return;
        }
        auto [i, j] = choices[depth];
        const auto& set = ps.at(i, j);
        for (int orient = 0; orient < 2; ++orient) {
            m[i][j] = set[orient];
            m[j][i] = set[1 - orient];
            search(depth + 1);
        }
        m[i][j] = m[j][i] = UNSET;
    }
};

} // namespace

std::vector<FiniteGroup> mansfield_reconstruct(const PairSetTable& ps) {
    if (ps.n == 0 || ps.entry.size() != ps.n)
        fail(ErrorCode::MalformedData, "pair-set table shape mismatch");
    for (const auto& row : ps.entry)
        if (row.size() != ps.n)
            fail(ErrorCode::MalformedData, "pair-set table shape mismatch");
    Completion c(ps);
    c.search(0);
    if (c.results.empty())
        fail(ErrorCode::Inconsistent, "no associative completion of the pair sets");
    return std::move(c.results);
}

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    std::size_t n = a.order();
    if (b.order() != n) return false;
    std::vector<std::size_t> oa(n), ob(n);
    for (std::size_t i = 0; i < n; ++i) {
        oa[i] = a.element_order(i);
        ob[i] = b.element_order(i);
    }
    {
        auto sa = oa, sb = ob;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<std::size_t> phi(n, UNSET);
    std::vector<bool> used(n, false);
    phi[0] = 0;
    used[0] = true;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) {
            // Products checked during the search only when their image was
            // already pinned; verify the full homomorphism property now.
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    if (phi[a.mul(p, q)] != b.mul(phi[p], phi[q])) return false;
            return true;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || ob[c] != oa[i]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (phi[a.mul(i, j)] != UNSET && phi[a.mul(i, j)] != b.mul(c, phi[j]))
                    ok = false;
                if (phi[a.mul(j, i)] != UNSET && phi[a.mul(j, i)] != b.mul(phi[j], c))
                    ok = false;
            }
            if (!ok) continue;
            phi[i] = c;
            used[c] = true;
            if (self(self, i + 1)) return true;
            phi[i] = UNSET;
            used[c] = false;
        }
        return false;
    };
    return rec(rec, 1);
}

} // namespace frob
