#include "frob/phi.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace frob {

namespace {

std::string tuple_name(const FinAlgebra& A, const std::vector<std::size_t>& idx) {
    std::string out = "(";
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t) out += ", ";
        out += A.basis_names()[idx[t]];
    }
    return out + ")";
}

// Odometer over dim^slots index tuples; f is called with each tuple.
template <typename F>
void for_each_tuple(std::size_t dim, std::size_t slots, F&& fn) {
    std::vector<std::size_t> idx(slots, 0);
    while (true) {
        fn(const_cast<const std::vector<std::size_t>&>(idx));
        std::size_t p = slots;
        while (p > 0 && ++idx[p - 1] == dim) idx[--p] = 0;
        if (p == 0) break;
    }
}

// Nondecreasing index tuples (multisets).
void multisets_rec(std::size_t dim, std::size_t slots, std::size_t from,
                   std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == slots) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < dim; ++i) {
        cur.push_back(i);
        multisets_rec(dim, slots, i, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> multisets(std::size_t dim, std::size_t slots) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    multisets_rec(dim, slots, 0, cur, out);
    return out;
}

Scalar inv_factorial(unsigned n) { return Scalar(Rat(Int(1), factorial(n))); }

} // namespace

PhiEvaluator::PhiEvaluator(FinAlgebra algebra, Functional f)
    : algebra_(std::move(algebra)), f_(std::move(f)), tracial_(is_tracial(algebra_, f_)) {
    if (f_.values.size() != algebra_.dim())
        fail(ErrorCode::BadInput, "functional length does not match algebra dimension");
}

Scalar PhiEvaluator::phi_recursive(const std::vector<Vec>& args) const {
    if (args.empty()) fail(ErrorCode::BadInput, "phi needs at least one argument");
    if (args.size() == 1) return f_(args[0]);
    std::vector<Vec> rest(args.begin() + 1, args.end());
    Scalar total = f_(args[0]) * phi_recursive(rest);
    for (std::size_t j = 0; j < rest.size(); ++j) {
        Vec saved = rest[j];
        rest[j] = algebra_.multiply(args[0], saved);
        total -= phi_recursive(rest);
        rest[j] = saved;
    }
    return total;
}

Scalar PhiEvaluator::phi_cycle_sum(const std::vector<Vec>& args) const {
    if (!tracial_) fail(ErrorCode::NotTracial, "cycle-sum route requires a tracial functional");
    const std::size_t n = args.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total(0);
    do {
        std::vector<bool> seen(n, false);
        std::size_t cycles = 0;
        Scalar prod(1);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            seen[i] = true;
            Vec p = args[i];
            for (std::size_t j = perm[i]; j != i; j = perm[j]) {
                seen[j] = true;
                p = algebra_.multiply(p, args[j]);
            }
            prod *= f_(p);
        }
        if ((n - cycles) % 2)
            total -= prod;
        else
            total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Scalar PhiEvaluator::phi_diagonal(const Vec& a, unsigned n) const {
    if (n == 0) return Scalar(1);
    std::vector<Scalar> s(n + 1, Scalar(0));
    Vec p = a;
    s[1] = f_(p);
    for (unsigned k = 2; k <= n; ++k) {
        p = algebra_.multiply(p, a);
        s[k] = f_(p);
    }
    Matrix m(n, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j <= i; ++j) m.at(i, j) = s[i - j + 1];
        if (i + 1 < n) m.at(i, i + 1) = Scalar(static_cast<int>(i + 1));
    }
    return m.det();
}

Scalar PhiEvaluator::phi_polarized(const std::vector<Vec>& args) const {
    if (!tracial_) fail(ErrorCode::NotTracial, "polarization route requires a tracial functional");
    const std::size_t n = args.size();
    const std::size_t dim = algebra_.dim();
    Scalar total(0);
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        Vec sum(dim, Scalar(0));
        std::size_t bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t(1) << i))) continue;
            ++bits;
            for (std::size_t k = 0; k < dim; ++k) sum[k] += args[i][k];
        }
        Scalar d = phi_diagonal(sum, static_cast<unsigned>(n));
        if ((n - bits) % 2)
            total -= d;
        else
            total += d;
    }
    return total * inv_factorial(static_cast<unsigned>(n));
}

std::vector<Scalar> PhiEvaluator::phi_table(unsigned n) const {
    const std::size_t dim = algebra_.dim();
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < dim; ++i) basis.push_back(algebra_.basis_vec(i));
    std::size_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= dim;
    std::vector<Scalar> table;
    table.reserve(count);
    for_each_tuple(dim, n, [&](const std::vector<std::size_t>& idx) {
        std::vector<Vec> args;
        for (std::size_t i : idx) args.push_back(basis[i]);
        table.push_back(phi_recursive(args));
    });
    return table;
}

Vec PhiEvaluator::phi1_table() const { return f_.values; }

Matrix PhiEvaluator::phi2_table() const {
    const std::size_t n = algebra_.dim();
    Matrix m(n, n);
    auto flat = phi_table(2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = flat[i * n + j];
    return m;
}

std::vector<Matrix> PhiEvaluator::phi3_table() const {
    const std::size_t n = algebra_.dim();
    std::vector<Matrix> t(n, Matrix(n, n));
    auto flat = phi_table(3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t[i].at(j, k) = flat[(i * n + j) * n + k];
    return t;
}

PhiEvaluator::CheckResult PhiEvaluator::is_n_homomorphism(unsigned n) const {
    Scalar f1 = f_(algebra_.unit());
    if (f1 != Scalar(static_cast<int>(n)))
        return {false, "f(1) = " + f1.str() + " != " + std::to_string(n)};
    const std::size_t dim = algebra_.dim();
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < dim; ++i) basis.push_back(algebra_.basis_vec(i));
    CheckResult result{true, ""};
    for_each_tuple(dim, n + 1, [&](const std::vector<std::size_t>& idx) {
        if (!result.pass) return;
        std::vector<Vec> args;
        for (std::size_t i : idx) args.push_back(basis[i]);
        Scalar v = phi_recursive(args);
        if (!v.is_zero())
            result = {false, "Phi_" + std::to_string(n + 1) + tuple_name(algebra_, idx) +
                                 " = " + v.str()};
    });
    return result;
}

PhiEvaluator::CheckResult PhiEvaluator::symmetric_power_check(unsigned n) const {
    Scalar f1 = f_(algebra_.unit());
    if (f1 != Scalar(static_cast<int>(n)))
        return {false, "f(1) = " + f1.str() + " != " + std::to_string(n)};
    const std::size_t dim = algebra_.dim();
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < dim; ++i) basis.push_back(algebra_.basis_vec(i));

    // Unit of S^n A is 1 x ... x 1.
    {
        std::vector<Vec> ones(n, algebra_.unit());
        Scalar g1 = phi_recursive(ones) * inv_factorial(n);
        if (!g1.is_one()) return {false, "g(1 x ... x 1) = " + g1.str() + " != 1"};
    }

    auto sets = multisets(dim, n);
    std::vector<std::size_t> sigma(n), tau(n);

    // S_I = sum over permutations of Phi_n on the permuted multiset.
    auto symmetrized_value = [&](const std::vector<std::size_t>& I) {
        std::iota(sigma.begin(), sigma.end(), 0);
        Scalar total(0);
        do {
            std::vector<Vec> args;
            for (std::size_t p = 0; p < n; ++p) args.push_back(basis[I[sigma[p]]]);
            total += phi_recursive(args);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return total;
    };
    // S_IJ = sum over permutation pairs of Phi_n on slotwise products.
    auto product_value = [&](const std::vector<std::size_t>& I,
                             const std::vector<std::size_t>& J) {
        std::iota(sigma.begin(), sigma.end(), 0);
        Scalar total(0);
        do {
            std::iota(tau.begin(), tau.end(), 0);
            do {
                std::vector<Vec> args;
                for (std::size_t p = 0; p < n; ++p)
                    args.push_back(algebra_.multiply(basis[I[sigma[p]]], basis[J[tau[p]]]));
                total += phi_recursive(args);
            } while (std::next_permutation(tau.begin(), tau.end()));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return total;
    };

    std::vector<Scalar> S(sets.size());
    for (std::size_t a = 0; a < sets.size(); ++a) S[a] = symmetrized_value(sets[a]);

    Scalar nfact = Scalar(factorial(n));
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a; b < sets.size(); ++b) {
            Scalar sp = product_value(sets[a], sets[b]);
            if (nfact * sp != S[a] * S[b])
                return {false, "multiplicativity fails on " + tuple_name(algebra_, sets[a]) +
                                   " * " + tuple_name(algebra_, sets[b])};
        }

    // Proof-step cross-check on homomorphisms: the one-sided symmetrized
    // product sum equals the doubly symmetrized one divided by n!.
    if (is_n_homomorphism(n).pass) {
        for (std::size_t a = 0; a < sets.size(); ++a)
            for (std::size_t b = 0; b < sets.size(); ++b) {
                std::iota(sigma.begin(), sigma.end(), 0);
                Scalar one_sided(0);
                do {
                    std::vector<Vec> args;
                    for (std::size_t p = 0; p < n; ++p)
                        args.push_back(
                            algebra_.multiply(basis[sets[a][p]], basis[sets[b][sigma[p]]]));
                    one_sided += phi_recursive(args);
                } while (std::next_permutation(sigma.begin(), sigma.end()));
                if (nfact * one_sided != product_value(sets[a], sets[b]))
                    return {false, "product symmetrization identity fails on " +
                                       tuple_name(algebra_, sets[a]) + " * " +
                                       tuple_name(algebra_, sets[b])};
            }
    }
    return {true, ""};
}

bool PhiEvaluator::unit_slot_identity(const Vec& p, unsigned n) const {
    std::vector<Vec> args(n, algebra_.unit());
    args[0] = p;
    Scalar lhs = phi_recursive(args);
    Scalar rhs = f_(p);
    Scalar f1 = f_(algebra_.unit());
    for (unsigned k = 1; k < n; ++k) rhs *= f1 - Scalar(static_cast<int>(k));
    return lhs == rhs;
}

Poly fn_polynomial(unsigned n) {
    std::vector<Poly> F(n + 1);
    F[0] = Poly(1);
    for (unsigned m = 1; m <= n; ++m) {
        Poly total;
        for (unsigned k = 1; k <= m; ++k) {
            Int c = factorial(m - 1) / factorial(m - k);
            if (k % 2 == 0) c = -c;
            total += Poly(Scalar(c)) * Poly::variable("s" + std::to_string(k)) * F[m - k];
        }
        F[m] = total;
    }
    return F[n];
}

namespace {
void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& mult,
                    const std::function<void(const std::vector<unsigned>&)>& emit) {
    if (remaining == 0) {
        emit(mult);
        return;
    }
    for (unsigned k = std::min(remaining, max_part); k >= 1; --k) {
        ++mult[k];
        partitions_rec(remaining - k, k, mult, emit);
        --mult[k];
    }
}
} // namespace

Poly fn_closed_form(unsigned n) {
    if (n == 0) return Poly(1);
    Poly total;
    std::vector<unsigned> mult(n + 1, 0); // mult[k] = number of parts equal to k
    partitions_rec(n, n, mult, [&](const std::vector<unsigned>& m) {
        Int count = factorial(n);
        long sign_exp = 0;
        Poly mono(1);
        for (unsigned k = 1; k <= n; ++k) {
            if (m[k] == 0) continue;
            for (unsigned t = 0; t < m[k]; ++t) count /= k;
            count /= factorial(m[k]);
            sign_exp += static_cast<long>(k + 1) * m[k];
            mono *= Poly::variable("s" + std::to_string(k), m[k]);
        }
        if (sign_exp % 2) count = -count;
        total += Poly(Scalar(count)) * mono;
    });
    return total;
}

Poly fn_series_coefficient(unsigned n) {
    // Truncated power series in t with polynomial coefficients.
    std::vector<Poly> L(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
        Rat c(1, k);
        if (k % 2 == 0) c = -c;
        L[k] = Poly(Scalar(c)) * Poly::variable("s" + std::to_string(k));
    }
    auto mul_trunc = [&](const std::vector<Poly>& a, const std::vector<Poly>& b) {
        std::vector<Poly> out(n + 1);
        for (unsigned i = 0; i <= n; ++i)
            for (unsigned j = 0; i + j <= n; ++j) {
                if (a[i].is_zero() || b[j].is_zero()) continue;
                out[i + j] += a[i] * b[j];
            }
        return out;
    };
    std::vector<Poly> expo(n + 1), term(n + 1);
    expo[0] = term[0] = Poly(1);
    for (unsigned j = 1; j <= n; ++j) {
        term = mul_trunc(term, L);
        Poly scale{Scalar(Rat(Int(1), Int(j)))};
        for (auto& p : term) p *= scale;
        for (unsigned i = 0; i <= n; ++i) expo[i] += term[i];
    }
    return expo[n] * Poly(Scalar(factorial(n)));
}

Poly fn_newton_determinant(unsigned n) {
    if (n == 0) return Poly(1);
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j <= i; ++j)
            m[i][j] = Poly::variable("s" + std::to_string(i - j + 1));
        if (i + 1 < n) m[i][i + 1] = Poly(static_cast<int>(i + 1));
    }
    return det_memo(m);
}

Poly d_operator(const Poly& p, unsigned r_max) {
    Poly out;
    for (unsigned r = 2; r <= r_max; ++r) {
        Poly dp = p.partial("s" + std::to_string(r));
        if (dp.is_zero()) continue;
        out += Poly(static_cast<int>(r)) * Poly::variable("s" + std::to_string(r - 1)) * dp;
    }
    return out;
}

std::vector<CheckEntry> operator_identities(unsigned n_max) {
    std::vector<CheckEntry> out;
    std::vector<Poly> F(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) F[n] = fn_polynomial(n);
    for (unsigned n = 1; n <= n_max; ++n) {
        {
            Poly lhs = F[n].partial("s1");
            Poly rhs = Poly(static_cast<int>(n)) * F[n - 1];
            out.push_back({"partial-s1 F" + std::to_string(n) + " == " + std::to_string(n) +
                               " F" + std::to_string(n - 1),
                           lhs == rhs, lhs == rhs ? "" : lhs.str() + " != " + rhs.str()});
        }
        {
            Poly lhs = d_operator(F[n], n + 1);
            Poly rhs = Poly(-static_cast<int>(n * (n - 1))) * F[n - 1];
            out.push_back({"d F" + std::to_string(n) + " == -" + std::to_string(n * (n - 1)) +
                               " F" + std::to_string(n - 1),
                           lhs == rhs, lhs == rhs ? "" : lhs.str() + " != " + rhs.str()});
        }
        bool comm = true;
        std::string detail;
        for (unsigned k = 1; k <= n && comm; ++k) {
            std::string sk = "s" + std::to_string(k);
            Poly lhs = d_operator(F[n], n + 1).partial(sk) - d_operator(F[n].partial(sk), n + 1);
            Poly rhs =
                Poly(static_cast<int>(k + 1)) * F[n].partial("s" + std::to_string(k + 1));
            if (lhs != rhs) {
                comm = false;
                detail = "k=" + std::to_string(k) + ": " + lhs.str() + " != " + rhs.str();
            }
        }
        out.push_back({"[partial-sk, d] F" + std::to_string(n) + " == (k+1) partial-s(k+1) F" +
                           std::to_string(n),
                       comm, detail});
    }
    return out;
}

std::vector<CheckEntry> fn_generating_check(unsigned n_max) {
    std::vector<CheckEntry> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        Poly a = fn_polynomial(n), b = fn_series_coefficient(n);
        out.push_back({"series coefficient t^" + std::to_string(n) + " matches F" +
                           std::to_string(n),
                       a == b, a == b ? "" : a.str() + " != " + b.str()});
    }
    return out;
}

Poly polarize(unsigned n) {
    Poly fn = fn_polynomial(n);
    Poly total;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<unsigned> members;
        for (unsigned i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) members.push_back(i + 1);
        std::map<std::string, Poly> repl;
        for (unsigned k = 1; k <= n; ++k) {
            // f((sum of slots)^k) expands over ordered k-tuples of slots;
            // each tuple contributes the symbol of its sorted multiset.
            Poly pk;
            std::vector<std::size_t> idx(k, 0);
            while (true) {
                std::vector<unsigned> sorted;
                for (std::size_t t = 0; t < k; ++t) sorted.push_back(members[idx[t]]);
                std::sort(sorted.begin(), sorted.end());
                std::string name = "f_";
                for (unsigned s : sorted) name += std::to_string(s);
                pk += Poly::variable(name);
                std::size_t p = k;
                while (p > 0 && ++idx[p - 1] == members.size()) idx[--p] = 0;
                if (p == 0) break;
            }
            repl["s" + std::to_string(k)] = pk;
        }
        Poly d = fn.substitute(repl);
        if ((n - members.size()) % 2)
            total -= d;
        else
            total += d;
    }
    return total * Poly(Scalar(Rat(Int(1), factorial(n))));
}

std::vector<Scalar> phi4_from_jordan(const Vec& f_values, const Matrix& R,
                                     const Tensor3& jordan) {
    const std::size_t d = f_values.size();
    auto jmul_basis = [&](std::size_t a, const Vec& v) {
        Vec out(d, Scalar(0));
        for (std::size_t j = 0; j < d; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k)
                if (!jordan[a][j][k].is_zero()) out[k] += v[j] * jordan[a][j][k];
        }
        return out;
    };
    auto fdot = [&](const Vec& v) {
        Scalar t(0);
        for (std::size_t k = 0; k < d; ++k)
            if (!v[k].is_zero()) t += f_values[k] * v[k];
        return t;
    };
    // S3(p,q,r) = f(e_p e_q e_r) + f(e_q e_p e_r) = 2 sum_m a_{(pq)}^m R_{mr}.
    auto S3 = [&](std::size_t p, std::size_t q, std::size_t r) {
        Scalar t(0);
        for (std::size_t m = 0; m < d; ++m)
            if (!jordan[p][q][m].is_zero()) t += jordan[p][q][m] * R.at(m, r);
        return Scalar(2) * t;
    };
    // fnested[a][b][c][e] = f(e_a o (e_b o (e_c o e_e))) over the Jordan product.
    std::vector<Scalar> fnested(d * d * d * d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = 0; e < d; ++e) {
            Vec ce(d, Scalar(0));
            for (std::size_t k = 0; k < d; ++k) ce[k] = jordan[c][e][k];
            for (std::size_t b = 0; b < d; ++b) {
                Vec bce = jmul_basis(b, ce);
                for (std::size_t a = 0; a < d; ++a)
                    fnested[((a * d + b) * d + c) * d + e] = fdot(jmul_basis(a, bce));
            }
        }
    Scalar quarter(Rat(1, 4));
    std::vector<Scalar> table(d * d * d * d);
    std::vector<std::size_t> t(4);
    for (t[0] = 0; t[0] < d; ++t[0])
        for (t[1] = 0; t[1] < d; ++t[1])
            for (t[2] = 0; t[2] < d; ++t[2])
                for (t[3] = 0; t[3] < d; ++t[3]) {
                    Scalar val = f_values[t[0]] * f_values[t[1]] * f_values[t[2]] *
                                 f_values[t[3]];
                    // 6 transpositions: -f(e_p e_q) f_r f_s.
                    for (std::size_t p = 0; p < 4; ++p)
                        for (std::size_t q = p + 1; q < 4; ++q) {
                            Scalar rest(1);
                            for (std::size_t u = 0; u < 4; ++u)
                                if (u != p && u != q) rest *= f_values[t[u]];
                            val -= R.at(t[p], t[q]) * rest;
                        }
                    // 3 pair products: +f(e_p e_q) f(e_r e_s).
                    val += R.at(t[0], t[1]) * R.at(t[2], t[3]);
                    val += R.at(t[0], t[2]) * R.at(t[1], t[3]);
                    val += R.at(t[0], t[3]) * R.at(t[1], t[2]);
                    // 8 three-cycles: +(both cyclic orders) times the fixed point.
                    for (std::size_t s = 0; s < 4; ++s) {
                        std::vector<std::size_t> rest;
                        for (std::size_t u = 0; u < 4; ++u)
                            if (u != s) rest.push_back(u);
                        val += S3(t[rest[0]], t[rest[1]], t[rest[2]]) * f_values[t[s]];
                    }
                    // 6 four-cycles: -(1/4) sum over S_4 of the nested Jordan trace.
                    std::vector<std::size_t> perm = {0, 1, 2, 3};
                    Scalar nest(0);
                    do {
                        nest += fnested[((t[perm[0]] * d + t[perm[1]]) * d + t[perm[2]]) * d +
                                        t[perm[3]]];
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    val -= quarter * nest;
                    table[((t[0] * d + t[1]) * d + t[2]) * d + t[3]] = val;
                }
    return table;
}

} // namespace frob
