#include "frob/multisym.hpp"

#include <algorithm>
#include <functional>

namespace frob {

unsigned weight(const MultiIndex& omega) {
    unsigned w = 0;
    for (unsigned i : omega) w += i;
    return w;
}

std::string z_name(const MultiIndex& omega) {
    std::string out = "z[";
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(omega[i]);
    }
    return out + "]";
}

std::string x_name(unsigned j, unsigned k) {
    return "x" + std::to_string(j) + "_" + std::to_string(k);
}

MultiIndex parse_z_name(const std::string& name) {
    if (name.size() < 4 || name.substr(0, 2) != "z[" || name.back() != ']')
        fail(ErrorCode::BadInput, "not a generator variable: " + name);
    MultiIndex omega;
    unsigned cur = 0;
    bool have_digit = false;
    for (std::size_t i = 2; i + 1 < name.size(); ++i) {
        char c = name[i];
        if (c >= '0' && c <= '9') {
            cur = cur * 10 + static_cast<unsigned>(c - '0');
            have_digit = true;
        } else if (c == ',') {
            if (!have_digit) fail(ErrorCode::BadInput, "bad index in " + name);
            omega.push_back(cur);
            cur = 0;
            have_digit = false;
        } else {
            fail(ErrorCode::BadInput, "bad character in " + name);
        }
    }
    if (!have_digit) fail(ErrorCode::BadInput, "bad index in " + name);
    omega.push_back(cur);
    return omega;
}

Poly newton_polynomial(const MultiIndex& omega, unsigned n, unsigned m) {
    if (omega.size() != m)
        fail(ErrorCode::BadInput, "index length does not match the coordinate count");
    Poly sum;
    for (unsigned k = 1; k <= n; ++k) {
        Poly term(Scalar(1));
        for (unsigned j = 1; j <= m; ++j)
            if (omega[j - 1] > 0) term *= Poly::variable(x_name(j, k), omega[j - 1]);
        sum += term;
    }
    return sum;
}

namespace {

// Renaming of point indices k -> perm(k) (1-based) on all x variables.
Poly rename_points(const Poly& p, unsigned n, unsigned m,
                   const std::function<unsigned(unsigned)>& perm) {
    std::map<std::string, Poly> repl;
    for (unsigned j = 1; j <= m; ++j)
        for (unsigned k = 1; k <= n; ++k)
            repl[x_name(j, k)] = Poly::variable(x_name(j, perm(k)));
    return p.substitute(repl);
}

} // namespace

bool is_multisymmetric(const Poly& p, unsigned n, unsigned m) {
    if (n <= 1) return true;
    Poly swapped = rename_points(p, n, m, [](unsigned k) {
        return k == 1 ? 2u : k == 2 ? 1u : k;
    });
    if (swapped != p) return false;
    Poly cycled = rename_points(p, n, m, [n](unsigned k) { return k % n + 1; });
    return cycled == p;
}

Poly eval_star(const Poly& q, unsigned n, unsigned m) {
    std::map<std::string, Poly> repl;
    for (const auto& v : q.vars()) {
        MultiIndex omega = parse_z_name(v);
        if (omega.size() != m)
            fail(ErrorCode::BadInput, "generator index " + v + " has wrong length");
        repl[v] = newton_polynomial(omega, n, m);
    }
    return q.substitute(repl);
}

Poly frobenius_type_polynomial(const std::vector<MultiIndex>& omegas) {
    if (omegas.empty()) fail(ErrorCode::BadInput, "need at least one index");
    for (const auto& o : omegas)
        if (o.size() != omegas[0].size())
            fail(ErrorCode::BadInput, "indices must share one length");
    std::function<Poly(const std::vector<MultiIndex>&)> rec =
        [&](const std::vector<MultiIndex>& list) -> Poly {
        if (list.size() == 1) return Poly::variable(z_name(list[0]));
        std::vector<MultiIndex> rest(list.begin() + 1, list.end());
        Poly out = Poly::variable(z_name(list[0])) * rec(rest);
        for (std::size_t t = 0; t < rest.size(); ++t) {
            std::vector<MultiIndex> merged = rest;
            for (std::size_t c = 0; c < merged[t].size(); ++c)
                merged[t][c] += list[0][c];
            out -= rec(merged);
        }
        return out;
    };
    return rec(omegas);
}

bool syzygy_generator_check(const std::vector<MultiIndex>& omegas, unsigned n,
                            unsigned m) {
    if (omegas.size() != n + 1)
        fail(ErrorCode::BadInput, "expected " + std::to_string(n + 1) + " indices");
    for (const auto& o : omegas) {
        if (o.size() != m)
            fail(ErrorCode::BadInput, "index length does not match the coordinate count");
        if (weight(o) == 0)
            fail(ErrorCode::WeightZeroIndex, "index " + z_name(o) + " has weight zero");
    }
    return eval_star(frobenius_type_polynomial(omegas), n, m).is_zero();
}

namespace {

// All omega with 1 <= |omega| <= n, ordered by (weight, lexicographic).
std::vector<MultiIndex> generator_indices(unsigned n, unsigned m) {
    std::vector<MultiIndex> out;
    MultiIndex cur(m, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
        if (pos + 1 == m) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned i = 0; i <= left; ++i) {
            cur[pos] = i;
            rec(pos + 1, left - i);
        }
    };
    for (unsigned w = 1; w <= n; ++w) rec(0, w);
    return out;
}

// Monomial of a polynomial term as a name -> exponent map (zeros dropped).
std::map<std::string, unsigned> term_monomial(const std::vector<std::string>& vars,
                                              const Exp& exp) {
    std::map<std::string, unsigned> mono;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (exp[i] > 0) mono[vars[i]] = exp[i];
    return mono;
}

} // namespace

DegreeSystem express_system(unsigned d, unsigned n, unsigned m) {
    std::vector<MultiIndex> gens = generator_indices(n, m);

    // Multisets of generators with total weight d, as z-polynomial monomials.
    std::vector<Poly> cols;
    std::function<void(std::size_t, unsigned, Poly)> pick =
        [&](std::size_t i, unsigned left, Poly acc) {
            if (left == 0) {
                cols.push_back(acc);
                return;
            }
            if (i == gens.size()) return;
            unsigned w = weight(gens[i]);
            pick(i + 1, left, acc);
            for (unsigned mult = 1; mult * w <= left; ++mult)
                pick(i + 1, left - mult * w,
                     acc * Poly::variable(z_name(gens[i]), mult));
        };
    pick(0, d, Poly(Scalar(1)));
    // Graded-lex order: fewer factors first, ties by name-sorted exponents.
    auto mono_key = [](const Poly& zm) {
        unsigned deg = 0;
        Exp e;
        if (!zm.terms().empty()) {
            e = zm.terms().begin()->first;
            for (unsigned x : e) deg += x;
        }
        return std::pair<unsigned, std::vector<std::pair<std::string, unsigned>>>(
            deg, [&] {
                std::vector<std::pair<std::string, unsigned>> v;
                for (std::size_t i = 0; i < zm.vars().size(); ++i)
                    v.emplace_back(zm.vars()[i], e[i]);
                return v;
            }());
    };
    std::sort(cols.begin(), cols.end(),
              [&](const Poly& a, const Poly& b) { return mono_key(a) < mono_key(b); });

    DegreeSystem sys;
    sys.z_monomials = std::move(cols);

    // Expand every column and index the x-monomials that appear.
    std::map<std::map<std::string, unsigned>, std::size_t> row_of;
    std::vector<Poly> images;
    images.reserve(sys.z_monomials.size());
    for (const auto& zm : sys.z_monomials) {
        Poly img = eval_star(zm, n, m);
        for (const auto& [exp, c] : img.terms()) {
            (void)c;
            auto mono = term_monomial(img.vars(), exp);
            if (row_of.emplace(mono, row_of.size()).second)
                sys.x_monomials.push_back(mono);
        }
        images.push_back(std::move(img));
    }

    sys.matrix = Matrix(sys.x_monomials.size(), sys.z_monomials.size());
    for (std::size_t c = 0; c < images.size(); ++c)
        for (const auto& [exp, coef] : images[c].terms())
            sys.matrix.at(row_of.at(term_monomial(images[c].vars(), exp)), c) = coef;
    return sys;
}

Poly express(const Poly& p, unsigned n, unsigned m) {
    // Only x<j>_<k> variables inside the grid are meaningful here.
    for (const auto& v : p.vars()) {
        bool ok = false;
        if (v.size() >= 4 && v[0] == 'x') {
            auto us = v.find('_');
            if (us != std::string::npos && us > 1) {
                unsigned j = 0, k = 0;
                bool digits = true;
                for (std::size_t i = 1; i < us; ++i) {
                    digits = digits && v[i] >= '0' && v[i] <= '9';
                    j = j * 10 + static_cast<unsigned>(v[i] - '0');
                }
                for (std::size_t i = us + 1; i < v.size(); ++i) {
                    digits = digits && v[i] >= '0' && v[i] <= '9';
                    k = k * 10 + static_cast<unsigned>(v[i] - '0');
                }
                ok = digits && j >= 1 && j <= m && k >= 1 && k <= n;
            }
        }
        if (!ok)
            fail(ErrorCode::BadInput,
                 "variable " + v + " is not a coordinate of the n-fold power");
    }
    if (!is_multisymmetric(p, n, m))
        fail(ErrorCode::NotMultiSymmetric,
             "not invariant under point permutations");

    Poly q(p.graded_part(0).constant_value());
    if (p.degree().has_value()) {
        long dmax = *p.degree();
        for (long d = 1; d <= dmax; ++d) {
            Poly part = p.graded_part(d);
            if (part.is_zero()) continue;
            DegreeSystem sys = express_system(static_cast<unsigned>(d), n, m);

            std::map<std::map<std::string, unsigned>, std::size_t> row_of;
            for (std::size_t r = 0; r < sys.x_monomials.size(); ++r)
                row_of[sys.x_monomials[r]] = r;
            std::vector<Scalar> rhs(sys.x_monomials.size(), Scalar(0));
            for (const auto& [exp, coef] : part.terms()) {
                auto mono = term_monomial(part.vars(), exp);
                auto it = row_of.find(mono);
                if (it == row_of.end())
                    fail(ErrorCode::NoSolution,
                         "degree " + std::to_string(d) +
                             " part lies outside the generator image");
                rhs[it->second] = coef;
            }
            auto sol = sys.matrix.solve(rhs);
            if (!sol)
                fail(ErrorCode::NoSolution,
                     "no generator expression in degree " + std::to_string(d));
            for (std::size_t c = 0; c < sol->size(); ++c)
                if (!(*sol)[c].is_zero()) q += sys.z_monomials[c] * Poly((*sol)[c]);
        }
    }
    return q;
}

Int embedding_dimension(unsigned n, unsigned m) {
    if (n == 0 || m == 0) fail(ErrorCode::BadInput, "need n, m >= 1");
    return binomial(n + m, n) - 1;
}

} // namespace frob
