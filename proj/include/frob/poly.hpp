#pragma once

// Sparse multivariate polynomials over exact scalars.  Variables are held as
// a lexicographically sorted name list; each term maps a dense exponent
// vector (same length as the variable list) to a nonzero coefficient.  Terms
// are ordered graded-lexicographically: higher total degree first, ties
// broken at the first differing exponent with the earlier-listed variable
// dominating.  Operations normalize away zero coefficients and variables
// that no longer occur, so equality is syntactic.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frob/scalar.hpp"

namespace frob {

using Exp = std::vector<unsigned>;

struct GrlexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        unsigned long da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return a.size() < b.size();
    }
};

class Poly {
  public:
    using TermMap = std::map<Exp, Scalar, GrlexLess>;

    Poly() = default;
    Poly(int c) : Poly(Scalar(c)) {}
    Poly(const Scalar& c);
    static Poly variable(const std::string& name, unsigned exp = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    // Value of a constant polynomial (0 for the zero polynomial).
    Scalar constant_value() const;

    // Total degree; empty for the zero polynomial (the -infinity sentinel).
    std::optional<long> degree() const;
    // Total degree with per-variable weights (default weight 1).
    std::optional<long> weighted_degree(const std::map<std::string, long>& weights) const;
    bool is_homogeneous(const std::map<std::string, long>& weights, long d) const;
    // Sum of the terms of plain total degree d.
    Poly graded_part(long d) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    Poly pow(unsigned e) const;
    // Exact division by a scalar.
    Poly operator/(const Scalar& c) const { return *this * Poly(c.inverse()); }

    Poly partial(const std::string& var) const;
    // Replace each listed variable by a polynomial (others stay symbolic).
    Poly substitute(const std::map<std::string, Poly>& repl) const;
    // Full evaluation; every occurring variable must be assigned.
    Scalar eval(const std::map<std::string, Scalar>& point) const;
    // Coefficient of the exact monomial described by {var: exponent}.
    Scalar coeff(const std::map<std::string, unsigned>& monomial) const;

    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Text form: terms joined by +/-, leading term first; see parse.
    std::string str() const;
    // Grammar: term list joined by +/-; term = factors joined by *; factor =
    // integer, a/b, parenthesized cyclotomic coefficient, or var[^exp].
    // Variable names: letter, then letters/digits/underscores, optionally a
    // bracket group like z[1,0].  cyclo_order supplies N for coefficients.
    static Poly parse(const std::string& text, unsigned cyclo_order = 0);

  private:
    std::vector<std::string> vars_; // sorted lexicographically
    TermMap terms_;                 // exponent vectors sized to vars_

    void normalize();
    // Rewrite the term map over a (sorted) superset of the variables.
    static TermMap remap(const TermMap& terms, const std::vector<std::string>& from,
                         const std::vector<std::string>& to);
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace frob
