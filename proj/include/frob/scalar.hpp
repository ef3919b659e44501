#pragma once

// Exact scalars: arbitrary-precision rationals, optionally living in a
// cyclotomic extension Q(zeta_N).  A Scalar is either a reduced fraction or a
// coefficient vector over Q reduced modulo the N-th cyclotomic polynomial
// (so the stored degree is always < phi(N)).  Elements whose reduced
// representative is constant collapse back to the rational form, which keeps
// equality syntactic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "frob/error.hpp"

namespace frob {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

bool rat_is_integer(const Rat& r);
std::string rat_str(const Rat& r);
Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);
unsigned euler_phi(unsigned n);

// Monic N-th cyclotomic polynomial, coefficients low-to-high (degree phi(N)).
std::vector<Rat> cyclotomic_polynomial(unsigned n);

class Scalar {
  public:
    Scalar() : r_(0) {}
    Scalar(int v) : r_(v) {}
    Scalar(long v) : r_(v) {}
    Scalar(long long v) : r_(static_cast<std::int64_t>(v)) {}
    Scalar(const Int& v) : r_(v) {}
    Scalar(const Rat& v) : r_(v) {}

    // zeta_n as a reduced cyclotomic element (rational for n <= 2).
    static Scalar zeta(unsigned n);
    // Interpret coeffs as sum coeffs[k] * zeta_n^k and reduce mod Phi_n.
    static Scalar cyclotomic(std::vector<Rat> coeffs, unsigned n);

    bool is_rational() const { return order_ == 0; }
    bool is_zero() const { return order_ == 0 && r_ == 0; }
    bool is_one() const { return order_ == 0 && r_ == 1; }
    bool is_integer() const { return order_ == 0 && rat_is_integer(r_); }

    // Rational value; throws unless is_rational().
    const Rat& rat() const;
    // Cyclotomic order N, 0 when rational.
    unsigned order() const { return order_; }
    // Reduced coefficient vector (size phi(N)); empty when rational.
    const std::vector<Rat>& coeffs() const { return c_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o); // exact; throws on division by zero

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar pow(long e) const;
    Scalar conj() const; // complex conjugation, zeta -> zeta^(N-1)

    // Text form per the polynomial grammar: "a/b" for rationals,
    // "(c0 + c1*w + ...)" for cyclotomic elements (w denotes zeta_N).
    std::string str() const;
    // Inverse of str(); cyclo_order supplies N for parenthesized forms.
    static Scalar parse(const std::string& text, unsigned cyclo_order = 0);

  private:
    Rat r_;              // value when rational (order_ == 0)
    unsigned order_ = 0; // cyclotomic order N, 0 for plain rationals
    std::vector<Rat> c_; // reduced coefficients, size phi(N)

    static Scalar reduce(std::vector<Rat> raw, unsigned n);
    std::vector<Rat> promoted(unsigned n) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace frob
