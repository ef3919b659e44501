#include "frob/scalar.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace frob {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::NotTracial: return "NotTracial";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotLatin: return "NotLatin";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::NotAnNHomomorphism: return "NotAnNHomomorphism";
    case ErrorCode::BadCharacterTable: return "BadCharacterTable";
    case ErrorCode::MalformedData: return "MalformedData";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::WeightZeroIndex: return "WeightZeroIndex";
    case ErrorCode::NotMultiSymmetric: return "NotMultiSymmetric";
    case ErrorCode::NoSolution: return "NoSolution";
    }
    return "Error";
}

bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Dense univariate helpers over Rat, coefficients low-to-high.

void upoly_trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, requires the remainder to vanish.
std::vector<Rat> upoly_div_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
    std::vector<Rat> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rat c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        upoly_trim(num);
    }
    if (!num.empty()) fail(ErrorCode::BadInput, "inexact polynomial division");
    return quot;
}

// Remainder of num modulo a monic divisor.
std::vector<Rat> upoly_mod_monic(std::vector<Rat> num, const std::vector<Rat>& den) {
    while (num.size() >= den.size()) {
        Rat c = num.back(); // den is monic
        std::size_t shift = num.size() - den.size();
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        upoly_trim(num);
    }
    return num;
}

std::vector<Rat> upoly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

std::vector<Rat> cyclotomic_polynomial(unsigned n) {
    if (n == 0) fail(ErrorCode::BadInput, "cyclotomic order must be positive");
    thread_local std::map<unsigned, std::vector<Rat>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<Rat> p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = upoly_div_exact(std::move(p), cyclotomic_polynomial(d));
    cache[n] = p;
    return p;
}

const Rat& Scalar::rat() const {
    if (order_ != 0) fail(ErrorCode::BadInput, "cyclotomic scalar has no rational value: " + str());
    return r_;
}

Scalar Scalar::reduce(std::vector<Rat> raw, unsigned n) {
    const std::vector<Rat> phi = cyclotomic_polynomial(n);
    upoly_trim(raw);
    raw = upoly_mod_monic(std::move(raw), phi);
    bool constant = true;
    for (std::size_t k = 1; k < raw.size(); ++k)
        if (raw[k] != 0) { constant = false; break; }
    if (constant) return Scalar(raw.empty() ? Rat(0) : raw[0]);
    Scalar s;
    s.order_ = n;
    raw.resize(phi.size() - 1, Rat(0));
    s.c_ = std::move(raw);
    s.r_ = 0;
    return s;
}

Scalar Scalar::zeta(unsigned n) {
    if (n == 0) fail(ErrorCode::BadInput, "zeta order must be positive");
    std::vector<Rat> raw(2, Rat(0));
    raw[1] = 1;
    return reduce(std::move(raw), n);
}

Scalar Scalar::cyclotomic(std::vector<Rat> coeffs, unsigned n) {
    if (n == 0) fail(ErrorCode::BadInput, "cyclotomic order must be positive");
    return reduce(std::move(coeffs), n);
}

std::vector<Rat> Scalar::promoted(unsigned n) const {
    if (order_ != 0) return c_;
    std::vector<Rat> raw(euler_phi(n), Rat(0));
    if (raw.empty()) raw.resize(1, Rat(0));
    raw[0] = r_;
    return raw;
}

namespace {
unsigned common_order(const Scalar& a, const Scalar& b) {
    if (a.order() != 0 && b.order() != 0 && a.order() != b.order())
        fail(ErrorCode::BadInput, "mixed cyclotomic orders " + std::to_string(a.order()) + " and " +
                                      std::to_string(b.order()));
    return a.order() != 0 ? a.order() : b.order();
}
} // namespace

Scalar Scalar::operator-() const {
    if (order_ == 0) return Scalar(Rat(-r_));
    Scalar s = *this;
    for (Rat& c : s.c_) c = -c;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    unsigned n = common_order(*this, o);
    if (n == 0) {
        r_ += o.r_;
        return *this;
    }
    std::vector<Rat> a = promoted(n), b = o.promoted(n);
    if (b.size() > a.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    *this = reduce(std::move(a), n);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    unsigned n = common_order(*this, o);
    if (n == 0) {
        r_ *= o.r_;
        return *this;
    }
    // Rational factors scale coefficients directly; no reduction needed.
    if (order_ == 0 || o.order_ == 0) {
        const Rat& scale = order_ == 0 ? r_ : o.r_;
        std::vector<Rat> c = order_ == 0 ? o.c_ : c_;
        if (scale == 0) {
            *this = Scalar();
            return *this;
        }
        for (Rat& x : c) x *= scale;
        order_ = n;
        c_ = std::move(c);
        r_ = 0;
        return *this;
    }
    *this = reduce(upoly_mul(c_, o.c_), n);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorCode::BadInput, "division by zero");
    if (order_ == 0) return Scalar(Rat(1 / r_));
    // Extended Euclid in Q[x]: u*c + v*Phi_N = 1, so u is the inverse
    // (Phi_N is irreducible over Q and deg c < deg Phi_N).
    std::vector<Rat> r0 = cyclotomic_polynomial(order_), r1 = c_;
    std::vector<Rat> u0 = {}, u1 = {Rat(1)};
    upoly_trim(r1);
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        std::vector<Rat> r2 = r0;
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rat c = r2.back() / r1.back();
            std::size_t shift = r2.size() - r1.size();
            q[shift] += c;
            for (std::size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= c * r1[i];
            upoly_trim(r2);
        }
        std::vector<Rat> u2 = u0; // u2 = u0 - q*u1
        std::vector<Rat> qu = upoly_mul(q, u1);
        if (qu.size() > u2.size()) u2.resize(qu.size(), Rat(0));
        for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        upoly_trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 is a nonzero constant gcd; scale u0 by its inverse.
    Rat g = r0.empty() ? Rat(0) : r0[0];
    if (r0.size() != 1 || g == 0) fail(ErrorCode::BadInput, "non-invertible cyclotomic element");
    for (Rat& x : u0) x /= g;
    return reduce(std::move(u0), order_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (order_ != o.order_) {
        if (order_ != 0 && o.order_ != 0)
            fail(ErrorCode::BadInput, "mixed cyclotomic orders in comparison");
        return false; // reduced cyclotomic elements are never constants
    }
    return order_ == 0 ? r_ == o.r_ : c_ == o.c_;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Scalar Scalar::conj() const {
    if (order_ == 0) return *this;
    std::vector<Rat> raw(order_, Rat(0));
    for (std::size_t k = 0; k < c_.size(); ++k) raw[(order_ - k) % order_] += c_[k];
    return reduce(std::move(raw), order_);
}

std::string Scalar::str() const {
    if (order_ == 0) return rat_str(r_);
    std::string out = "(";
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rat a = c_[k];
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + "*";
            out += k == 1 ? "w" : "w^" + std::to_string(k);
        }
    }
    out += ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

struct ScalarLexer {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip();
        if (i >= s.size()) fail(ErrorCode::ParseError, "unexpected end of scalar: " + s);
        return s[i++];
    }
    Rat number() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(ErrorCode::ParseError, "expected number in scalar: " + s);
        Int num(s.substr(start, i - start));
        if (peek() == '/') {
            ++i;
            skip();
            std::size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == dstart) fail(ErrorCode::ParseError, "expected denominator in scalar: " + s);
            Int den(s.substr(dstart, i - dstart));
            if (den == 0) fail(ErrorCode::ParseError, "zero denominator in scalar: " + s);
            return Rat(num, den);
        }
        return Rat(num);
    }
    unsigned exponent() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(ErrorCode::ParseError, "expected exponent in scalar: " + s);
        return static_cast<unsigned>(std::stoul(s.substr(start, i - start)));
    }
};

} // namespace

Scalar Scalar::parse(const std::string& text, unsigned cyclo_order) {
    ScalarLexer lx{text};
    if (lx.eof()) fail(ErrorCode::ParseError, "empty scalar");
    if (lx.peek() != '(') {
        bool neg = false;
        while (lx.peek() == '-' || lx.peek() == '+') neg ^= (lx.get() == '-');
        Rat v = lx.number();
        if (!lx.eof()) fail(ErrorCode::ParseError, "trailing input in scalar: " + text);
        return Scalar(neg ? Rat(-v) : v);
    }
    if (cyclo_order == 0)
        fail(ErrorCode::ParseError, "cyclotomic scalar needs an order: " + text);
    lx.get(); // '('
    std::vector<Rat> raw(cyclo_order, Rat(0));
    bool expect_term = true;
    while (true) {
        char c = lx.peek();
        if (c == ')') {
            lx.get();
            break;
        }
        bool neg = false;
        while (lx.peek() == '-' || lx.peek() == '+') neg ^= (lx.get() == '-');
        (void)expect_term;
        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coeff = lx.number();
            have_coeff = true;
        }
        unsigned power = 0;
        if (lx.peek() == '*') {
            lx.get();
            if (lx.peek() != 'w') fail(ErrorCode::ParseError, "expected w in scalar: " + text);
        }
        if (lx.peek() == 'w') {
            lx.get();
            power = 1;
            if (lx.peek() == '^') {
                lx.get();
                power = lx.exponent();
            }
        } else if (!have_coeff) {
            fail(ErrorCode::ParseError, "expected term in scalar: " + text);
        }
        if (power >= raw.size()) raw.resize(power + 1, Rat(0));
        raw[power] += neg ? Rat(-coeff) : coeff;
        expect_term = false;
    }
    if (!lx.eof()) fail(ErrorCode::ParseError, "trailing input in scalar: " + text);
    return Scalar::cyclotomic(std::move(raw), cyclo_order);
}

} // namespace frob
