#include "frob/poly.hpp"

#include <algorithm>
#include <cctype>

namespace frob {

Poly::Poly(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Exp{}, c);
}

Poly Poly::variable(const std::string& name, unsigned exp) {
    if (name.empty()) fail(ErrorCode::BadInput, "empty variable name");
    if (exp == 0) return Poly(1);
    Poly p;
    p.vars_ = {name};
    p.terms_.emplace(Exp{exp}, Scalar(1));
    return p;
}

Scalar Poly::constant_value() const {
    if (!is_constant()) fail(ErrorCode::BadInput, "not a constant polynomial: " + str());
    return terms_.empty() ? Scalar(0) : terms_.begin()->second;
}

std::optional<long> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    long d = 0;
    for (unsigned e : terms_.rbegin()->first) d += e;
    return d;
}

std::optional<long> Poly::weighted_degree(const std::map<std::string, long>& weights) const {
    if (terms_.empty()) return std::nullopt;
    std::optional<long> best;
    for (const auto& [exp, c] : terms_) {
        long d = 0;
        for (std::size_t j = 0; j < exp.size(); ++j) {
            auto it = weights.find(vars_[j]);
            d += static_cast<long>(exp[j]) * (it == weights.end() ? 1 : it->second);
        }
        if (!best || d > *best) best = d;
    }
    return best;
}

bool Poly::is_homogeneous(const std::map<std::string, long>& weights, long d) const {
    for (const auto& [exp, c] : terms_) {
        long t = 0;
        for (std::size_t j = 0; j < exp.size(); ++j) {
            auto it = weights.find(vars_[j]);
            t += static_cast<long>(exp[j]) * (it == weights.end() ? 1 : it->second);
        }
        if (t != d) return false;
    }
    return true;
}

Poly Poly::graded_part(long d) const {
    Poly out;
    out.vars_ = vars_;
    for (const auto& [exp, c] : terms_) {
        long t = 0;
        for (unsigned e : exp) t += e;
        if (t == d) out.terms_.emplace(exp, c);
    }
    out.normalize();
    return out;
}

void Poly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [exp, c] : terms_)
        for (std::size_t j = 0; j < exp.size(); ++j)
            if (exp[j] > 0) used[j] = true;
    if (std::find(used.begin(), used.end(), false) == used.end()) return;
    std::vector<std::string> kept;
    for (std::size_t j = 0; j < vars_.size(); ++j)
        if (used[j]) kept.push_back(vars_[j]);
    TermMap pruned;
    for (const auto& [exp, c] : terms_) {
        Exp e;
        for (std::size_t j = 0; j < exp.size(); ++j)
            if (used[j]) e.push_back(exp[j]);
        pruned.emplace(std::move(e), c);
    }
    vars_ = std::move(kept);
    terms_ = std::move(pruned);
}

Poly::TermMap Poly::remap(const TermMap& terms, const std::vector<std::string>& from,
                          const std::vector<std::string>& to) {
    std::vector<std::size_t> pos(from.size());
    for (std::size_t j = 0; j < from.size(); ++j)
        pos[j] = std::lower_bound(to.begin(), to.end(), from[j]) - to.begin();
    TermMap out;
    for (const auto& [exp, c] : terms) {
        Exp e(to.size(), 0);
        for (std::size_t j = 0; j < exp.size(); ++j) e[pos[j]] = exp[j];
        out.emplace(std::move(e), c);
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [exp, c] : out.terms_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    std::vector<std::string> merged;
    std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                   std::back_inserter(merged));
    TermMap a = remap(terms_, vars_, merged);
    TermMap b = remap(o.terms_, o.vars_, merged);
    for (const auto& [exp, c] : b) {
        auto [it, fresh] = a.emplace(exp, c);
        if (!fresh) it->second += c;
    }
    vars_ = std::move(merged);
    terms_ = std::move(a);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
    std::vector<std::string> merged;
    std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                   std::back_inserter(merged));
    TermMap a = remap(terms_, vars_, merged);
    TermMap b = remap(o.terms_, o.vars_, merged);
    TermMap prod;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exp e(merged.size());
            for (std::size_t j = 0; j < merged.size(); ++j) e[j] = ea[j] + eb[j];
            Scalar c = ca * cb;
            auto [it, fresh] = prod.emplace(std::move(e), c);
            if (!fresh) it->second += c;
        }
    vars_ = std::move(merged);
    terms_ = std::move(prod);
    normalize();
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Poly Poly::partial(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return Poly();
    std::size_t j = it - vars_.begin();
    Poly out;
    out.vars_ = vars_;
    for (const auto& [exp, c] : terms_) {
        if (exp[j] == 0) continue;
        Exp e = exp;
        --e[j];
        out.terms_.emplace(std::move(e), c * Scalar(static_cast<int>(exp[j])));
    }
    out.normalize();
    return out;
}

Poly Poly::substitute(const std::map<std::string, Poly>& repl) const {
    Poly out;
    for (const auto& [exp, c] : terms_) {
        Poly term(c);
        for (std::size_t j = 0; j < exp.size(); ++j) {
            if (exp[j] == 0) continue;
            auto it = repl.find(vars_[j]);
            term *= it == repl.end() ? Poly::variable(vars_[j], exp[j])
                                     : it->second.pow(exp[j]);
        }
        out += term;
    }
    return out;
}

Scalar Poly::eval(const std::map<std::string, Scalar>& point) const {
    Scalar total(0);
    for (const auto& [exp, c] : terms_) {
        Scalar term = c;
        for (std::size_t j = 0; j < exp.size(); ++j) {
            if (exp[j] == 0) continue;
            auto it = point.find(vars_[j]);
            if (it == point.end())
                fail(ErrorCode::BadInput, "unassigned variable " + vars_[j]);
            term *= it->second.pow(exp[j]);
        }
        total += term;
    }
    return total;
}

Scalar Poly::coeff(const std::map<std::string, unsigned>& monomial) const {
    Exp e(vars_.size(), 0);
    for (const auto& [name, exp] : monomial) {
        if (exp == 0) continue;
        auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
        if (it == vars_.end() || *it != name) return Scalar(0);
        e[it - vars_.begin()] = exp;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exp, c] = *it;
        std::string mono;
        for (std::size_t j = 0; j < exp.size(); ++j) {
            if (exp[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[j];
            if (exp[j] > 1) mono += "^" + std::to_string(exp[j]);
        }
        bool negative = c.is_rational() && c.rat() < 0;
        Scalar mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

namespace {

struct PolyLexer {
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
    void expect(char c) {
        if (peek() != c)
            fail(ErrorCode::ParseError, std::string("expected '") + c + "' in polynomial: " + s);
        ++i;
    }
    std::string digits() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(ErrorCode::ParseError, "expected number in polynomial: " + s);
        return s.substr(start, i - start);
    }
    // integer or a/b
    Scalar number() {
        std::string num = digits();
        if (peek() == '/') {
            ++i;
            std::string den = digits();
            if (Int(den) == 0) fail(ErrorCode::ParseError, "zero denominator: " + s);
            return Scalar(Rat(Int(num), Int(den)));
        }
        return Scalar(Rat(Int(num)));
    }
    std::string identifier() {
        skip();
        std::size_t start = i;
        if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
            fail(ErrorCode::ParseError, "expected variable in polynomial: " + s);
        ++i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        if (i < s.size() && s[i] == '[') {
            ++i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == ','))
                ++i;
            if (i >= s.size() || s[i] != ']')
                fail(ErrorCode::ParseError, "unterminated bracket in variable: " + s);
            ++i;
        }
        return s.substr(start, i - start);
    }
};

} // namespace

Poly Poly::parse(const std::string& text, unsigned cyclo_order) {
    PolyLexer lx{text};
    if (lx.eof()) fail(ErrorCode::ParseError, "empty polynomial");
    Poly total;
    bool first = true;
    while (!lx.eof()) {
        bool neg = false;
        bool saw_sign = false;
        while (lx.peek() == '+' || lx.peek() == '-') {
            neg ^= (lx.s[lx.i] == '-');
            ++lx.i;
            saw_sign = true;
        }
        if (!first && !saw_sign)
            fail(ErrorCode::ParseError, "expected + or - between terms: " + text);
        first = false;
        Poly term(1);
        bool expect_factor = true;
        while (expect_factor) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                term *= Poly(lx.number());
            } else if (c == '(') {
                std::size_t start = lx.i;
                int depth = 0;
                do {
                    if (lx.i >= lx.s.size())
                        fail(ErrorCode::ParseError, "unbalanced parentheses: " + text);
                    if (lx.s[lx.i] == '(') ++depth;
                    if (lx.s[lx.i] == ')') --depth;
                    ++lx.i;
                } while (depth > 0);
                term *= Poly(Scalar::parse(lx.s.substr(start, lx.i - start), cyclo_order));
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string name = lx.identifier();
                unsigned exp = 1;
                if (lx.peek() == '^') {
                    ++lx.i;
                    exp = static_cast<unsigned>(std::stoul(lx.digits()));
                }
                term *= Poly::variable(name, exp);
            } else {
                fail(ErrorCode::ParseError, "expected term in polynomial: " + text);
            }
            if (lx.peek() == '*') {
                ++lx.i;
            } else {
                expect_factor = false;
            }
        }
        total += neg ? -term : term;
    }
    return total;
}

} // namespace frob
