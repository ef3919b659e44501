#include "frob/symprod.hpp"

#include <set>

namespace frob {

FiniteSpace::FiniteSpace(std::size_t m) {
    if (m == 0) fail(ErrorCode::BadInput, "a space needs at least one point");
    labels_.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) labels_.push_back("p" + std::to_string(i));
}

FiniteSpace::FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) fail(ErrorCode::BadInput, "a space needs at least one point");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        fail(ErrorCode::BadInput, "point labels must be distinct");
}

std::size_t FiniteSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    fail(ErrorCode::UnknownPoint, "no point labelled " + label);
}

FinAlgebra FiniteSpace::algebra() const {
    std::size_t m = labels_.size();
    Tensor3 c(m, std::vector<Vec>(m, Vec(m, Scalar(0))));
    for (std::size_t i = 0; i < m; ++i) c[i][i][i] = Scalar(1);
    std::vector<std::string> names;
    names.reserve(m);
    for (const auto& l : labels_) names.push_back("delta_" + l);
    return FinAlgebra(std::move(c), Vec(m, Scalar(1)), std::move(names));
}

std::size_t PointMultiset::total() const {
    std::size_t n = 0;
    for (const auto& [label, k] : counts) {
        (void)label;
        n += k;
    }
    return n;
}

void PointMultiset::add(const std::string& label, std::size_t times) {
    if (times == 0) return;
    counts[label] += times;
}

std::string PointMultiset::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [label, k] : counts)
        for (std::size_t i = 0; i < k; ++i) {
            if (!first) out += ", ";
            first = false;
            out += label;
        }
    return out + "}";
}

Functional evaluation_functional(const PointMultiset& pts, const FiniteSpace& space) {
    Vec values(space.size(), Scalar(0));
    for (const auto& [label, k] : pts.counts)
        values[space.index_of(label)] = Scalar(static_cast<long long>(k));
    return Functional{std::move(values)};
}

PointMultiset decompose(const Functional& f, const FiniteSpace& space, std::size_t n) {
    if (f.values.size() != space.size())
        fail(ErrorCode::BadInput, "functional arity does not match the space");

    // Cheap pointwise checks first: each weight a nonnegative integer...
    for (std::size_t i = 0; i < space.size(); ++i) {
        const Scalar& w = f.values[i];
        if (!w.is_integer() || w.rat() < 0)
            fail(ErrorCode::NotAnNHomomorphism,
                 "weight f(delta_" + space.labels()[i] + ") = " + w.str() +
                     " is not a nonnegative integer");
    }
    // ...summing to n.
    Scalar sum(0);
    for (const Scalar& w : f.values) sum = sum + w;
    if (sum != Scalar(static_cast<long long>(n)))
        fail(ErrorCode::NotAnNHomomorphism,
             "weights sum to " + sum.str() + ", expected " + std::to_string(n));

    // Then the full criterion.
    PhiEvaluator ev(space.algebra(), f);
    auto check = ev.is_n_homomorphism(n);
    if (!check.pass)
        fail(ErrorCode::NotAnNHomomorphism, check.witness);

    PointMultiset out;
    for (std::size_t i = 0; i < space.size(); ++i) {
        Rat w = f.values[i].rat();
        out.add(space.labels()[i],
                static_cast<std::size_t>(boost::multiprecision::numerator(w)));
    }
    return out;
}

} // namespace frob
