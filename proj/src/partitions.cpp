#include "frob/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace frob {

SetPartition::SetPartition(std::vector<std::vector<unsigned>> blocks, unsigned n)
    : n_(n), blocks_(std::move(blocks)) {
    std::vector<bool> seen(n, false);
    std::size_t total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) fail(ErrorCode::BadInput, "empty block in set partition");
        std::sort(b.begin(), b.end());
        for (unsigned e : b) {
            if (e < 1 || e > n)
                fail(ErrorCode::BadInput,
                     "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
            if (seen[e - 1])
                fail(ErrorCode::BadInput, "element " + std::to_string(e) + " repeated");
            seen[e - 1] = true;
        }
        total += b.size();
    }
    if (total != n) fail(ErrorCode::BadInput, "blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::string SetPartition::str() const {
    std::string out;
    for (const auto& b : blocks_) {
        out += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(b[i]);
        }
        out += '}';
    }
    return out;
}

std::vector<SetPartition> all_partitions(unsigned n) {
    std::vector<SetPartition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<unsigned> rgs(n, 0);
    auto emit = [&]() {
        unsigned k = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<unsigned>> blocks(k);
        for (unsigned i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
        out.emplace_back(std::move(blocks), n);
    };
    // Restricted growth: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    auto rec = [&](auto&& self, unsigned i, unsigned mx) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (unsigned v = 0; v <= mx + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(mx, v));
        }
    };
    rgs[0] = 0;
    rec(rec, 1, 0);
    return out;
}

Int SetPartitionVector::coeff(const SetPartition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Int(0) : it->second;
}

void SetPartitionVector::add(const SetPartition& p, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SetPartitionVector& SetPartitionVector::operator+=(const SetPartitionVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

SetPartitionVector& SetPartitionVector::operator-=(const SetPartitionVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

std::string SetPartitionVector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        Int a = abs(c);
        if (a != 1) out += a.str() + "*";
        out += p.str();
    }
    return out;
}

SetPartition partition_product(const SetPartition& a, const SetPartition& b) {
    std::vector<std::vector<unsigned>> blocks = a.blocks();
    for (const auto& blk : b.blocks()) {
        std::vector<unsigned> shifted;
        for (unsigned e : blk) shifted.push_back(e + a.ground_size());
        blocks.push_back(std::move(shifted));
    }
    return SetPartition(std::move(blocks), a.ground_size() + b.ground_size());
}

SetPartitionVector partition_product(const SetPartitionVector& a,
                                     const SetPartitionVector& b) {
    SetPartitionVector out;
    for (const auto& [p, c] : a.terms())
        for (const auto& [q, d] : b.terms()) out.add(partition_product(p, q), c * d);
    return out;
}

SetPartitionVector chi(unsigned n) {
    SetPartitionVector out;
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<bool> seen(n, false);
        std::vector<std::vector<unsigned>> blocks;
        for (unsigned i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::vector<unsigned> blk;
            for (unsigned j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                blk.push_back(j + 1);
            }
            blocks.push_back(std::move(blk));
        }
        std::size_t cycles = blocks.size();
        Int sign = (n - cycles) % 2 ? -1 : 1;
        out.add(SetPartition(std::move(blocks), n), sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Int chi_coefficient(const SetPartition& p) {
    Int c = (p.ground_size() - p.block_count()) % 2 ? -1 : 1;
    for (const auto& b : p.blocks()) c *= factorial(static_cast<unsigned>(b.size() - 1));
    return c;
}

SetPartition pullback(const SetPartition& rho, const std::vector<unsigned>& q,
                      unsigned domain_size) {
    const unsigned m = rho.ground_size();
    if (q.size() != domain_size) fail(ErrorCode::BadInput, "map length mismatch");
    std::vector<bool> hit(m, false);
    for (unsigned v : q) {
        if (v < 1 || v > m)
            fail(ErrorCode::BadInput, "image value " + std::to_string(v) +
                                          " outside 1.." + std::to_string(m));
        hit[v - 1] = true;
    }
    for (unsigned t = 0; t < m; ++t)
        if (!hit[t])
            fail(ErrorCode::NotSurjective,
                 "element " + std::to_string(t + 1) + " has empty preimage");
    std::vector<std::vector<unsigned>> blocks;
    for (const auto& blk : rho.blocks()) {
        std::vector<bool> inblk(m, false);
        for (unsigned e : blk) inblk[e - 1] = true;
        std::vector<unsigned> pre;
        for (unsigned i = 1; i <= domain_size; ++i)
            if (inblk[q[i - 1] - 1]) pre.push_back(i);
        blocks.push_back(std::move(pre));
    }
    return SetPartition(std::move(blocks), domain_size);
}

SetPartitionVector pullback(const SetPartitionVector& v,
                            const std::vector<unsigned>& q, unsigned domain_size) {
    SetPartitionVector out;
    for (const auto& [p, c] : v.terms()) out.add(pullback(p, q, domain_size), c);
    return out;
}

std::vector<AmalgamatedUnion> amalgamated_unions(unsigned nx, unsigned ny) {
    std::vector<AmalgamatedUnion> out;
    // partner[x] = matched element of Y (1-based) or 0.
    std::vector<unsigned> partner(nx, 0);
    std::vector<bool> used(ny, false);
    auto emit = [&]() {
        // Classes: matched pairs {x, nx+y}; everything else a singleton.
        // Label classes by least element of the disjoint union.
        std::vector<unsigned> q(nx + ny, 0);
        unsigned next = 0;
        for (unsigned x = 0; x < nx; ++x) {
            q[x] = ++next;
            if (partner[x]) q[nx + partner[x] - 1] = next;
        }
        for (unsigned y = 0; y < ny; ++y)
            if (q[nx + y] == 0) q[nx + y] = ++next;
        out.push_back({std::move(q), next});
    };
    auto rec = [&](auto&& self, unsigned x) -> void {
        if (x == nx) {
            emit();
            return;
        }
        self(self, x + 1); // x unmatched
        for (unsigned y = 0; y < ny; ++y) {
            if (used[y]) continue;
            used[y] = true;
            partner[x] = y + 1;
            self(self, x + 1);
            partner[x] = 0;
            used[y] = false;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<CheckEntry> verify_lemma10(unsigned max_total) {
    std::vector<CheckEntry> out;
    std::vector<SetPartitionVector> chis(max_total + 1);
    for (unsigned n = 1; n <= max_total; ++n) chis[n] = chi(n);
    for (unsigned nx = 1; nx < max_total; ++nx)
        for (unsigned ny = 1; nx + ny <= max_total; ++ny) {
            SetPartitionVector lhs = partition_product(chis[nx], chis[ny]);
            SetPartitionVector rhs;
            auto unions = amalgamated_unions(nx, ny);
            for (const auto& u : unions) rhs += pullback(chis[u.target_size], u.q, nx + ny);
            bool ok = lhs == rhs;
            std::string name = "chi(" + std::to_string(nx) + ") chi(" +
                               std::to_string(ny) + ") as a sum over " +
                               std::to_string(unions.size()) + " gluings";
            out.push_back({name, ok, ok ? "" : "difference " + (lhs - rhs).str()});
        }
    return out;
}

Scalar functional_of_partition(const FinAlgebra& A, const Functional& f,
                               const SetPartition& p, const std::vector<Vec>& args) {
    if (args.size() != p.ground_size())
        fail(ErrorCode::BadInput, "argument count does not match the ground set");
    Scalar total(1);
    for (const auto& blk : p.blocks()) {
        Vec prod = args[blk[0] - 1];
        for (std::size_t i = 1; i < blk.size(); ++i)
            prod = A.multiply(prod, args[blk[i] - 1]);
        total *= f(prod);
    }
    return total;
}

Scalar eval_partition_vector(const FinAlgebra& A, const Functional& f,
                             const SetPartitionVector& v,
                             const std::vector<Vec>& args) {
    Scalar total(0);
    for (const auto& [p, c] : v.terms())
        total += Scalar(c) * functional_of_partition(A, f, p, args);
    return total;
}

Scalar phi_via_partitions(const PhiEvaluator& ev, const std::vector<Vec>& args) {
    return eval_partition_vector(ev.algebra(), ev.functional(),
                                 chi(static_cast<unsigned>(args.size())), args);
}

} // namespace frob
