// Runs the full-scale certificate suite and prints one pass/fail line per
// numbered criterion, plus the recorded convention notes.  Exit status is
// nonzero when any criterion fails.

#include "frob/verify.hpp"

#include <cstdio>
#include <map>

int main() {
    frob::RunReport report = frob::run_all("full", frob::kDefaultSeed);

    std::map<unsigned, bool> criteria;
    for (const auto& e : report.entries)
        if (!e.note) {
            auto [it, fresh] = criteria.try_emplace(e.criterion, true);
            it->second = it->second && e.pass;
        }

    bool all = true;
    for (const auto& [criterion, pass] : criteria) {
        std::printf("criterion %2u: %s\n", criterion, pass ? "pass" : "FAIL");
        all = all && pass;
    }
    for (const auto& e : report.entries)
        if (e.note) std::printf("note: %s\n", e.check.c_str());
    for (const auto& e : report.entries)
        if (!e.note && !e.pass)
            std::printf("failed: [%u] %s -- %s\n", e.criterion, e.check.c_str(),
                        e.witness.c_str());
    std::printf("%s\n", all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
    return all ? 0 : 1;
}
