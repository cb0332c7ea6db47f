#ifndef QDK_REPORT_HPP
#define QDK_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qdk {

struct CheckResult {
    std::string identity;
    bool pass = false;
    std::string witness;  // counterexample or note; empty when passing
};

/// Outcome of one verification suite. Results are kept sorted by identity
/// name so that assembly order does not matter.
struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> results;

    void add(const std::string& identity, bool pass, const std::string& witness = "") {
        results.push_back({identity, pass, witness});
    }
    void sort() {
        std::stable_sort(results.begin(), results.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                             return a.identity < b.identity;
                         });
    }
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    void merge(const Report& o) {
        for (const auto& r : o.results) results.push_back(r);
    }

    void print(std::ostream& os) const {
        for (const auto& r : results) {
            os << (r.pass ? "[pass] " : "[FAIL] ") << suite << ": " << r.identity;
            if (!r.witness.empty()) os << "  (" << r.witness << ")";
            os << "\n";
        }
    }
};

}  // namespace qdk

#endif  // QDK_REPORT_HPP
