#ifndef RML_REPORT_HPP
#define RML_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace rml {

/// Malformed input: dangling indices, non-total tables, schema errors.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search or enumeration exceeded the configured size caps.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Size guards for enumerative operations. Exceeding a cap raises
/// CapacityError; nothing is ever silently truncated.
struct Caps {
    int max_objects = 16;
    int max_morphisms = 64;
    int max_het = 8;
};

struct Violation {
    std::string law;      // which law broke
    std::string witness;  // replayable witness data
};

/// Outcome of a law check: pass, or the list of violated laws with
/// witnesses. Violations are emitted in deterministic scan order.
struct LawReport {
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
    void fail(std::string law, std::string witness) {
        violations.push_back({std::move(law), std::move(witness)});
    }
    void merge(const LawReport& other) {
        violations.insert(violations.end(), other.violations.begin(),
                          other.violations.end());
    }
    std::string summary() const {
        if (pass()) return "pass";
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v.law + " [" + v.witness + "]";
        }
        return s;
    }
};

}  // namespace rml

#endif
