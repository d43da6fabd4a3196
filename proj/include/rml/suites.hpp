#ifndef RML_SUITES_HPP
#define RML_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rml/report.hpp"

namespace rml {

struct SuiteOptions {
    std::string input;  // path to a JSON document; required by most suites
    std::uint64_t seed = 1;
    int count = 10;
    int max_objects = 4;
    int max_hom = 3;
    bool dense = false;
    bool dual = false;
    int chain_bound = 2;
};

struct CheckResult {
    std::string id;
    bool pass = true;
    LawReport report;
    nlohmann::json data;  // suite-specific verdicts and constructions
};

/// Deterministic run summary: identical inputs and seed give identical JSON
/// bytes. Wall time appears only in the text rendering.
struct RunReport {
    std::string command;
    std::string input_digest = "-";
    std::uint64_t seed = 0;
    std::vector<CheckResult> results;  // sorted by id
    long wall_ms = 0;

    bool pass() const;
    int exit_code() const { return pass() ? 0 : 1; }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Dispatches one verification suite. Known names: validate, kleisli,
/// algebras, compare, nerve-check, collapse, section-roundtrip, semanticiser,
/// quantale-validate (alias: quantale), v-nerve-check, yo-bijection, corpus.
/// Throws InputError for unknown suites or malformed inputs and CapacityError
/// when enumeration caps are exceeded.
RunReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace rml

#endif
