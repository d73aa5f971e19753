#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace braidkit {

struct ClaimRecord {
    std::string id;
    std::string description;
    std::string op;
    nlohmann::json args;
    nlohmann::json expect;
    std::string location;
    std::string quote;
    std::string provenance;       // PAPER | DERIVED
    std::string derived_oracle;   // required for DERIVED
    int line = 0;                 // 1-based start of the YAML document
};

/// One YAML document per record. Throws InvalidInput with a line number on
/// malformed YAML, missing fields, or an unknown op.
std::vector<ClaimRecord> parse_corpus(const std::string& yaml_text);
std::vector<ClaimRecord> load_corpus(const std::string& path);

/// `expect` matches `actual` when every key of an expected object matches the
/// same key of actual (extra actual keys are ignored), arrays match
/// elementwise with equal length, and scalars are equal. An expected object
/// whose keys all start with '$' is a numeric test: $eq, $ge, $gt, $le, $lt.
bool json_matches(const nlohmann::json& actual, const nlohmann::json& expect);

enum class ClaimStatus { pass, fail, error };

struct ClaimResult {
    std::string id;
    ClaimStatus status = ClaimStatus::error;
    nlohmann::json actual;
    std::string message;
    double seconds = 0;
};

struct ClaimReport {
    std::vector<ClaimResult> results;   // corpus order
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;

    bool ok() const noexcept { return failed == 0 && errors == 0; }
};

ClaimReport run_claims(const std::vector<ClaimRecord>& records, int threads = 1);
ClaimReport run_corpus(const std::string& path, int threads = 1);

std::string to_string(ClaimStatus s);
nlohmann::json to_json(const ClaimReport& r);
std::string to_table(const ClaimReport& r);

} // namespace braidkit
