#include "braidkit/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <yaml-cpp/yaml.h>

#include "braidkit/error.hpp"
#include "braidkit/ops.hpp"

namespace braidkit {

namespace {

using json = nlohmann::json;

json scalar_to_json(const YAML::Node& n) {
    const std::string& s = n.Scalar();
    if (n.Tag() == "!") return s;   // quoted
    if (s.empty() || s == "~" || s == "null") return nullptr;
    if (s == "true") return true;
    if (s == "false") return false;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    return s;
}

json yaml_to_json(const YAML::Node& n) {
    switch (n.Type()) {
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined:
        return nullptr;
    case YAML::NodeType::Scalar:
        return scalar_to_json(n);
    case YAML::NodeType::Sequence: {
        json a = json::array();
        for (const auto& x : n) a.push_back(yaml_to_json(x));
        return a;
    }
    case YAML::NodeType::Map: {
        json o = json::object();
        for (const auto& kv : n) o[kv.first.as<std::string>()] = yaml_to_json(kv.second);
        return o;
    }
    }
    return nullptr;
}

[[noreturn]] void corpus_error(int line, const std::string& what) {
    throw InvalidInput("corpus line " + std::to_string(line) + ": " + what);
}

std::string required_string(const json& doc, const char* key, int line) {
    if (!doc.contains(key) || !doc[key].is_string() || doc[key].get<std::string>().empty())
        corpus_error(line, std::string("missing or empty '") + key + "'");
    return doc[key].get<std::string>();
}

ClaimRecord record_from(const json& doc, int line) {
    if (!doc.is_object()) corpus_error(line, "a record must be a mapping");
    ClaimRecord r;
    r.line = line;
    r.id = required_string(doc, "id", line);
    r.description = doc.value("description", "");
    if (!doc.contains("command") || !doc["command"].is_object()) corpus_error(line, r.id + ": missing 'command'");
    r.op = required_string(doc["command"], "op", line);
    const auto& names = op_names();
    if (std::find(names.begin(), names.end(), r.op) == names.end())
        corpus_error(line, r.id + ": unknown op '" + r.op + "'");
    r.args = doc["command"].value("args", json::object());
    if (!doc.contains("expect")) corpus_error(line, r.id + ": missing 'expect'");
    r.expect = doc["expect"];
    r.provenance = required_string(doc, "provenance", line);
    if (r.provenance != "PAPER" && r.provenance != "DERIVED")
        corpus_error(line, r.id + ": provenance must be PAPER or DERIVED");
    if (doc.contains("anchor")) {
        const json& a = doc["anchor"];
        if (!a.is_object()) corpus_error(line, r.id + ": 'anchor' must be a mapping");
        r.location = a.value("location", "");
        r.quote = a.value("quote", "");
    }
    if (r.provenance == "PAPER" && r.quote.empty()) corpus_error(line, r.id + ": PAPER record needs anchor.quote");
    if (r.provenance == "DERIVED") {
        r.derived_oracle = doc.value("derived_oracle", "");
        if (r.derived_oracle.empty()) corpus_error(line, r.id + ": DERIVED record needs derived_oracle");
    }
    return r;
}

bool numeric_test(const json& actual, const json& expect) {
    if (!actual.is_number()) return false;
    const double a = actual.get<double>();
    for (auto it = expect.begin(); it != expect.end(); ++it) {
        if (!it.value().is_number()) return false;
        const double b = it.value().get<double>();
        const std::string& k = it.key();
        bool ok;
        if (k == "$eq") ok = a == b;
        else if (k == "$ge") ok = a >= b;
        else if (k == "$gt") ok = a > b;
        else if (k == "$le") ok = a <= b;
        else if (k == "$lt") ok = a < b;
        else return false;
        if (!ok) return false;
    }
    return true;
}

bool is_numeric_test(const json& e) {
    if (!e.is_object() || e.empty()) return false;
    for (auto it = e.begin(); it != e.end(); ++it)
        if (it.key().empty() || it.key()[0] != '$') return false;
    return true;
}

ClaimResult run_one(const ClaimRecord& r) {
    ClaimResult out;
    out.id = r.id;
    const auto start = std::chrono::steady_clock::now();
    try {
        out.actual = run_op(r.op, r.args);
        if (json_matches(out.actual, r.expect)) {
            out.status = ClaimStatus::pass;
        } else {
            out.status = ClaimStatus::fail;
            out.message = "expected " + r.expect.dump() + ", got " + out.actual.dump();
        }
    } catch (const std::exception& e) {
        out.status = ClaimStatus::error;
        out.message = e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

} // namespace

std::vector<ClaimRecord> parse_corpus(const std::string& yaml_text) {
    std::vector<YAML::Node> docs;
    try {
        docs = YAML::LoadAll(yaml_text);
    } catch (const YAML::ParserException& e) {
        throw InvalidInput("corpus line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    std::vector<ClaimRecord> out;
    for (const auto& d : docs) {
        if (d.IsNull()) continue;
        out.push_back(record_from(yaml_to_json(d), d.Mark().line + 1));
    }
    return out;
}

std::vector<ClaimRecord> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read corpus '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_corpus(ss.str());
}

bool json_matches(const json& actual, const json& expect) {
    if (is_numeric_test(expect)) return numeric_test(actual, expect);
    if (expect.is_object()) {
        if (!actual.is_object()) return false;
        for (auto it = expect.begin(); it != expect.end(); ++it) {
            auto a = actual.find(it.key());
            if (a == actual.end() || !json_matches(*a, it.value())) return false;
        }
        return true;
    }
    if (expect.is_array()) {
        if (!actual.is_array() || actual.size() != expect.size()) return false;
        for (std::size_t i = 0; i < expect.size(); ++i)
            if (!json_matches(actual[i], expect[i])) return false;
        return true;
    }
    return actual == expect;
}

ClaimReport run_claims(const std::vector<ClaimRecord>& records, int threads) {
    ClaimReport report;
    report.results.resize(records.size());
    const int workers = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(records.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < records.size();) report.results[i] = run_one(records[i]);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& r : report.results) {
        if (r.status == ClaimStatus::pass) ++report.passed;
        else if (r.status == ClaimStatus::fail) ++report.failed;
        else ++report.errors;
    }
    return report;
}

ClaimReport run_corpus(const std::string& path, int threads) { return run_claims(load_corpus(path), threads); }

std::string to_string(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::error: return "error";
    }
    return "error";
}

json to_json(const ClaimReport& r) {
    json claims = json::array();
    for (const auto& c : r.results) {
        json j = {{"id", c.id}, {"status", to_string(c.status)}};
        if (c.status == ClaimStatus::fail) j["actual"] = c.actual;
        if (!c.message.empty()) j["message"] = c.message;
        claims.push_back(j);
    }
    return {{"claims", claims},
            {"summary", {{"total", r.results.size()}, {"pass", r.passed}, {"fail", r.failed}, {"error", r.errors}}}};
}

std::string to_table(const ClaimReport& r) {
    std::size_t width = 2;
    for (const auto& c : r.results) width = std::max(width, c.id.size());
    std::ostringstream out;
    char buf[64];
    double total = 0;
    for (const auto& c : r.results) {
        total += c.seconds;
        std::snprintf(buf, sizeof buf, "%8.3fs", c.seconds);
        out << (c.status == ClaimStatus::pass ? "PASS " : c.status == ClaimStatus::fail ? "FAIL " : "ERROR") << "  "
            << c.id << std::string(width - c.id.size(), ' ') << buf;
        if (!c.message.empty()) out << "  " << c.message;
        out << '\n';
    }
    std::snprintf(buf, sizeof buf, "%.2fs", total);
    out << r.results.size() << " claims: " << r.passed << " pass, " << r.failed << " fail, " << r.errors
        << " error (" << buf << ")\n";
    return out.str();
}

} // namespace braidkit
