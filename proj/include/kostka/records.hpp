#pragma once

#include "kostka/bigint.hpp"
#include "kostka/ehrhart.hpp"
#include "kostka/rational_polynomial.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kostka {

inline constexpr const char* kEngineVersion = "0.1.0";

// Self-contained computation result: re-verifiable without recomputation
// by evaluating the stored polynomial against the stored transcript.
// Big integers and rationals are carried as exact decimal / "p/q" strings.
struct ResultRecord {
    std::string family;                                  // "gt" | "order" | "birkhoff"
    std::map<std::string, std::string> input;            // family-specific descriptor
    int dimension = 0;
    std::vector<std::string> ehrhart;                    // coefficients, lowest degree first
    std::vector<std::string> hstar;
    bool ehrhart_nonneg = false;
    HStarProperties flags;
    std::vector<std::pair<Int, std::string>> transcript; // (x, value)
    std::string engine_version = kEngineVersion;
    double duration_ms = 0;

    // Canonical resume key derived from family + input.
    std::string key() const;

    std::string to_json_line() const;
    static ResultRecord from_json_line(const std::string& line);

    RationalPolynomial polynomial() const;
    HStarVector hstar_vector() const;

    bool operator==(const ResultRecord&) const = default;
};

// True iff the stored polynomial reproduces every transcript value.
bool reverify(const ResultRecord& rec);

// Append-only line-delimited JSON store; the key index is rebuilt on open.
class ResultStore {
public:
    explicit ResultStore(std::string path);

    const std::string& path() const { return path_; }
    bool contains(const std::string& key) const { return keys_.contains(key); }
    std::size_t size() const { return keys_.size(); }

    void append(const ResultRecord& rec);

    // --out flag, KOSTKA_STORE env var, or "kostka-results.jsonl".
    static std::string default_path();

private:
    std::string path_;
    std::set<std::string> keys_;
};

} // namespace kostka
