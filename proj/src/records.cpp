#include "kostka/records.hpp"

#include "kostka/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kostka {

std::string ResultRecord::key() const {
    std::ostringstream out;
    out << family;
    for (const auto& [k, v] : input) out << ';' << k << '=' << v;
    return out.str();
}

std::string ResultRecord::to_json_line() const {
    nlohmann::json j;
    j["family"] = family;
    j["input"] = input;
    j["dimension"] = dimension;
    j["ehrhart"] = ehrhart;
    j["hstar"] = hstar;
    j["flags"] = {
        {"ehrhart_nonneg", ehrhart_nonneg},
        {"hstar_nonneg", flags.hstar_nonneg},
        {"palindromic", flags.palindromic},
        {"log_concave", flags.log_concave},
        {"ultra_log_concave", flags.ultra_log_concave},
        {"real_rooted", flags.real_rooted},
    };
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& [x, v] : transcript) ts.push_back({{"x", x}, {"value", v}});
    j["transcript"] = std::move(ts);
    j["engine_version"] = engine_version;
    j["duration_ms"] = duration_ms;
    return j.dump();
}

ResultRecord ResultRecord::from_json_line(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad result record: ") + e.what());
    }
    ResultRecord r;
    r.family = j.at("family").get<std::string>();
    r.input = j.at("input").get<std::map<std::string, std::string>>();
    r.dimension = j.at("dimension").get<int>();
    r.ehrhart = j.at("ehrhart").get<std::vector<std::string>>();
    r.hstar = j.at("hstar").get<std::vector<std::string>>();
    const auto& f = j.at("flags");
    r.ehrhart_nonneg = f.at("ehrhart_nonneg").get<bool>();
    r.flags.hstar_nonneg = f.at("hstar_nonneg").get<bool>();
    r.flags.palindromic = f.at("palindromic").get<bool>();
    r.flags.log_concave = f.at("log_concave").get<bool>();
    r.flags.ultra_log_concave = f.at("ultra_log_concave").get<bool>();
    r.flags.real_rooted = f.at("real_rooted").get<bool>();
    for (const auto& e : j.at("transcript")) {
        r.transcript.emplace_back(e.at("x").get<Int>(), e.at("value").get<std::string>());
    }
    r.engine_version = j.at("engine_version").get<std::string>();
    r.duration_ms = j.at("duration_ms").get<double>();
    return r;
}

RationalPolynomial ResultRecord::polynomial() const {
    std::vector<BigRat> coeffs;
    coeffs.reserve(ehrhart.size());
    for (const auto& s : ehrhart) coeffs.push_back(parse_bigrat(s));
    return RationalPolynomial(std::move(coeffs));
}

HStarVector ResultRecord::hstar_vector() const {
    std::vector<BigInt> entries;
    entries.reserve(hstar.size());
    for (const auto& s : hstar) entries.push_back(parse_bigint(s));
    return HStarVector(std::move(entries));
}

bool reverify(const ResultRecord& rec) {
    const RationalPolynomial poly = rec.polynomial();
    for (const auto& [x, value] : rec.transcript) {
        if (poly.evaluate(x) != BigRat(parse_bigint(value))) return false;
    }
    return true;
}

ResultStore::ResultStore(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        keys_.insert(ResultRecord::from_json_line(line).key());
    }
}

void ResultStore::append(const ResultRecord& rec) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot open result store '" + path_ + "' for appending");
    out << rec.to_json_line() << '\n';
    out.flush();
    keys_.insert(rec.key());
}

std::string ResultStore::default_path() {
    if (const char* env = std::getenv("KOSTKA_STORE")) return env;
    return "kostka-results.jsonl";
}

} // namespace kostka
