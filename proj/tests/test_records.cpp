#include "kostka/records.hpp"

#include "kostka/errors.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

using namespace kostka;

namespace {

ResultRecord sample_record() {
    ResultRecord r;
    r.family = "gt";
    r.input = {{"lambda", "3,2,1"}, {"mu", ""}, {"weight", "1,1,1,1,1,1"}};
    r.dimension = 7;
    r.ehrhart = {"1", "7/2", "9/2", "3", "5/4", "1/4", "1/24", "1/336"};
    r.hstar = {"1", "5", "7", "2", "1", "0", "0", "0"};
    r.ehrhart_nonneg = true;
    r.flags.hstar_nonneg = true;
    r.flags.palindromic = false;
    r.flags.log_concave = true;
    r.flags.ultra_log_concave = false;
    r.flags.real_rooted = false;
    r.transcript = {{0, "1"}, {-1, "0"}, {1, "16"}};
    r.duration_ms = 1.25;
    return r;
}

} // namespace

TEST_CASE("record json round trip") {
    ResultRecord r = sample_record();
    ResultRecord back = ResultRecord::from_json_line(r.to_json_line());
    CHECK(back == r);
    CHECK(back.key() == r.key());
    CHECK_THROWS_AS(ResultRecord::from_json_line("{"), ParseError);
}

TEST_CASE("record reverification") {
    ResultRecord r;
    r.family = "gt";
    r.input = {{"lambda", "2,1"}, {"mu", ""}, {"weight", "1,1,1"}};
    r.dimension = 1;
    r.ehrhart = {"1", "1"};
    r.hstar = {"1", "0"};
    r.transcript = {{0, "1"}, {1, "2"}, {-1, "0"}};
    CHECK(reverify(r));
    r.transcript.push_back({5, "7"});
    CHECK_FALSE(reverify(r));
}

TEST_CASE("store append and resume") {
    const std::string path = std::filesystem::temp_directory_path() / "kostka_store_test.jsonl";
    std::remove(path.c_str());
    {
        ResultStore store(path);
        CHECK(store.size() == 0);
        CHECK_FALSE(store.contains(sample_record().key()));
        store.append(sample_record());
        CHECK(store.contains(sample_record().key()));
        CHECK(store.size() == 1);
    }
    {
        // index is rebuilt on open
        ResultStore store(path);
        CHECK(store.size() == 1);
        CHECK(store.contains(sample_record().key()));
    }
    std::remove(path.c_str());
}
