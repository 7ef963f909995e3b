#include "doctest.h"

#include "pmscheme/cache.hpp"
#include "pmscheme/errors.hpp"
#include "pmscheme/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace pmscheme;
using json_io::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("pmscheme-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("rationals and integers")
{
    CHECK(json_io::to_json(make_rational(-6, 4)) == "-3/2");
    CHECK(json_io::to_json(Rational(5)) == "5/1");
    CHECK(json_io::rational_from_json("10/4") == make_rational(5, 2));
    CHECK(json_io::rational_from_json(json(7)) == 7);
    CHECK(json_io::integer_from_json("123456789012345678901234567890") ==
          Integer("123456789012345678901234567890"));
    CHECK_THROWS_AS(json_io::rational_from_json("1/0"), domain_error);
    CHECK_THROWS_AS(json_io::integer_from_json("1/2"), domain_error);
    CHECK(json_io::partition_from_json(json::array({2, 6})) == IntegerPartition{6, 2});
}

TEST_CASE("tables round trip")
{
    for (int k = 1; k <= 5; ++k) {
        const auto t = full_char_table_small(k);
        const json j = json_io::to_json(t);
        CHECK(json_io::table_from_json(json::parse(j.dump())) == t);
    }
    const auto partial = partial_char_table(6).table;
    CHECK(json_io::table_from_json(json_io::to_json(partial)) == partial);
}

TEST_CASE("malformed tables name the field")
{
    json j = json_io::to_json(full_char_table_small(3));
    json missing = j;
    missing.erase("classes");
    CHECK_THROWS_WITH_AS(json_io::table_from_json(missing), doctest::Contains("classes"), domain_error);
    json ragged = j;
    ragged["entries"][1].erase(0);
    CHECK_THROWS_AS(json_io::table_from_json(ragged), domain_error);
    json odd = j;
    odd["modules"][0] = json::array({5, 1});
    CHECK_THROWS_AS(json_io::table_from_json(odd), domain_error);
}

TEST_CASE("matrix round trip")
{
    RationalMatrix m(2, 3);
    m(0, 1) = make_rational(1, 3);
    m(1, 2) = -4;
    CHECK(json_io::matrix_from_json(json_io::to_json(m)) == m);
}

TEST_CASE("cache hits, misses and corruption")
{
    const auto dir = scratch_dir("cache");
    std::ostringstream warnings;
    ResultCache cache(dir, &warnings);
    int calls = 0;
    auto compute = [&] {
        ++calls;
        return json{{"value", 42}};
    };
    const json params{{"x", 1}};
    CHECK(cache.get_or_compute("op", 3, params, compute)["value"] == 42);
    CHECK(cache.get_or_compute("op", 3, params, compute)["value"] == 42);
    CHECK(calls == 1);
    CHECK(cache.hits() == 1);
    cache.get_or_compute("op", 4, params, compute);
    CHECK(calls == 2);

    std::ofstream(cache.entry_path("op", 3, params)) << "{not json";
    CHECK(cache.get_or_compute("op", 3, params, compute)["value"] == 42);
    CHECK(calls == 3);
    CHECK(cache.discarded() == 1);
    CHECK(warnings.str().find("discarding") != std::string::npos);

    // An entry whose stored key differs is treated as a miss.
    std::ofstream(cache.entry_path("op", 3, params)) << R"({"key":{"other":1},"value":{"value":0}})";
    CHECK(cache.get_or_compute("op", 3, params, compute)["value"] == 42);
    CHECK(calls == 4);
    fs::remove_all(dir);
}

TEST_CASE("cached full table survives a wrong entry")
{
    const auto dir = scratch_dir("table");
    std::ostringstream warnings;
    ResultCache cache(dir, &warnings);
    const auto t = cached_full_table(cache, 4);
    const auto path = cache.entry_path("char-table", 4, {{"full", true}});
    json entry = json::parse(std::ifstream(path));
    entry["value"]["entries"][1][2] = "-3/1";
    std::ofstream(path) << entry.dump();
    CHECK(cached_full_table(cache, 4) == t);
    CHECK(warnings.str().find("failed verification") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("disabled cache always computes")
{
    ResultCache cache(scratch_dir("off"), nullptr, false);
    int calls = 0;
    for (int i = 0; i < 3; ++i) cache.get_or_compute("op", 1, json::object(), [&] { return json(++calls); });
    CHECK(calls == 3);
    CHECK_FALSE(fs::exists(cache.directory()));
}
