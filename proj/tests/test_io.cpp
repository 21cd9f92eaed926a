#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "pclab/io.hpp"
#include "pclab/report.hpp"

using namespace pclab;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() /
               ("pclab-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("reporter line format and exit contract")
{
    std::ostringstream live;
    Reporter rep(&live);
    rep.add("alpha", CheckStatus::Pass, "n=5");
    rep.add("beta", CheckStatus::Warn, "printed value differs");
    CHECK(rep.all_pass());
    rep.add("gamma", CheckStatus::Fail, "witness n=3 val=1");
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.fail_count() == 1);
    CHECK(rep.warn_count() == 1);

    CHECK(live.str() ==
          "CHECK alpha PASS n=5\n"
          "CHECK beta WARN printed value differs\n"
          "CHECK gamma FAIL witness n=3 val=1\n");

    auto doc = nlohmann::json::parse(rep.json());
    CHECK(doc["checks"].size() == 3);
    CHECK(doc["checks"][0]["id"] == "alpha");
    CHECK(doc["checks"][2]["status"] == "FAIL");
    CHECK(doc["summary"]["fail"] == 1);
}

TEST_CASE("cache round trip is bit-identical")
{
    TempDir dir;
    CacheKey key{"twocolor", 7, 30, 0};
    std::vector<Coefficient> values;
    for (long n = 0; n <= 30; ++n)
        values.push_back(pow7(static_cast<unsigned long>(n)) + n);
    cache_store(dir.path, key, values, "unit test");
    auto loaded = cache_load(dir.path, key);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == values);

    // differing parameters never reuse the file
    CHECK_FALSE(cache_load(dir.path, CacheKey{"twocolor", 7, 31, 0}).has_value());
    CHECK_FALSE(cache_load(dir.path, CacheKey{"twocolor", 49, 30, 0}).has_value());
    CHECK_FALSE(cache_load(dir.path, CacheKey{"partition", 0, 30, 0}).has_value());
}

TEST_CASE("stale cache versions are recomputed, not trusted")
{
    TempDir dir;
    CacheKey key{"partition", 0, 20, 0};
    {
        std::ofstream out(dir.path / key.filename());
        out << "pclab-table-cache 999\nkind partition\nnmax 20\nmod 0\n"
               "generator old\nvalues\n";
        for (int i = 0; i <= 20; ++i)
            out << "1\n";
    }
    CHECK_FALSE(cache_load(dir.path, key).has_value());
    auto t = partition_table_cached(dir.path, 20, "unit test");
    CHECK(t.at(5) == 7);  // recomputed correctly
    auto reloaded = cache_load(dir.path, key);
    REQUIRE(reloaded.has_value());
    CHECK((*reloaded)[5] == 7);
}

TEST_CASE("cached builders round-trip through disk")
{
    TempDir dir;
    auto first = partition_table_cached(dir.path, 64, "unit test");
    auto second = partition_table_cached(dir.path, 64, "unit test");
    CHECK(first.values == second.values);

    auto m1 = two_color_mod_cached(dir.path, 7, 64, 4, "unit test");
    auto m2 = two_color_mod_cached(dir.path, 7, 64, 4, "unit test");
    CHECK(m1.values == m2.values);
    CHECK(m1.modulus == 2401);
}

TEST_CASE("PCLAB_CACHE overrides the configured directory")
{
    setenv("PCLAB_CACHE", "/tmp/pclab-env-cache", 1);
    CHECK(resolve_cache_dir("/somewhere/else") ==
          std::filesystem::path("/tmp/pclab-env-cache"));
    unsetenv("PCLAB_CACHE");
    CHECK(resolve_cache_dir("/somewhere/else") ==
          std::filesystem::path("/somewhere/else"));
    CHECK(resolve_cache_dir("").empty());
}

TEST_CASE("exports")
{
    auto p = partition_count(10);
    std::ostringstream csv;
    export_values_csv(p.values, "p", csv);
    CHECK(csv.str() ==
          "n,p\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n6,11\n7,15\n8,22\n9,30\n10,42\n");

    auto t = two_color_count(7, 7);
    std::ostringstream tcsv;
    export_values_csv(t.values, "p2", tcsv);
    CHECK(tcsv.str() == "n,p2\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n6,11\n7,16\n");

    std::ostringstream js;
    export_values_json(p.values, "partition", js);
    auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["partition"].size() == 11);
    CHECK(doc["partition"][10] == "42");  // decimal strings, not numbers

    MTable m;
    std::ostringstream mcsv;
    export_mtable_csv(m, 2, 4, mcsv);
    CHECK(mcsv.str() == "i\\j,1,2,3,4\n1,7,49,0,0\n2,10,441,4802,16807\n");

    std::ostringstream fact;
    export_mtable_factored(m, 4, 2, fact);
    CHECK(fact.str().find("82*7") != std::string::npos);
    CHECK(fact.str().find("9*7^2") != std::string::npos);

    std::ostringstream mjson;
    export_mtable_json(m, 7, 14, mjson);
    auto mdoc = nlohmann::json::parse(mjson.str());
    CHECK(mdoc["entries"][6][13] == pow7(20).get_str());
}
