#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "wgcalc/cache.hpp"
#include "wgcalc/io.hpp"

using namespace wgcalc;

namespace {

MPoly random_mpoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick_var(0, kNumVars - 1);
    std::uniform_int_distribution<int> pick_deg(0, 4);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    MPoly f;
    for (int i = 0; i < 6; ++i) {
        Exponents e(kNumVars, 0);
        e[pick_var(rng)] = pick_deg(rng);
        e[pick_var(rng)] += pick_deg(rng);
        f.add_term(e, rat(num(rng), den(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("mpoly serialisation round-trips bit-exactly") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        MPoly f = random_mpoly(rng);
        Json j = to_json(f);
        MPoly back = mpoly_from_json(j);
        CHECK(back == f);
        CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("ratfrac and symfunc serialisation round-trips") {
    std::mt19937 rng(4096);
    for (int trial = 0; trial < 10; ++trial) {
        MPoly n = random_mpoly(rng), d = random_mpoly(rng);
        if (d.is_zero()) continue;
        RatFrac f(n, d);
        Json j = to_json(f);
        RatFrac back = ratfrac_from_json(j);
        CHECK(back.num() == f.num());
        CHECK(back.den() == f.den());
        CHECK(to_json(back).dump() == j.dump());
    }
    SymFunc s = SymFunc::p(Partition({2, 1}), RatFrac(var_b() + 1, var_t() + 2)) +
                SymFunc::p(Partition({1, 1, 1}), RatFrac(rat(-3, 7)));
    CHECK(symfunc_from_json(to_json(s)) == s);
}

TEST_CASE("parsing helpers") {
    CHECK(parse_int_list("2,1,1") == std::vector<int>({2, 1, 1}));
    CHECK(parse_int_list("5") == std::vector<int>({5}));
    CHECK(parse_genus2("0") == 0);
    CHECK(parse_genus2("1/2") == 1);
    CHECK(parse_genus2("3/2") == 3);
    CHECK(parse_genus2("2") == 4);
    CHECK(genus_string(3) == "3/2");
    CHECK(genus_string(4) == "2");
    CHECK_THROWS_AS(parse_genus2("1/3"), ParseError);
}

TEST_CASE("result cache stores, hits, and survives corruption") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "wgcalc-cache-test";
    fs::remove_all(dir);
    ResultCache cache(dir.string());

    CHECK(!cache.load("some/key").has_value());
    Json value = to_json(var_b() * 3 + MPoly(1));
    cache.store("some/key", value);
    auto hit = cache.load("some/key");
    REQUIRE(hit.has_value());
    CHECK(hit->dump() == value.dump()); // byte-identical payload

    CHECK(cache.list() == std::vector<std::string>{"some/key"});

    // corrupt the record: becomes a miss and is collected by gc
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ofstream out(entry.path(), std::ios::app);
        out << "garbage";
    }
    CHECK(!cache.load("some/key").has_value());
    CHECK(cache.gc() == 1);
    CHECK(cache.list().empty());
    fs::remove_all(dir);
}

TEST_CASE("config file and environment") {
    namespace fs = std::filesystem;
    fs::path file = fs::temp_directory_path() / "wgcalc-test.conf";
    {
        std::ofstream out(file);
        out << "# comment\nk_max = 3\nformat = json\ncache_dir = /tmp/somewhere\n";
    }
    setenv("WGCALC_CONFIG", file.string().c_str(), 1);
    unsetenv("WGCALC_CACHE_DIR");
    RunConfig cfg = load_config_from_env();
    CHECK(cfg.k_max == 3);
    CHECK(cfg.format == "json");
    CHECK(cfg.cache_dir == "/tmp/somewhere");

    // the cache-dir env var takes precedence over the file
    setenv("WGCALC_CACHE_DIR", "/tmp/elsewhere", 1);
    cfg = load_config_from_env();
    CHECK(cfg.cache_dir == "/tmp/elsewhere");

    unsetenv("WGCALC_CONFIG");
    unsetenv("WGCALC_CACHE_DIR");
    fs::remove(file);

    RunConfig bad;
    bad.format = "yaml";
    CHECK_THROWS_AS(bad.validate(), ParseError);
}

TEST_CASE("hurwitz csv rows") {
    CHECK(hurwitz_csv_row(1, Partition({2}), var_b() * var_t()) == "1/2,1,2,\"b*t\"");
}
