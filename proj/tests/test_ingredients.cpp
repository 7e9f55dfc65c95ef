#include "urd/error.hpp"
#include "urd/ingredients.hpp"
#include "urd/serialize.hpp"
#include "urd/verifier.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace urd;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name)
{
    auto p = fs::temp_directory_path() / ("urd-test-" + name + "-" + std::to_string(std::random_device{}()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("resolvable transversal designs from finite fields")
{
    for (int q : {4, 5, 7, 8, 9}) {
        CAPTURE(q);
        Design d = rtd_prime_power(q);
        CHECK(verify(d, DesignSpec::rgdd({{q, 4}})).pass);
        CHECK(static_cast<int>(d.classes.size()) == q); // g(u-1)/3 with u = 4
    }
    CHECK_THROWS_AS(rtd_prime_power(3), IngredientError);
    CHECK_THROWS_AS(rtd_prime_power(6), IngredientError);
    CHECK_THROWS_AS(rtd_prime_power(2), IngredientError);
}

TEST_CASE("import verifies what it reads")
{
    auto dir = fresh_dir("import");
    Design d = rtd_prime_power(4);
    write_design(dir / "good.json", d);
    CHECK(import_ingredient(dir / "good.json", DesignSpec::rgdd({{4, 4}})) == d);
    CHECK_THROWS_AS(import_ingredient(dir / "good.json", DesignSpec::rgdd({{2, 8}})), IngredientError);

    Design broken = d;
    broken.classes.pop_back();
    write_design(dir / "short.json", broken);
    try {
        import_ingredient(dir / "short.json", DesignSpec::rgdd({{4, 4}}));
        FAIL("expected IngredientError");
    } catch (const IngredientError& e) {
        CHECK(e.report().has(ViolationCode::WrongClassCount));
    }
    std::ofstream(dir / "junk.json") << "{";
    CHECK_THROWS_AS(import_ingredient(dir / "junk.json", DesignSpec::rgdd({{4, 4}})), IngredientError);
    fs::remove_all(dir);
}

TEST_CASE("store layout and round trip")
{
    auto dir = fresh_dir("store");
    IngredientStore store(dir);
    auto spec = DesignSpec::rgdd({{4, 4}});
    CHECK(store.path_for(spec) == dir / "rgdd" / "4^4.json");
    CHECK(store.path_for(DesignSpec::urgdd({{12, 3}}, {0, 16})) == dir / "urgdd" / "12^3_0,16.json");
    CHECK_FALSE(store.load(spec));
    CHECK(store.save(spec, rtd_prime_power(4)));
    auto back = store.load(spec);
    REQUIRE(back);
    CHECK(*back == rtd_prime_power(4));
    fs::remove_all(dir);
}

TEST_CASE("obtain tries each channel and explains failures")
{
    auto dir = fresh_dir("obtain");
    ObtainOptions opts;
    opts.store = IngredientStore(dir);
    opts.search_budget = 0;

    SUBCASE("field")
    {
        CHECK(verify(obtain({DesignSpec::rgdd({{5, 4}})}, opts), DesignSpec::rgdd({{5, 4}})).pass);
    }
    SUBCASE("open frames are reported as such")
    {
        try {
            obtain({DesignSpec::frame({{6, 7}})}, opts);
            FAIL("expected Unavailable");
        } catch (const Unavailable& e) {
            CHECK(std::string(e.what()).find("open in the literature") != std::string::npos);
        }
    }
    SUBCASE("one reason per channel")
    {
        try {
            obtain({DesignSpec::rgdd({{2, 22}})}, opts);
            FAIL("expected Unavailable");
        } catch (const Unavailable& e) {
            CHECK(e.reasons().size() == 3);
        }
    }
    SUBCASE("search results are saved")
    {
        opts.search_budget = 30;
        auto spec = DesignSpec::rgdd({{3, 8}});
        Design d = obtain({spec}, opts);
        CHECK(verify(d, spec).pass);
        CHECK(fs::exists(IngredientStore(dir).path_for(spec)));
        opts.search_budget = 0;
        CHECK(obtain({spec, {Channel::Store}}, opts) == d);
    }
    SUBCASE("a corrupt store file is not trusted")
    {
        auto spec = DesignSpec::rgdd({{4, 4}});
        Design broken = rtd_prime_power(4);
        broken.classes.pop_back();
        fs::create_directories(dir / "rgdd");
        write_design(IngredientStore(dir).path_for(spec), broken);
        CHECK_THROWS_AS(obtain({spec, {Channel::Store}}, opts), Unavailable);
    }
    fs::remove_all(dir);
}

TEST_CASE("fuzzed requests: whatever obtain returns verifies")
{
    const std::vector<DesignSpec> pool{
        DesignSpec::urd(8, {1, 4}),          DesignSpec::urd(8, {0, 4}),    DesignSpec::urd(12, {5, 4}),
        DesignSpec::urd(12, {8, 2}),         DesignSpec::urgdd({{2, 4}}, {0, 4}),
        DesignSpec::urgdd({{4, 4}}, {0, 8}), DesignSpec::rgdd({{3, 4}}),   DesignSpec::rgdd({{4, 4}}),
        DesignSpec::rgdd({{7, 4}}),          DesignSpec::frame({{6, 5}}),   DesignSpec::frame({{6, 7}}),
        DesignSpec::urd(4, {3, 0}),          DesignSpec::iurd(16, 4, {3, 0}, {0, 8}),
    };
    std::mt19937 rng(5);
    ObtainOptions opts;
    opts.search_budget = 2;
    for (int i = 0; i < 30; ++i) {
        const auto& spec = pool[rng() % pool.size()];
        opts.seed = rng();
        CAPTURE(to_string(spec));
        std::optional<Design> got;
        try {
            got = obtain({spec, {Channel::Field, Channel::Search}}, opts);
        } catch (const Unavailable&) {
            continue;
        }
        CHECK(verify(*got, spec).pass);
    }
}
