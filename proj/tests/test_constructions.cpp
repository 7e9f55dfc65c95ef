#include "oracles.hpp"
#include "urd/admissibility.hpp"
#include "urd/catalog.hpp"
#include "urd/constructions.hpp"
#include "urd/error.hpp"
#include "urd/search.hpp"
#include "urd/serialize.hpp"
#include "urd/verifier.hpp"

#include <doctest.h>

using namespace urd;

namespace {

Design searched(const DesignSpec& spec)
{
    SearchProblem p;
    p.spec = spec;
    p.development = group_rotation(spec);
    p.time_budget = 60;
    auto out = search(p);
    REQUIRE(out.design);
    return *out.design;
}

ConstructOptions no_search()
{
    ConstructOptions o;
    o.search_budget = 0;
    o.store = IngredientStore("/nonexistent-urd-store");
    return o;
}

} // namespace

TEST_CASE("round-robin 1-factorizations")
{
    for (int v : {2, 4, 6, 8, 10}) {
        CAPTURE(v);
        Design d = one_factorization(v);
        CHECK(static_cast<int>(d.classes.size()) == v - 1);
        CHECK(oracle::is_urd(d, v - 1, 0));
    }
    CHECK_THROWS_AS(one_factorization(5), ConstructionError);
    CHECK_THROWS_AS(one_factorization(0), ConstructionError);
}

TEST_CASE("filling groups")
{
    auto r = fill_groups(lookup("d4_urgdd_8x3").design, base_design(8).design);
    CHECK(r.profile == Profile{5, 12});
    CHECK(oracle::is_urd(r.design, 5, 12));

    auto eight = fill_groups(lookup("d1_urgdd_2x4").design, one_factorization(2));
    CHECK(eight.profile == Profile{1, 4});

    CHECK_THROWS_AS(fill_groups(lookup("d4_urgdd_8x3").design, one_factorization(4)), ConstructionError);

    // One group holding every point: the result is the filler itself.
    Design whole;
    whole.kind = DesignKind::URGDD;
    whole.v = 6;
    whole.groups = {{0, 1, 2, 3, 4, 5}};
    auto trivial = fill_groups(whole, one_factorization(6));
    CHECK(trivial.design == normalize(one_factorization(6)));
}

TEST_CASE("filling holes")
{
    Design iurd16 = iurd_16_4();
    CHECK(verify(iurd16, DesignSpec::iurd(16, 4, {3, 0}, {0, 8})).pass);
    CHECK(fill_hole(iurd16, one_factorization(4)).profile == Profile{3, 8});
    CHECK(fill_hole(lookup("d9_iurd28").design, one_factorization(4)).profile == Profile{3, 16});
    CHECK(fill_hole(lookup("d11_iurd20").design, base_design(8).design).profile == Profile{1, 12});
    // URD(8;7,0) has the right size but the wrong profile for this hole.
    CHECK_THROWS_AS(fill_hole(lookup("d11_iurd20").design, one_factorization(8)), ConstructionError);
    CHECK_THROWS_AS(fill_hole(iurd16, one_factorization(6)), ConstructionError);
}

TEST_CASE("inflating 4-RGDDs")
{
    auto star = catalog_urgdd_supplier(2);
    SUBCASE("RTD of order 4 with weight 2")
    {
        auto r = inflate_rgdd(rtd_prime_power(4), 2, {{0, 4}}, star, base_design(8).design);
        CHECK(r.design.v == 32);
        CHECK(r.profile == Profile{1, 20});
        // Filler profile plus one ingredient profile per RGDD class.
        CHECK(profile_sum({{1, 4}}, profile_scale(4, {{0, 4}})).count(r.profile));
        CHECK(j_set(32).count(r.profile));
    }
    SUBCASE("4-RGDD of type 3^8")
    {
        auto r = inflate_rgdd(searched(DesignSpec::rgdd({{3, 8}})), 2, {{0, 4}}, star, one_factorization(6));
        CHECK(r.profile == Profile{5, 28});
        CHECK(profile_sum({{5, 0}}, profile_scale(7, {{0, 4}})).count(r.profile));
        CHECK(oracle::is_urd(r.design, 5, 28));
    }
    SUBCASE("missing ingredients")
    {
        CHECK_THROWS_AS(inflate_rgdd(rtd_prime_power(4), 1, {{0, 4}}, catalog_urgdd_supplier(1),
                                     base_design(4).design),
                        Unavailable);
        CHECK_THROWS_AS(inflate_rgdd(rtd_prime_power(4), 2, {{3, 0}}, star, base_design(8).design), Unavailable);
    }
    SUBCASE("schedule length must match")
    {
        CHECK_THROWS_AS(inflate_rgdd(rtd_prime_power(4), 2, {{0, 4}, {0, 4}}, star, base_design(8).design),
                        ConstructionError);
    }
}

TEST_CASE("filling 4-frames")
{
    Design frame = searched(DesignSpec::frame({{6, 5}}));
    const Design& d1 = lookup("d1_urgdd_2x4").design;

    auto a = frame_fill(frame, 2, d1, iurd_16_4(), one_factorization(4));
    CHECK(a.design.v == 64);
    CHECK(a.profile == Profile{3, 40});
    // Hole profile plus u copies of the (g/3)-fold ingredient profile.
    CHECK(profile_sum({{3, 0}}, profile_scale(5, profile_scale(2, {{0, 4}}))).count(a.profile));

    auto b = frame_fill(frame, 2, d1, lookup("d11_iurd20").design, base_design(8).design);
    CHECK(b.design.v == 68);
    CHECK(b.profile == Profile{1, 44});
    CHECK(oracle::is_urd(b.design, 1, 44));

    SUBCASE("a frame missing a partial class")
    {
        Design bad = frame;
        bad.classes.pop_back();
        try {
            frame_fill(bad, 2, d1, iurd_16_4(), one_factorization(4));
            FAIL("expected IngredientError");
        } catch (const IngredientError& e) {
            CHECK(e.report().has(ViolationCode::FrameAccountingError));
        }
    }
    SUBCASE("IURD of the wrong size")
    {
        CHECK_THROWS_AS(frame_fill(frame, 2, d1, lookup("d9_iurd28").design, one_factorization(4)),
                        ConstructionError);
    }
}

TEST_CASE("every admissible order up to 36 is built or explained")
{
    for (int v = 1; v <= 36; ++v) {
        CAPTURE(v);
        auto out = construct_min(v, no_search());
        if (v % 4 != 0) {
            CHECK(out.status == ConstructionStatus::Nonexistent);
            continue;
        }
        if (v == 36) {
            // Needs an imported URGDD of type 12^3.
            CHECK(out.status == ConstructionStatus::Unavailable);
            continue;
        }
        REQUIRE(out.status == ConstructionStatus::Built);
        const auto& r = *out.result;
        CHECK(r.profile == min_r(v));
        CHECK(oracle::is_urd(r.design, r.profile.r, r.profile.s));
        CHECK_FALSE(r.trace.empty());
    }
}

TEST_CASE("exceptional orders")
{
    for (int v : exception_orders()) {
        CAPTURE(v);
        CHECK(construct_min(v).status == ConstructionStatus::Unknown);
    }
    for (int v : {6, 10, 14, 18, 0, -4})
        CHECK(construct_min(v).status == ConstructionStatus::Nonexistent);
}

TEST_CASE("construction is deterministic")
{
    for (int v : {16, 24, 32}) {
        auto a = construct_min(v, no_search());
        auto b = construct_min(v, no_search());
        REQUIRE(a.result);
        CHECK(encode(a.result->design) == encode(b.result->design));
    }
}

TEST_CASE("orders needing a large ingredient report what is missing")
{
    auto out = construct_min(88, no_search());
    CHECK(out.status == ConstructionStatus::Unavailable);
    CHECK(out.reason.find("rgdd") != std::string::npos);
}
