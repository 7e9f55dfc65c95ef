#include "oracles.hpp"
#include "urd/catalog.hpp"
#include "urd/constructions.hpp"
#include "urd/error.hpp"
#include "urd/verifier.hpp"

#include <doctest.h>

using namespace urd;

namespace {

int edges_covered(const Design& d)
{
    int n = 0;
    for (const auto& c : d.classes)
        for (const auto& b : c.blocks)
            n += static_cast<int>(oracle::pairs_of(b).size());
    return n;
}

} // namespace

TEST_CASE("required edge counts")
{
    using oracle::choose2;
    CHECK(required_edges(DesignSpec::urgdd({{2, 4}}, {0, 4})).size() == choose2(8) - 4 * choose2(2));
    CHECK(required_edges(DesignSpec::urgdd({{8, 3}}, {4, 8})).size() == choose2(24) - 3 * choose2(8));
    CHECK(required_edges(DesignSpec::iurd(20, 8, {1, 4}, {0, 8})).size() == choose2(20) - choose2(8));
    CHECK(required_edges(DesignSpec::urd(12, {5, 4})).size() == choose2(12));
}

TEST_CASE("catalog edge accounting matches the definitions")
{
    CHECK(edges_covered(lookup("d1_urgdd_2x4").design) == 24);
    CHECK(edges_covered(lookup("d4_urgdd_8x3").design) == 192);
    CHECK(edges_covered(lookup("d11_iurd20").design) == 162);
    auto c = lookup("d11_iurd20").design.counts();
    CHECK(c.star == 8);
    CHECK(c.partial_star == 4);
    CHECK(c.partial_one_factor == 1);
}

TEST_CASE("verify agrees with the naive recount on small designs")
{
    for (int v : {4, 8}) {
        auto r = construct_min(v);
        REQUIRE(r.result);
        const Design& d = r.result->design;
        Profile p = r.result->profile;
        CHECK(oracle::is_urd(d, p.r, p.s));
        CHECK(verify(d, DesignSpec::urd(v, p)).pass);
        // Every single-edge perturbation is caught by both.
        for (size_t ci = 0; ci < d.classes.size(); ++ci) {
            Design m = d;
            auto& b = m.classes[ci].blocks[0];
            std::swap(b.pts[0], b.pts[1]);
            if (b.kind == BlockKind::Edge)
                continue; // same edge
            bool naive = oracle::is_urd(m, p.r, p.s);
            CHECK(naive == verify(m, DesignSpec::urd(v, p)).pass);
        }
    }
}

TEST_CASE("violation codes")
{
    Design d = lookup("d3_urd12").design;
    auto spec = DesignSpec::urd(12, {5, 4});

    SUBCASE("duplicate and missing edge")
    {
        Design m = d;
        // Move one edge of a 1-factor onto a different pair: the class stays a
        // partition only if we swap endpoints between two edges.
        auto& cls = m.classes[0];
        REQUIRE(cls.kind == ClassKind::OneFactor);
        std::swap(cls.blocks[0].pts[1], cls.blocks[1].pts[0]);
        auto rep = verify(m, spec);
        CHECK_FALSE(rep.pass);
        CHECK(rep.has(ViolationCode::DuplicateEdge));
        CHECK(rep.has(ViolationCode::MissingEdge));
    }
    SUBCASE("class not a partition")
    {
        Design m = d;
        m.classes[0].blocks.pop_back();
        auto rep = verify(m, spec);
        CHECK(rep.has(ViolationCode::ClassNotPartition));
    }
    SUBCASE("wrong class count")
    {
        auto rep = verify(d, DesignSpec::urd(12, {11, 0}));
        CHECK(rep.has(ViolationCode::WrongClassCount));
    }
    SUBCASE("non-uniform class")
    {
        Design m = d;
        int star = -1;
        for (size_t i = 0; i < m.classes.size(); ++i)
            if (m.classes[i].kind == ClassKind::StarClass)
                star = static_cast<int>(i);
        REQUIRE(star >= 0);
        m.classes[star].kind = ClassKind::OneFactor;
        CHECK(verify(m, spec).has(ViolationCode::ClassNotUniform));
    }
    SUBCASE("edge inside a group")
    {
        Design m = lookup("d1_urgdd_2x4").design;
        auto rep = verify(m, DesignSpec::urgdd({{4, 2}}, {0, 4}));
        CHECK_FALSE(rep.pass);
    }
    SUBCASE("hole edge")
    {
        Design m = lookup("d11_iurd20").design;
        m.classes.push_back({ClassKind::PartialOneFactor, Missing::hole(), {}});
        auto rep = verify(m, DesignSpec::iurd(20, 8, {2, 4}, {0, 8}));
        CHECK_FALSE(rep.pass);
    }
}

TEST_CASE("frame accounting")
{
    Design f = rtd_prime_power(4);
    // A 4-RGDD is not a frame: no class misses a group.
    auto rep = verify(f, DesignSpec::frame({{4, 4}}));
    CHECK_FALSE(rep.pass);
}

TEST_CASE("verify is invariant under relabeling")
{
    std::mt19937_64 rng(11);
    for (const auto& key : catalog_keys()) {
        CAPTURE(key);
        const auto& e = lookup(key);
        for (int i = 0; i < 20; ++i) {
            auto perm = oracle::random_permutation(e.design.v, rng);
            CHECK(verify(relabel(e.design, perm), e.spec).pass);
        }
    }
}

TEST_CASE("star balance")
{
    auto r = construct_min(24);
    REQUIRE(r.result);
    for (auto [a, b] : star_balance(r.result->design)) {
        CHECK(b == 3 * a);
        CHECK(a + b == 12);
    }
    CHECK_THROWS_AS(star_balance(lookup("d1_urgdd_2x4").design), PreconditionError);
}
