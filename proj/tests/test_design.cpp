#include "oracles.hpp"
#include "urd/catalog.hpp"
#include "urd/error.hpp"
#include "urd/serialize.hpp"

#include <doctest.h>

using namespace urd;

TEST_CASE("spec strings round-trip")
{
    for (const char* text : {"urd:8:1,4", "urgdd:2^4:0,4", "iurd:20,8:1,4:0,8", "rgdd:3^8", "frame:6^5",
                             "urgdd:12^3:0,16"}) {
        CAPTURE(text);
        CHECK(to_string(parse_spec(text)) == text);
    }
    CHECK_THROWS_AS(parse_spec("urd:8"), SpecError);
    CHECK_THROWS_AS(parse_spec("tree:8:1,4"), SpecError);
}

TEST_CASE("group types")
{
    auto t = parse_group_type("2^4");
    CHECK(t == GroupType{{2, 4}});
    CHECK(total_points(t) == 8);
    CHECK(to_string(t) == "2^4");
    auto groups = canonical_groups({{3, 2}, {1, 1}});
    CHECK(groups == std::vector<std::vector<Point>>{{0, 1, 2}, {3, 4, 5}, {6}});
}

TEST_CASE("inconsistent specs are rejected")
{
    CHECK_THROWS_AS(DesignSpec::iurd(8, 8, {1, 0}, {0, 0}).check_consistent(), SpecError);
    CHECK_NOTHROW(DesignSpec::urd(8, {1, 4}).check_consistent());
}

TEST_CASE("normalize is idempotent and rejects repeated points")
{
    Design d = lookup("d3_urd12").design;
    CHECK(normalize(d) == d);
    Design bad;
    bad.v = 4;
    bad.classes.push_back({ClassKind::OneFactor, Missing::none(), {Block::edge(0, 0), Block::edge(1, 2)}});
    CHECK_THROWS_AS(normalize(bad), StructureError);
}

TEST_CASE("block factories")
{
    auto s = Block::star(5, 3, 1, 2);
    CHECK(s.center() == 5);
    CHECK(s.edges().size() == 3);
    CHECK(Block::quad(0, 1, 2, 3).edges().size() == 6);
    CHECK(Block::edge(4, 1).size() == 2);
}

TEST_CASE("serialization round-trips every catalog design")
{
    for (const auto& key : catalog_keys()) {
        CAPTURE(key);
        const Design& d = lookup(key).design;
        auto text = encode(d);
        CHECK(decode(text) == d);
        CHECK(encode(decode(text)) == text);
    }
}

TEST_CASE("decode reports where a file is malformed")
{
    CHECK_THROWS_AS(decode("not json"), DecodeError);
    CHECK_THROWS_AS(decode(R"({"schema":1,"kind":"urd","v":4,"classes":[{"kind":"star","missing":null,"blocks":[[0,1]]}]})"),
                    DecodeError);
    try {
        decode(R"({"schema":1,"kind":"urd","v":4,"classes":[{"kind":"one_factor","missing":null,"blocks":[[0,1],[2,2]]}]})");
        FAIL("expected DecodeError");
    } catch (const DecodeError& e) {
        CHECK(std::string(e.what()).find("classes[0].blocks[1]") != std::string::npos);
    }
    // A partial kind needs a missing tag and a full kind must not have one.
    CHECK_THROWS_AS(decode(R"({"schema":1,"kind":"iurd","v":4,"hole":[0,1],"classes":[{"kind":"partial_one_factor","missing":null,"blocks":[[2,3]]}]})"),
                    DecodeError);
}

TEST_CASE("relabel moves groups, hole and blocks together")
{
    const Design& d = lookup("d11_iurd20").design;
    std::mt19937_64 rng(7);
    auto perm = oracle::random_permutation(d.v, rng);
    Design r = relabel(d, perm);
    CHECK(r.hole.size() == d.hole.size());
    for (Point p : d.hole)
        CHECK(std::find(r.hole.begin(), r.hole.end(), perm[p]) != r.hole.end());
    CHECK(r.counts() == d.counts());
}

TEST_CASE("spec_of reads what a design claims")
{
    CHECK(to_string(spec_of(lookup("d11_iurd20").design)) == "iurd:20,8:1,4:0,8");
    CHECK(to_string(spec_of(lookup("d4_urgdd_8x3").design)) == "urgdd:8^3:4,8");
}
