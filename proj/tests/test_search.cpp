#include "oracles.hpp"
#include "urd/error.hpp"
#include "urd/search.hpp"
#include "urd/verifier.hpp"

#include <doctest.h>

#include <functional>

using namespace urd;

namespace {

// Brute-force count of decompositions of a graph into classes, written
// independently of the search: enumerate every candidate class, then count
// sets of classes (r one-factors, s star classes) partitioning the edges.
struct Brute {
    int v;
    std::vector<int> group_of;
    std::vector<std::uint64_t> one_factors, star_classes;

    int bit(int a, int b) const
    {
        if (a > b)
            std::swap(a, b);
        return a * v + b;
    }
    bool allowed(int a, int b) const { return group_of[a] < 0 || group_of[a] != group_of[b]; }

    void matchings(std::uint32_t free, std::uint64_t edges)
    {
        if (!free) {
            one_factors.push_back(edges);
            return;
        }
        int a = __builtin_ctz(free);
        for (int b = a + 1; b < v; ++b)
            if ((free >> b & 1) && allowed(a, b))
                matchings(free & ~(1u << a) & ~(1u << b), edges | 1ull << bit(a, b));
    }
    void star_sets(std::uint32_t free, std::uint64_t edges)
    {
        if (!free) {
            star_classes.push_back(edges);
            return;
        }
        int low = __builtin_ctz(free);
        // The lowest free point is either a center or one of three leaves.
        for (int c = 0; c < v; ++c) {
            if (!(free >> c & 1))
                continue;
            std::vector<int> leaves;
            for (int x = 0; x < v; ++x)
                if (x != c && (free >> x & 1) && allowed(c, x))
                    leaves.push_back(x);
            int n = static_cast<int>(leaves.size());
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k) {
                        int l1 = leaves[i], l2 = leaves[j], l3 = leaves[k];
                        if (c != low && l1 != low && l2 != low && l3 != low)
                            continue;
                        std::uint32_t used = 1u << c | 1u << l1 | 1u << l2 | 1u << l3;
                        star_sets(free & ~used,
                                  edges | 1ull << bit(c, l1) | 1ull << bit(c, l2) | 1ull << bit(c, l3));
                    }
        }
    }

    std::uint64_t count(int r, int s, std::uint64_t all)
    {
        std::uint64_t total = 0;
        std::function<void(int, int, size_t, std::uint64_t)> rec = [&](int rr, int ss, size_t from,
                                                                         std::uint64_t covered) {
            if (rr == 0 && ss == 0) {
                total += covered == all;
                return;
            }
            const auto& pool = rr > 0 ? one_factors : star_classes;
            for (size_t i = from; i < pool.size(); ++i) {
                if (pool[i] & covered)
                    continue;
                if (rr > 0)
                    rec(rr - 1, ss, rr - 1 > 0 ? i + 1 : 0, covered | pool[i]);
                else
                    rec(0, ss - 1, i + 1, covered | pool[i]);
            }
        };
        rec(r, s, 0, 0);
        return total;
    }
};

std::uint64_t brute_count(int v, const std::vector<int>& group_of, int r, int s)
{
    Brute b{v, group_of, {}, {}};
    std::uint32_t all_points = (1u << v) - 1;
    b.matchings(all_points, 0);
    b.star_sets(all_points, 0);
    std::sort(b.star_classes.begin(), b.star_classes.end());
    b.star_classes.erase(std::unique(b.star_classes.begin(), b.star_classes.end()), b.star_classes.end());
    std::uint64_t all = 0;
    for (int a = 0; a < v; ++a)
        for (int c = a + 1; c < v; ++c)
            if (b.allowed(a, c))
                all |= 1ull << b.bit(a, c);
    return b.count(r, s, all);
}

} // namespace

TEST_CASE("finds small designs and they verify")
{
    for (const char* text : {"urd:8:1,4", "urgdd:2^4:0,4", "urd:12:5,4", "urd:6:5,0"}) {
        CAPTURE(text);
        SearchProblem p;
        p.spec = parse_spec(text);
        p.seed = 3;
        p.time_budget = 30;
        auto out = search(p);
        REQUIRE(out.status == SearchOutcome::Status::Found);
        CHECK(verify(*out.design, p.spec).pass);
    }
}

TEST_CASE("proves nonexistence at tiny orders")
{
    SearchProblem p;
    p.spec = DesignSpec::urd(4, {0, 2});
    p.mode = SearchMode::ProveNone;
    CHECK(search(p).status == SearchOutcome::Status::NoneExists);
    p.spec = DesignSpec::urd(8, {0, 4}); // fails parity: a pure star design
    CHECK(search(p).status == SearchOutcome::Status::NoneExists);
    p.spec = DesignSpec::rgdd({{3, 4}});
    p.time_budget = 30;
    CHECK(search(p).status == SearchOutcome::Status::NoneExists);
}

TEST_CASE("count_all agrees with brute force")
{
    SearchProblem p;
    p.mode = SearchMode::CountAll;
    p.symmetry_breaking = false;
    p.time_budget = 60;

    p.spec = DesignSpec::urgdd({{2, 4}}, {0, 4});
    auto a = search(p);
    CHECK(a.count == brute_count(8, {0, 0, 1, 1, 2, 2, 3, 3}, 0, 4));

    p.spec = DesignSpec::urd(8, {1, 4});
    auto b = search(p);
    CHECK(b.count == brute_count(8, std::vector<int>(8, -1), 1, 4));

    p.spec = DesignSpec::urd(16, {3, 8});
    CHECK_THROWS_AS(search(p), PreconditionError);
}

TEST_CASE("same seed, same design")
{
    SearchProblem p;
    p.spec = DesignSpec::urd(12, {5, 4});
    p.seed = 42;
    auto a = search(p);
    auto b = search(p);
    REQUIRE(a.design);
    CHECK(*a.design == *b.design);
}

TEST_CASE("developed search for ingredients")
{
    SearchProblem p;
    p.spec = DesignSpec::frame({{6, 5}});
    p.development = group_rotation(p.spec);
    REQUIRE(p.development);
    p.time_budget = 60;
    auto out = search(p);
    REQUIRE(out.status == SearchOutcome::Status::Found);
    CHECK(verify(*out.design, p.spec).pass);
    CHECK_FALSE(group_rotation(DesignSpec::urd(8, {1, 4})));
}

TEST_CASE("budget exhaustion is a timeout, not a verdict")
{
    SearchProblem p;
    p.spec = DesignSpec::rgdd({{3, 8}});
    p.time_budget = 0.05;
    auto out = search(p);
    CHECK(out.status != SearchOutcome::Status::NoneExists);
}

TEST_CASE("cross-check against the necessary conditions")
{
    auto report = oracle_cross_check(8, 20);
    CHECK(report.contradictions == 0);
    CHECK_FALSE(report.cases.empty());
}
