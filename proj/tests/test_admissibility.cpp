#include "urd/admissibility.hpp"
#include "urd/error.hpp"

#include <doctest.h>

using namespace urd;

namespace {

// Profiles allowed by counting alone: every edge once (2r + 3s = 2(v-1)),
// degree parity at each point (r + s odd: a star class contributes an odd
// degree, a 1-factor degree 1), and no pure-star decomposition.
ProfileSet counted_profiles(int v)
{
    ProfileSet out;
    for (int s = 0; 3 * s <= 2 * (v - 1); ++s) {
        int twice_r = 2 * (v - 1) - 3 * s;
        if (twice_r % 2)
            continue;
        int r = twice_r / 2;
        if ((r + s) % 2 == 1 && r >= 1)
            out.insert({r, s});
    }
    return out;
}

} // namespace

TEST_CASE("J(v) agrees with the counting argument")
{
    for (int v = 4; v <= 400; v += 4) {
        CAPTURE(v);
        CHECK(j_set(v) == counted_profiles(v));
    }
}

TEST_CASE("instances of J(v)")
{
    CHECK(to_string(j_set(12)) == "(11,0) (5,4)");
    CHECK(to_string(j_set(8)) == "(7,0) (1,4)");
    CHECK(to_string(j_set(4)) == "(3,0)");
    CHECK_THROWS_AS(j_set(10), DivisibilityError);
}

TEST_CASE("minimum r by residue")
{
    CHECK(min_r(4) == Profile{3, 0});
    CHECK(min_r(8) == Profile{1, 4});
    CHECK(min_r(12) == Profile{5, 4});
    CHECK(min_r(16) == Profile{3, 8});
    CHECK(min_r(24) == Profile{5, 12});
    CHECK(min_r(64) == Profile{3, 40});
    CHECK_THROWS_AS(min_r(18), DivisibilityError);
}

TEST_CASE("validate_profile verdicts")
{
    using S = AdmissibilityVerdict::Status;
    CHECK(validate_profile(12, 5, 4).status == S::Admissible);
    CHECK(validate_profile(12, 11, 0).status == S::Admissible);
    CHECK(validate_profile(8, 0, 4).status == S::NonexistentPureStar);
    CHECK(validate_profile(10, 3, 4).status == S::NonexistentDivisibility);
    CHECK(validate_profile(12, 8, 2).status == S::NonexistentDivisibility);
    CHECK(validate_profile(8, -1, 4).status == S::NonexistentDivisibility);
    CHECK(validate_profile(16, 1, 8).status == S::NonexistentDivisibility);
    // Odd v has no 1-factor at all.
    CHECK(validate_profile(7, 6, 0).status == S::NonexistentDivisibility);
    CHECK(validate_profile(6, 5, 0).status == S::Admissible);
}

TEST_CASE("profile arithmetic")
{
    ProfileSet a{{1, 0}, {0, 4}};
    ProfileSet b{{3, 0}};
    CHECK(profile_sum(a, b) == ProfileSet{{4, 0}, {3, 4}});
    CHECK(profile_scale(2, a) == ProfileSet{{2, 0}, {1, 4}, {0, 8}});
    CHECK_THROWS_AS(profile_scale(0, a), PreconditionError);
}
