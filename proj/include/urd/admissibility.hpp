#ifndef URD_ADMISSIBILITY_HPP
#define URD_ADMISSIBILITY_HPP

#include "urd/design.hpp"

#include <set>
#include <string>

namespace urd {

using ProfileSet = std::set<Profile>;

std::string to_string(const ProfileSet& x);

// 2r + 3s = 2(v-1): every edge of K_v covered exactly once.
bool edge_equation_holds(int v, int r, int s);

// All (r,s) = (v-1-6x, 4x) allowed by the necessary conditions.
// Throws DivisibilityError unless v = 0 (mod 4).
ProfileSet j_set(int v);

// Minimum r with s > 0 (5/3/1 for v = 0/4/8 mod 12); (3,0) at v = 4.
Profile min_r(int v);

struct AdmissibilityVerdict {
    enum class Status { Admissible, NonexistentDivisibility, NonexistentPureStar, NotInJ };
    Status status = Status::Admissible;
    std::string witness;

    bool admissible() const { return status == Status::Admissible; }
};

std::string to_string(AdmissibilityVerdict::Status s);

// Total: never throws.
AdmissibilityVerdict validate_profile(int v, int r, int s);

ProfileSet profile_sum(const ProfileSet& x, const ProfileSet& y);
// All sums of h elements of x, repetition allowed. h >= 1.
ProfileSet profile_scale(int h, const ProfileSet& x);

} // namespace urd

#endif // URD_ADMISSIBILITY_HPP
