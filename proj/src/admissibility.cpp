#include "urd/admissibility.hpp"

#include "urd/error.hpp"

namespace urd {

std::string to_string(const ProfileSet& x)
{
    std::string out;
    // Descending r reads like the usual (v-1,0), (v-7,4), ... listing.
    for (auto it = x.rbegin(); it != x.rend(); ++it) {
        if (!out.empty())
            out += ' ';
        out += to_string(*it);
    }
    return out;
}

bool edge_equation_holds(int v, int r, int s)
{
    return 2 * r + 3 * s == 2 * (v - 1);
}

ProfileSet j_set(int v)
{
    if (v < 4 || v % 4 != 0)
        throw DivisibilityError("v = " + std::to_string(v) + " is not 0 mod 4");
    int x_max = 0;
    switch (v % 12) {
    case 0: x_max = (v - 6) / 6; break;
    case 4: x_max = (v - 4) / 6; break;
    case 8: x_max = (v - 2) / 6; break;
    }
    ProfileSet out;
    for (int x = 0; x <= x_max; ++x)
        out.insert({v - 1 - 6 * x, 4 * x});
    return out;
}

Profile min_r(int v)
{
    if (v < 4 || v % 4 != 0)
        throw DivisibilityError("v = " + std::to_string(v) + " is not 0 mod 4");
    if (v == 4)
        return {3, 0};
    int r = v % 12 == 0 ? 5 : (v % 12 == 4 ? 3 : 1);
    return {r, 2 * (v - 1 - r) / 3};
}

std::string to_string(AdmissibilityVerdict::Status s)
{
    using S = AdmissibilityVerdict::Status;
    switch (s) {
    case S::Admissible: return "Admissible";
    case S::NonexistentDivisibility: return "NonexistentDivisibility";
    case S::NonexistentPureStar: return "NonexistentPureStar";
    case S::NotInJ: return "NotInJ";
    }
    return "?";
}

AdmissibilityVerdict validate_profile(int v, int r, int s)
{
    using S = AdmissibilityVerdict::Status;
    if (v < 2 || r < 0 || s < 0)
        return {S::NonexistentDivisibility, "need v >= 2 and r, s >= 0"};
    if (s == 0) {
        // Pure 1-factorizations: K_v has one iff v is even.
        if (v % 2 != 0)
            return {S::NonexistentDivisibility, "v odd: no 1-factor"};
        if (r != v - 1)
            return {S::NonexistentDivisibility, "2r+3s != 2(v-1)"};
        return {S::Admissible, ""};
    }
    if (v % 4 != 0)
        return {S::NonexistentDivisibility, "v not 0 mod 4"};
    if (r == 0)
        return {S::NonexistentPureStar, "r = 0 with s > 0"};
    if (s % 4 != 0)
        return {S::NonexistentDivisibility, "s not 0 mod 4"};
    if (!edge_equation_holds(v, r, s))
        return {S::NonexistentDivisibility, "2r+3s != 2(v-1)"};
    if (!j_set(v).contains({r, s}))
        return {S::NotInJ, "(r,s) not in J(v)"};
    return {S::Admissible, ""};
}

ProfileSet profile_sum(const ProfileSet& x, const ProfileSet& y)
{
    ProfileSet out;
    for (const auto& a : x)
        for (const auto& b : y)
            out.insert(a + b);
    return out;
}

ProfileSet profile_scale(int h, const ProfileSet& x)
{
    if (h < 1)
        throw PreconditionError("profile_scale needs h >= 1");
    ProfileSet acc = x;
    for (int i = 1; i < h; ++i)
        acc = profile_sum(acc, x);
    return acc;
}

} // namespace urd
