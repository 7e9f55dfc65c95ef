#ifndef URD_CONSTRUCTIONS_HPP
#define URD_CONSTRUCTIONS_HPP

#include "urd/design.hpp"
#include "urd/ingredients.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace urd {

struct TraceStep {
    std::string step;
    std::string citation;
    std::vector<std::string> ingredients; // spec strings
};

struct ConstructionResult {
    Design design;
    Profile profile;
    std::vector<TraceStep> trace;
};

// Returns a verified URGDD of type t^4 with the given profile, or throws
// Unavailable.
using UrgddSupplier = std::function<Design(const Profile&)>;

// Supplies the all-star URGDD(0,4) of type 2^4 from the catalog; anything
// else is Unavailable.
UrgddSupplier catalog_urgdd_supplier(int t);

// Round-robin 1-factorization of K_v (v even, v >= 2).
Design one_factorization(int v);

// Weight-t inflation of a 4-RGDD of type g^u. Point (p,i) becomes p*t+i.
// Every block of class c carries a copy of the URGDD(schedule[c]) of type
// t^4 (ingredient group j on the j-th smallest block point); the k-th
// ingredient classes of one kind are unioned across the blocks of a class.
// A schedule of size 1 applies to every class. group_filler is a URD(g*t)
// placed on each expanded group.
ConstructionResult inflate_rgdd(const Design& rgdd, int t, const std::vector<Profile>& schedule,
                                const UrgddSupplier& supplier, const Design& group_filler);

// Weight-t filling of a 4-frame of type g^u with an h-point hole appended
// after the expanded points. iurd is an IURD(g*t+h, h) whose full classes
// complete the partial classes around each group (non-hole points onto the
// expanded group, hole points onto the hole, both in sorted order); its
// partial classes join the hole filler's classes.
ConstructionResult frame_fill(const Design& frame, int t, const Design& urgdd, const Design& iurd,
                              const Design& hole_filler);

// Places a copy of filler on every group of a URGDD.
ConstructionResult fill_groups(const Design& urgdd, const Design& filler);

// As fill_groups, but leaves group hole_group empty: the result is an IURD
// with that group as its hole and the filler classes as partial classes.
Design fill_groups_leaving_hole(const Design& urgdd, const Design& filler, int hole_group);

// Completes an IURD by placing hole_design on its hole.
ConstructionResult fill_hole(const Design& iurd, const Design& hole_design);

// Small URDs used as base cases and fillers, for v in
// {4, 8, 12, 16, 20, 24, 28}. Throws NotFound otherwise.
ConstructionResult base_design(int v);
// IURD(16,4;[3,0],[0,8]).
Design iurd_16_4();

const std::set<int>& exception_orders();

enum class ConstructionStatus { Built, Unknown, Nonexistent, Unavailable };
std::string to_string(ConstructionStatus s);

struct ConstructOptions {
    double search_budget = 60.0;
    std::uint64_t seed = 1;
    std::optional<IngredientStore> store;
};

struct ConstructionOutcome {
    ConstructionStatus status = ConstructionStatus::Unknown;
    std::optional<ConstructionResult> result;
    std::string reason;
};

// A URD(v; min_r(v)), routed by v mod 24. Never throws for bad v: the
// status says why nothing was built.
ConstructionOutcome construct_min(int v, const ConstructOptions& options = {});

} // namespace urd

#endif // URD_CONSTRUCTIONS_HPP
