#ifndef URD_SEARCH_HPP
#define URD_SEARCH_HPP

#include "urd/admissibility.hpp"
#include "urd/design.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace urd {

enum class SearchMode { FirstSolution, ProveNone, CountAll };

std::string to_string(SearchMode m);
SearchMode parse_search_mode(const std::string& text);

// A point permutation of finite order under which the sought design is
// invariant. Only base classes are searched; each is developed into
// `order` classes by repeated application of `image`.
struct CyclicDevelopment {
    std::vector<Point> image;
    int order = 1;
};

struct SearchProblem {
    DesignSpec spec;
    bool symmetry_breaking = true;
    std::uint64_t seed = 0;
    double time_budget = 60.0; // seconds
    SearchMode mode = SearchMode::FirstSolution;
    std::optional<CyclicDevelopment> development;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t restarts = 0;
    double seconds = 0.0;
};

struct SearchOutcome {
    enum class Status { Found, NoneExists, Timeout };
    Status status = Status::Timeout;
    std::optional<Design> design; // first solution found
    std::uint64_t count = 0;      // solutions counted (CountAll)
    SearchStats stats;
    std::string note;
};

std::string to_string(SearchOutcome::Status s);

// Edge-count and divisibility consistency of a target; `why` receives the
// reason when false.
bool arithmetically_feasible(const DesignSpec& spec, std::string* why = nullptr);

// Group rotation suited to a developed search on the canonical layout:
// frames g^u (u odd) rotate all groups; 4-RGDDs g^u (u-1 odd, 3 | g)
// rotate the first u-1 groups and fix the last. nullopt otherwise.
std::optional<CyclicDevelopment> group_rotation(const DesignSpec& spec);

// Class-by-class exact-cover backtracking. Designs it returns have been
// verified. CountAll requires v <= 12 (PreconditionError otherwise) and
// counts distinct labeled designs (as sets of classes).
SearchOutcome search(const SearchProblem& problem);

struct CrossCheckCase {
    int v = 0;
    Profile profile;
    AdmissibilityVerdict verdict;
    SearchOutcome::Status status = SearchOutcome::Status::Timeout;
    bool contradiction = false;
};

struct CrossCheckReport {
    std::vector<CrossCheckCase> cases;
    int contradictions = 0;
    int undecided = 0;
};

// For every 4 <= v <= v_max and every (r,s) with 2r+3s = 2(v-1) (plus the
// pure-star profiles (0,s)), decides existence by search and compares with
// the necessary conditions. A design found for a profile the conditions
// reject throws OracleError. v_max <= 12.
CrossCheckReport oracle_cross_check(int v_max, double budget_per_case = 20.0);

} // namespace urd

#endif // URD_SEARCH_HPP
