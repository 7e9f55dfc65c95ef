#ifndef URD_VERIFIER_HPP
#define URD_VERIFIER_HPP

#include "urd/design.hpp"

#include <string>
#include <utility>
#include <vector>

namespace urd {

enum class ViolationCode {
    DuplicateEdge,
    MissingEdge,
    ExtraEdge,
    ClassNotPartition,
    ClassNotUniform,
    WrongClassCount,
    FrameAccountingError,
    HoleEdgeCovered,
    SpecMismatch,
};

std::string to_string(ViolationCode c);

struct Violation {
    ViolationCode code;
    std::string detail;

    auto operator<=>(const Violation&) const = default;
};

struct VerificationReport {
    bool pass = false;
    ClassCounts profile_found;
    std::vector<Violation> violations;

    bool has(ViolationCode c) const;
    std::string summary() const;
};

using EdgeList = std::vector<std::pair<Point, Point>>;

// Edges a design of this spec must cover, on the canonical layout
// (consecutive groups, hole last). Throws SpecError on an inconsistent spec.
EdgeList required_edges(const DesignSpec& spec);
// Same, on an explicit group partition / hole.
EdgeList required_edges(const DesignSpec& spec, const std::vector<std::vector<Point>>& groups,
                        const std::vector<Point>& hole);

// Checks edge coverage, resolvability, uniformity, class counts and
// frame/hole accounting. Never throws; every violation is listed, sorted.
VerificationReport verify(const Design& design, const DesignSpec& spec);

// Per point, over the star classes of a full URD: (times a center, times a
// leaf). Throws PreconditionError unless the design verifies as a URD.
std::vector<std::pair<int, int>> star_balance(const Design& design);

} // namespace urd

#endif // URD_VERIFIER_HPP
