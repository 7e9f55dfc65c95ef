#include "urd/verifier.hpp"

#include "urd/error.hpp"

#include <algorithm>
#include <cstdint>

namespace urd {

std::string to_string(ViolationCode c)
{
    switch (c) {
    case ViolationCode::DuplicateEdge: return "DuplicateEdge";
    case ViolationCode::MissingEdge: return "MissingEdge";
    case ViolationCode::ExtraEdge: return "ExtraEdge";
    case ViolationCode::ClassNotPartition: return "ClassNotPartition";
    case ViolationCode::ClassNotUniform: return "ClassNotUniform";
    case ViolationCode::WrongClassCount: return "WrongClassCount";
    case ViolationCode::FrameAccountingError: return "FrameAccountingError";
    case ViolationCode::HoleEdgeCovered: return "HoleEdgeCovered";
    case ViolationCode::SpecMismatch: return "SpecMismatch";
    }
    return "?";
}

bool VerificationReport::has(ViolationCode c) const
{
    return std::any_of(violations.begin(), violations.end(),
                       [c](const Violation& v) { return v.code == c; });
}

std::string VerificationReport::summary() const
{
    std::string out = pass ? "PASS" : "FAIL";
    for (const auto& v : violations)
        out += "\n  " + to_string(v.code) + ": " + v.detail;
    return out;
}

namespace {

std::string edge_text(Point u, Point w)
{
    return "{" + std::to_string(u) + "," + std::to_string(w) + "}";
}

bool is_group_kind(DesignKind k)
{
    return k == DesignKind::URGDD || k == DesignKind::RGDD || k == DesignKind::Frame;
}

// Group index per point (-1 if none) and hole membership.
struct Layout {
    std::vector<int> group_of;
    std::vector<char> in_hole;
};

Layout make_layout(int v, const std::vector<std::vector<Point>>& groups,
                   const std::vector<Point>& hole)
{
    Layout l{std::vector<int>(v, -1), std::vector<char>(v, 0)};
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (Point p : groups[g])
            if (p >= 0 && p < v)
                l.group_of[p] = static_cast<int>(g);
    for (Point p : hole)
        if (p >= 0 && p < v)
            l.in_hole[p] = 1;
    return l;
}

bool pair_required(const Layout& l, Point u, Point w)
{
    if (l.group_of[u] >= 0 && l.group_of[u] == l.group_of[w])
        return false;
    return !(l.in_hole[u] && l.in_hole[w]);
}

} // namespace

EdgeList required_edges(const DesignSpec& spec, const std::vector<std::vector<Point>>& groups,
                        const std::vector<Point>& hole)
{
    spec.check_consistent();
    auto layout = make_layout(spec.v, groups, hole);
    EdgeList out;
    for (Point u = 0; u < spec.v; ++u)
        for (Point w = u + 1; w < spec.v; ++w)
            if (pair_required(layout, u, w))
                out.emplace_back(u, w);
    return out;
}

EdgeList required_edges(const DesignSpec& spec)
{
    spec.check_consistent();
    return required_edges(spec, canonical_groups(spec.group_type), canonical_hole(spec));
}

VerificationReport verify(const Design& design, const DesignSpec& spec)
{
    VerificationReport rep;
    rep.profile_found = design.counts();
    auto add = [&](ViolationCode c, std::string detail) {
        rep.violations.push_back({c, std::move(detail)});
    };
    auto finish = [&]() {
        std::sort(rep.violations.begin(), rep.violations.end());
        rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()),
                             rep.violations.end());
        rep.pass = rep.violations.empty();
        return rep;
    };

    try {
        spec.check_consistent();
    } catch (const SpecError& e) {
        add(ViolationCode::SpecMismatch, e.what());
        return finish();
    }
    const int v = design.v;
    if (v != spec.v) {
        add(ViolationCode::SpecMismatch,
            "design has " + std::to_string(v) + " points, spec " + std::to_string(spec.v));
        return finish();
    }
    if (design.kind != spec.kind)
        add(ViolationCode::SpecMismatch,
            "design kind " + to_string(design.kind) + ", spec " + to_string(spec.kind));

    // Groups must partition the point set and match the declared type.
    if (is_group_kind(spec.kind)) {
        std::vector<int> seen(v, 0);
        bool ok = true;
        for (const auto& g : design.groups)
            for (Point p : g) {
                if (p < 0 || p >= v || seen[p]++) {
                    ok = false;
                }
            }
        if (!ok || std::count(seen.begin(), seen.end(), 1) != v) {
            add(ViolationCode::SpecMismatch, "groups do not partition the point set");
            return finish();
        }
        if (group_type_of(design.groups) != spec.group_type)
            add(ViolationCode::SpecMismatch, "group type " + to_string(group_type_of(design.groups)) +
                                                 ", spec " + to_string(spec.group_type));
    } else if (!design.groups.empty()) {
        add(ViolationCode::SpecMismatch, to_string(spec.kind) + " must not declare groups");
    }
    if (spec.kind == DesignKind::IURD) {
        std::vector<Point> h = design.hole;
        std::sort(h.begin(), h.end());
        bool distinct = std::adjacent_find(h.begin(), h.end()) == h.end();
        if (!distinct || static_cast<int>(h.size()) != spec.hole_size) {
            add(ViolationCode::SpecMismatch, "hole has " + std::to_string(design.hole.size()) +
                                                 " points, spec " + std::to_string(spec.hole_size));
            return finish();
        }
    } else if (!design.hole.empty()) {
        add(ViolationCode::SpecMismatch, to_string(spec.kind) + " must not declare a hole");
    }

    const Layout layout = make_layout(v, design.groups, design.hole);

    // (a) edge coverage.
    std::vector<std::uint16_t> count(static_cast<std::size_t>(v) * v, 0);
    for (std::size_t c = 0; c < design.classes.size(); ++c) {
        for (const auto& b : design.classes[c].blocks) {
            bool in_range = true;
            for (Point p : b.points())
                in_range = in_range && p >= 0 && p < v;
            if (!in_range) {
                add(ViolationCode::ClassNotPartition,
                    "class " + std::to_string(c) + ": point out of range");
                continue;
            }
            for (auto [u, w] : b.edges()) {
                auto& n = count[static_cast<std::size_t>(u) * v + w];
                if (n < 0xffff)
                    ++n;
            }
        }
    }
    for (Point u = 0; u < v; ++u) {
        for (Point w = u + 1; w < v; ++w) {
            int n = count[static_cast<std::size_t>(u) * v + w];
            if (pair_required(layout, u, w)) {
                if (n == 0)
                    add(ViolationCode::MissingEdge, edge_text(u, w));
                else if (n > 1)
                    add(ViolationCode::DuplicateEdge,
                        edge_text(u, w) + " covered " + std::to_string(n) + " times");
            } else if (n > 0) {
                if (layout.in_hole[u] && layout.in_hole[w])
                    add(ViolationCode::HoleEdgeCovered, edge_text(u, w));
                else
                    add(ViolationCode::ExtraEdge, edge_text(u, w) + " lies inside a group");
            }
        }
    }

    // (b), (c), (e), (f): per-class structure.
    std::vector<int> missing_count(design.groups.size(), 0);
    for (std::size_t c = 0; c < design.classes.size(); ++c) {
        const auto& cls = design.classes[c];
        const std::string where = "class " + std::to_string(c);

        bool allowed = false;
        switch (spec.kind) {
        case DesignKind::URD:
        case DesignKind::URGDD:
            allowed = cls.kind == ClassKind::OneFactor || cls.kind == ClassKind::StarClass;
            break;
        case DesignKind::IURD:
            allowed = cls.kind == ClassKind::OneFactor || cls.kind == ClassKind::StarClass ||
                      cls.kind == ClassKind::PartialOneFactor ||
                      cls.kind == ClassKind::PartialStarClass;
            break;
        case DesignKind::RGDD:
            allowed = cls.kind == ClassKind::BlockClass;
            break;
        case DesignKind::Frame:
            allowed = cls.kind == ClassKind::PartialBlockClass;
            break;
        }
        if (!allowed)
            add(ViolationCode::WrongClassCount,
                where + ": " + to_string(cls.kind) + " class not allowed in " + to_string(spec.kind));

        for (const auto& b : cls.blocks)
            if (b.kind != block_kind_of(cls.kind)) {
                add(ViolationCode::ClassNotUniform,
                    where + ": block of the wrong kind in a " + to_string(cls.kind) + " class");
                break;
            }

        std::vector<int> hits(v, 0);
        bool repeated = false;
        for (const auto& b : cls.blocks)
            for (Point p : b.points())
                if (p >= 0 && p < v && hits[p]++)
                    repeated = true;
        if (repeated)
            add(ViolationCode::ClassNotPartition, where + ": blocks are not vertex-disjoint");
        std::vector<Point> uncovered;
        for (Point p = 0; p < v; ++p)
            if (!hits[p])
                uncovered.push_back(p);

        if (!is_partial(cls.kind)) {
            if (!uncovered.empty())
                add(ViolationCode::ClassNotPartition,
                    where + ": " + std::to_string(uncovered.size()) + " points uncovered");
        } else if (cls.kind == ClassKind::PartialBlockClass) {
            int inferred = -1;
            if (!uncovered.empty() && layout.group_of[uncovered.front()] >= 0) {
                int g = layout.group_of[uncovered.front()];
                auto members = design.groups[g];
                std::sort(members.begin(), members.end());
                if (members == uncovered)
                    inferred = g;
            }
            if (inferred < 0) {
                add(ViolationCode::FrameAccountingError,
                    where + ": uncovered points are not exactly one group");
            } else {
                ++missing_count[inferred];
                if (cls.missing.tag != Missing::Tag::Group || cls.missing.group != inferred)
                    add(ViolationCode::FrameAccountingError,
                        where + ": misses group " + std::to_string(inferred) +
                            " but declares another");
            }
        } else {
            std::vector<Point> hole = design.hole;
            std::sort(hole.begin(), hole.end());
            if (cls.missing.tag != Missing::Tag::Hole || uncovered != hole)
                add(ViolationCode::ClassNotPartition,
                    where + ": partial class must cover exactly the non-hole points");
        }
    }

    // (d) class counts.
    const auto found = rep.profile_found;
    auto expect = [&](int got, int want, const std::string& what) {
        if (got != want)
            add(ViolationCode::WrongClassCount, what + ": found " + std::to_string(got) +
                                                    ", expected " + std::to_string(want));
    };
    switch (spec.kind) {
    case DesignKind::URD:
    case DesignKind::URGDD:
        expect(found.one_factor, spec.profile.r, "1-factor classes");
        expect(found.star, spec.profile.s, "star classes");
        break;
    case DesignKind::IURD:
        expect(found.one_factor, spec.profile.r, "full 1-factor classes");
        expect(found.star, spec.profile.s, "full star classes");
        expect(found.partial_one_factor, spec.partial_profile.r, "partial 1-factor classes");
        expect(found.partial_star, spec.partial_profile.s, "partial star classes");
        break;
    case DesignKind::RGDD: {
        const auto& t = spec.group_type;
        if (t.size() != 1 || (t[0].first * (t[0].second - 1)) % 3 != 0) {
            add(ViolationCode::SpecMismatch, "no 4-RGDD of type " + to_string(t) + " is possible");
            break;
        }
        expect(found.block, t[0].first * (t[0].second - 1) / 3, "parallel classes");
        break;
    }
    case DesignKind::Frame:
        for (std::size_t g = 0; g < design.groups.size(); ++g) {
            int size = static_cast<int>(design.groups[g].size());
            if (size % 3 != 0) {
                add(ViolationCode::SpecMismatch,
                    "group " + std::to_string(g) + " size is not a multiple of 3");
                continue;
            }
            if (missing_count[g] != size / 3)
                add(ViolationCode::FrameAccountingError,
                    "group " + std::to_string(g) + " missed by " + std::to_string(missing_count[g]) +
                        " classes, expected " + std::to_string(size / 3));
        }
        break;
    }
    return finish();
}

std::vector<std::pair<int, int>> star_balance(const Design& design)
{
    auto rep = verify(design, spec_of(design));
    if (design.kind != DesignKind::URD || !rep.pass)
        throw PreconditionError("star_balance needs a verified URD");
    std::vector<std::pair<int, int>> out(design.v, {0, 0});
    for (const auto& cls : design.classes) {
        if (cls.kind != ClassKind::StarClass)
            continue;
        for (const auto& b : cls.blocks) {
            ++out[b.pts[0]].first;
            for (int i = 1; i < 4; ++i)
                ++out[b.pts[i]].second;
        }
    }
    return out;
}

} // namespace urd
