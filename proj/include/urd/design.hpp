#ifndef URD_DESIGN_HPP
#define URD_DESIGN_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace urd {

using Point = int;

enum class BlockKind : std::uint8_t { Edge, Star, Quad };

// An edge {u,w}, a 3-star (center; three leaves) or a 4-set (a K4 block of
// a 4-RGDD or 4-frame). For stars pts[0] is the center.
struct Block {
    BlockKind kind = BlockKind::Edge;
    std::array<Point, 4> pts{};

    static Block edge(Point u, Point w);
    static Block star(Point center, Point l1, Point l2, Point l3);
    static Block quad(Point a, Point b, Point c, Point d);

    int size() const { return kind == BlockKind::Edge ? 2 : 4; }
    Point center() const { return pts[0]; }

    // Vertex set, in storage order.
    std::vector<Point> points() const { return {pts.begin(), pts.begin() + size()}; }
    // Graph edges this block covers, each as (min,max).
    std::vector<std::pair<Point, Point>> edges() const;

    auto operator<=>(const Block&) const = default;
};

enum class ClassKind : std::uint8_t {
    OneFactor,
    StarClass,
    PartialOneFactor,
    PartialStarClass,
    BlockClass,
    PartialBlockClass,
};

bool is_partial(ClassKind k);
BlockKind block_kind_of(ClassKind k);

struct Missing {
    enum class Tag : std::uint8_t { None, Group, Hole };
    Tag tag = Tag::None;
    int group = -1;

    static Missing none() { return {}; }
    static Missing of_group(int g) { return {Tag::Group, g}; }
    static Missing hole() { return {Tag::Hole, -1}; }

    auto operator<=>(const Missing&) const = default;
};

struct ResolutionClass {
    ClassKind kind = ClassKind::OneFactor;
    Missing missing;
    std::vector<Block> blocks;

    auto operator<=>(const ResolutionClass&) const = default;
};

enum class DesignKind : std::uint8_t { URD, URGDD, IURD, Frame, RGDD };

struct Profile {
    int r = 0;
    int s = 0;

    Profile operator+(const Profile& o) const { return {r + o.r, s + o.s}; }
    Profile operator*(int k) const { return {r * k, s * k}; }
    auto operator<=>(const Profile&) const = default;
};

std::string to_string(const Profile& p);

// Observed class counts of a design, by class kind.
struct ClassCounts {
    int one_factor = 0;
    int star = 0;
    int partial_one_factor = 0;
    int partial_star = 0;
    int block = 0;
    int partial_block = 0;

    Profile full() const { return {one_factor, star}; }
    Profile partial() const { return {partial_one_factor, partial_star}; }
    int total() const
    {
        return one_factor + star + partial_one_factor + partial_star + block + partial_block;
    }
    auto operator<=>(const ClassCounts&) const = default;
};

// The universal design object: URD, URGDD, IURD, 4-RGDD and 4-frame all
// share this representation. Groups and hole are explicit point lists.
struct Design {
    DesignKind kind = DesignKind::URD;
    int v = 0;
    std::vector<std::vector<Point>> groups;
    std::vector<Point> hole;
    std::vector<ResolutionClass> classes;

    ClassCounts counts() const;
    Profile profile() const { return counts().full(); }

    bool operator==(const Design&) const = default;
};

// Canonical form: edges u<w, star leaves sorted, quads sorted, groups sorted
// (missing-group indices remapped), blocks sorted in each class, classes
// sorted by (kind, missing, blocks). Throws StructureError on a block with
// repeated points.
Design normalize(Design d);

// A group type g1^u1 g2^u2 ... as (size, multiplicity) pairs.
using GroupType = std::vector<std::pair<int, int>>;

std::string to_string(const GroupType& t);
GroupType parse_group_type(const std::string& text);
int total_points(const GroupType& t);
GroupType group_type_of(const std::vector<std::vector<Point>>& groups);

// Verification / search target.
struct DesignSpec {
    DesignKind kind = DesignKind::URD;
    // Total number of points, hole included.
    int v = 0;
    GroupType group_type;
    int hole_size = 0;
    // Full-class profile (URD, URGDD, IURD full classes).
    Profile profile;
    // Partial-class profile of an IURD.
    Profile partial_profile;

    static DesignSpec urd(int v, Profile p);
    static DesignSpec urgdd(GroupType type, Profile p);
    static DesignSpec iurd(int v, int hole, Profile partial, Profile full);
    static DesignSpec rgdd(GroupType type);
    static DesignSpec frame(GroupType type);

    // Throws SpecError when the parameters contradict each other.
    void check_consistent() const;

    bool operator==(const DesignSpec&) const = default;
};

std::string to_string(DesignKind k);
DesignKind parse_design_kind(const std::string& text);
std::string to_string(ClassKind k);
ClassKind parse_class_kind(const std::string& text);

// "urd:8:1,4", "urgdd:2^4:0,4", "iurd:20,8:1,4:0,8", "rgdd:3^8", "frame:6^5".
std::string to_string(const DesignSpec& s);
DesignSpec parse_spec(const std::string& text);

// Points of the canonical layout of a spec: groups are consecutive runs in
// the order of the type string; an IURD hole occupies the last points.
std::vector<std::vector<Point>> canonical_groups(const GroupType& t);
std::vector<Point> canonical_hole(const DesignSpec& s);

// Spec describing exactly what a design claims to be, from its own kind,
// groups, hole and class counts.
DesignSpec spec_of(const Design& d);

// Apply a point permutation (image[p] is the new label of p).
Design relabel(const Design& d, const std::vector<Point>& image);

} // namespace urd

#endif // URD_DESIGN_HPP
