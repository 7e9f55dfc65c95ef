#include "urd/design.hpp"

#include "urd/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace urd {

Block Block::edge(Point u, Point w)
{
    Block b;
    b.kind = BlockKind::Edge;
    b.pts = {u, w, 0, 0};
    return b;
}

Block Block::star(Point center, Point l1, Point l2, Point l3)
{
    Block b;
    b.kind = BlockKind::Star;
    b.pts = {center, l1, l2, l3};
    return b;
}

Block Block::quad(Point a, Point b, Point c, Point d)
{
    Block q;
    q.kind = BlockKind::Quad;
    q.pts = {a, b, c, d};
    return q;
}

std::vector<std::pair<Point, Point>> Block::edges() const
{
    auto ordered = [](Point a, Point b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
    switch (kind) {
    case BlockKind::Edge:
        return {ordered(pts[0], pts[1])};
    case BlockKind::Star:
        return {ordered(pts[0], pts[1]), ordered(pts[0], pts[2]), ordered(pts[0], pts[3])};
    case BlockKind::Quad: {
        std::vector<std::pair<Point, Point>> out;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                out.push_back(ordered(pts[i], pts[j]));
        return out;
    }
    }
    return {};
}

bool is_partial(ClassKind k)
{
    return k == ClassKind::PartialOneFactor || k == ClassKind::PartialStarClass ||
           k == ClassKind::PartialBlockClass;
}

BlockKind block_kind_of(ClassKind k)
{
    switch (k) {
    case ClassKind::OneFactor:
    case ClassKind::PartialOneFactor:
        return BlockKind::Edge;
    case ClassKind::StarClass:
    case ClassKind::PartialStarClass:
        return BlockKind::Star;
    case ClassKind::BlockClass:
    case ClassKind::PartialBlockClass:
        return BlockKind::Quad;
    }
    return BlockKind::Edge;
}

std::string to_string(const Profile& p)
{
    return "(" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
}

ClassCounts Design::counts() const
{
    ClassCounts c;
    for (const auto& cls : classes) {
        switch (cls.kind) {
        case ClassKind::OneFactor: ++c.one_factor; break;
        case ClassKind::StarClass: ++c.star; break;
        case ClassKind::PartialOneFactor: ++c.partial_one_factor; break;
        case ClassKind::PartialStarClass: ++c.partial_star; break;
        case ClassKind::BlockClass: ++c.block; break;
        case ClassKind::PartialBlockClass: ++c.partial_block; break;
        }
    }
    return c;
}

namespace {

Block normalize_block(Block b)
{
    auto first = b.pts.begin();
    switch (b.kind) {
    case BlockKind::Edge:
        std::sort(first, first + 2);
        if (b.pts[0] == b.pts[1])
            throw StructureError("edge with repeated point " + std::to_string(b.pts[0]));
        break;
    case BlockKind::Star:
        std::sort(first + 1, first + 4);
        if (b.pts[1] == b.pts[2] || b.pts[2] == b.pts[3] || b.pts[0] == b.pts[1] ||
            b.pts[0] == b.pts[2] || b.pts[0] == b.pts[3])
            throw StructureError("star centered at " + std::to_string(b.pts[0]) +
                                 " has repeated points");
        break;
    case BlockKind::Quad:
        std::sort(first, first + 4);
        if (std::adjacent_find(first, first + 4) != first + 4)
            throw StructureError("4-block with repeated points");
        break;
    }
    return b;
}

} // namespace

Design normalize(Design d)
{
    for (auto& g : d.groups)
        std::sort(g.begin(), g.end());
    std::vector<int> order(d.groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d.groups[a] < d.groups[b]; });
    std::vector<int> new_index(d.groups.size());
    std::vector<std::vector<Point>> groups;
    groups.reserve(d.groups.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_index[order[i]] = static_cast<int>(i);
        groups.push_back(std::move(d.groups[order[i]]));
    }
    d.groups = std::move(groups);
    std::sort(d.hole.begin(), d.hole.end());

    for (auto& cls : d.classes) {
        for (auto& b : cls.blocks)
            b = normalize_block(b);
        std::sort(cls.blocks.begin(), cls.blocks.end());
        if (cls.missing.tag == Missing::Tag::Group && cls.missing.group >= 0 &&
            cls.missing.group < static_cast<int>(new_index.size()))
            cls.missing.group = new_index[cls.missing.group];
    }
    std::sort(d.classes.begin(), d.classes.end());
    return d;
}

std::string to_string(const GroupType& t)
{
    std::string out;
    for (const auto& [size, mult] : t) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(size) + "^" + std::to_string(mult);
    }
    return out;
}

namespace {

int parse_int(std::string_view s, const std::string& context)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw SpecError("expected an integer in '" + context + "', got '" + std::string(s) + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

Profile parse_profile(const std::string& text, const std::string& context)
{
    auto parts = split(text, ',');
    if (parts.size() != 2)
        throw SpecError("expected 'r,s' in '" + context + "'");
    return {parse_int(parts[0], context), parse_int(parts[1], context)};
}

} // namespace

GroupType parse_group_type(const std::string& text)
{
    GroupType t;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        auto caret = tok.find('^');
        if (caret == std::string::npos) {
            t.emplace_back(parse_int(tok, text), 1);
        } else {
            t.emplace_back(parse_int(std::string_view(tok).substr(0, caret), text),
                           parse_int(std::string_view(tok).substr(caret + 1), text));
        }
    }
    if (t.empty())
        throw SpecError("empty group type");
    for (const auto& [size, mult] : t)
        if (size <= 0 || mult <= 0)
            throw SpecError("group sizes and multiplicities must be positive in '" + text + "'");
    return t;
}

int total_points(const GroupType& t)
{
    int n = 0;
    for (const auto& [size, mult] : t)
        n += size * mult;
    return n;
}

GroupType group_type_of(const std::vector<std::vector<Point>>& groups)
{
    std::map<int, int> mult;
    for (const auto& g : groups)
        ++mult[static_cast<int>(g.size())];
    return {mult.begin(), mult.end()};
}

DesignSpec DesignSpec::urd(int v, Profile p)
{
    DesignSpec s;
    s.kind = DesignKind::URD;
    s.v = v;
    s.profile = p;
    return s;
}

DesignSpec DesignSpec::urgdd(GroupType type, Profile p)
{
    DesignSpec s;
    s.kind = DesignKind::URGDD;
    s.v = total_points(type);
    s.group_type = std::move(type);
    s.profile = p;
    return s;
}

DesignSpec DesignSpec::iurd(int v, int hole, Profile partial, Profile full)
{
    DesignSpec s;
    s.kind = DesignKind::IURD;
    s.v = v;
    s.hole_size = hole;
    s.partial_profile = partial;
    s.profile = full;
    return s;
}

DesignSpec DesignSpec::rgdd(GroupType type)
{
    DesignSpec s;
    s.kind = DesignKind::RGDD;
    s.v = total_points(type);
    s.group_type = std::move(type);
    return s;
}

DesignSpec DesignSpec::frame(GroupType type)
{
    DesignSpec s;
    s.kind = DesignKind::Frame;
    s.v = total_points(type);
    s.group_type = std::move(type);
    return s;
}

void DesignSpec::check_consistent() const
{
    if (v <= 0)
        throw SpecError("point count must be positive");
    if (profile.r < 0 || profile.s < 0 || partial_profile.r < 0 || partial_profile.s < 0)
        throw SpecError("class counts must be nonnegative");
    switch (kind) {
    case DesignKind::URD:
        if (!group_type.empty() || hole_size != 0)
            throw SpecError("a URD has neither groups nor a hole");
        break;
    case DesignKind::IURD:
        if (!group_type.empty())
            throw SpecError("an IURD has no groups");
        if (hole_size <= 0 || hole_size >= v)
            throw SpecError("IURD hole size must lie strictly between 0 and v");
        break;
    case DesignKind::URGDD:
    case DesignKind::RGDD:
    case DesignKind::Frame:
        if (group_type.empty())
            throw SpecError(to_string(kind) + " needs a group type");
        for (const auto& [size, mult] : group_type)
            if (size <= 0 || mult <= 0)
                throw SpecError("group sizes and multiplicities must be positive");
        if (hole_size != 0)
            throw SpecError(to_string(kind) + " has no hole");
        if (total_points(group_type) != v)
            throw SpecError("v = " + std::to_string(v) + " but group type " +
                            to_string(group_type) + " has " +
                            std::to_string(total_points(group_type)) + " points");
        break;
    }
}

std::string to_string(DesignKind k)
{
    switch (k) {
    case DesignKind::URD: return "urd";
    case DesignKind::URGDD: return "urgdd";
    case DesignKind::IURD: return "iurd";
    case DesignKind::Frame: return "frame";
    case DesignKind::RGDD: return "rgdd";
    }
    return "?";
}

DesignKind parse_design_kind(const std::string& text)
{
    if (text == "urd") return DesignKind::URD;
    if (text == "urgdd") return DesignKind::URGDD;
    if (text == "iurd") return DesignKind::IURD;
    if (text == "frame") return DesignKind::Frame;
    if (text == "rgdd") return DesignKind::RGDD;
    throw SpecError("unknown design kind '" + text + "'");
}

std::string to_string(ClassKind k)
{
    switch (k) {
    case ClassKind::OneFactor: return "one_factor";
    case ClassKind::StarClass: return "star";
    case ClassKind::PartialOneFactor: return "partial_one_factor";
    case ClassKind::PartialStarClass: return "partial_star";
    case ClassKind::BlockClass: return "block";
    case ClassKind::PartialBlockClass: return "partial_block";
    }
    return "?";
}

ClassKind parse_class_kind(const std::string& text)
{
    if (text == "one_factor") return ClassKind::OneFactor;
    if (text == "star") return ClassKind::StarClass;
    if (text == "partial_one_factor") return ClassKind::PartialOneFactor;
    if (text == "partial_star") return ClassKind::PartialStarClass;
    if (text == "block") return ClassKind::BlockClass;
    if (text == "partial_block") return ClassKind::PartialBlockClass;
    throw SpecError("unknown class kind '" + text + "'");
}

std::string to_string(const DesignSpec& s)
{
    auto compact = [](const GroupType& t) {
        std::string out;
        for (const auto& [size, mult] : t) {
            if (!out.empty())
                out += '.';
            out += std::to_string(size) + "^" + std::to_string(mult);
        }
        return out;
    };
    auto prof = [](Profile p) { return std::to_string(p.r) + "," + std::to_string(p.s); };
    switch (s.kind) {
    case DesignKind::URD:
        return "urd:" + std::to_string(s.v) + ":" + prof(s.profile);
    case DesignKind::URGDD:
        return "urgdd:" + compact(s.group_type) + ":" + prof(s.profile);
    case DesignKind::IURD:
        return "iurd:" + std::to_string(s.v) + "," + std::to_string(s.hole_size) + ":" +
               prof(s.partial_profile) + ":" + prof(s.profile);
    case DesignKind::RGDD:
        return "rgdd:" + compact(s.group_type);
    case DesignKind::Frame:
        return "frame:" + compact(s.group_type);
    }
    return "?";
}

DesignSpec parse_spec(const std::string& text)
{
    auto parts = split(text, ':');
    if (parts.empty())
        throw SpecError("empty spec");
    auto kind = parse_design_kind(parts[0]);
    auto type_of = [&](const std::string& t) {
        std::string spaced = t;
        std::replace(spaced.begin(), spaced.end(), '.', ' ');
        return parse_group_type(spaced);
    };
    auto want = [&](std::size_t n) {
        if (parts.size() != n)
            throw SpecError("malformed spec '" + text + "'");
    };
    DesignSpec s;
    switch (kind) {
    case DesignKind::URD:
        want(3);
        s = DesignSpec::urd(parse_int(parts[1], text), parse_profile(parts[2], text));
        break;
    case DesignKind::URGDD:
        want(3);
        s = DesignSpec::urgdd(type_of(parts[1]), parse_profile(parts[2], text));
        break;
    case DesignKind::IURD: {
        want(4);
        auto vh = split(parts[1], ',');
        if (vh.size() != 2)
            throw SpecError("IURD spec needs 'v,h' in '" + text + "'");
        s = DesignSpec::iurd(parse_int(vh[0], text), parse_int(vh[1], text),
                             parse_profile(parts[2], text), parse_profile(parts[3], text));
        break;
    }
    case DesignKind::RGDD:
        want(2);
        s = DesignSpec::rgdd(type_of(parts[1]));
        break;
    case DesignKind::Frame:
        want(2);
        s = DesignSpec::frame(type_of(parts[1]));
        break;
    }
    s.check_consistent();
    return s;
}

std::vector<std::vector<Point>> canonical_groups(const GroupType& t)
{
    std::vector<std::vector<Point>> groups;
    Point next = 0;
    for (const auto& [size, mult] : t) {
        for (int k = 0; k < mult; ++k) {
            std::vector<Point> g(size);
            std::iota(g.begin(), g.end(), next);
            next += size;
            groups.push_back(std::move(g));
        }
    }
    return groups;
}

std::vector<Point> canonical_hole(const DesignSpec& s)
{
    std::vector<Point> hole(s.hole_size);
    std::iota(hole.begin(), hole.end(), s.v - s.hole_size);
    return hole;
}

DesignSpec spec_of(const Design& d)
{
    DesignSpec s;
    s.kind = d.kind;
    s.v = d.v;
    if (!d.groups.empty())
        s.group_type = group_type_of(d.groups);
    s.hole_size = static_cast<int>(d.hole.size());
    auto c = d.counts();
    s.profile = c.full();
    s.partial_profile = c.partial();
    return s;
}

Design relabel(const Design& d, const std::vector<Point>& image)
{
    Design out = d;
    auto map_point = [&](Point p) {
        return (p >= 0 && p < static_cast<int>(image.size())) ? image[p] : p;
    };
    for (auto& g : out.groups)
        for (auto& p : g)
            p = map_point(p);
    for (auto& p : out.hole)
        p = map_point(p);
    for (auto& cls : out.classes)
        for (auto& b : cls.blocks)
            for (int i = 0; i < b.size(); ++i)
                b.pts[i] = map_point(b.pts[i]);
    return out;
}

} // namespace urd
