#include "urd/serialize.hpp"

#include "urd/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace urd {

using nlohmann::json;

namespace {

void append_points(std::string& out, const std::vector<Point>& pts)
{
    out += '[';
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(pts[i]);
    }
    out += ']';
}

std::string missing_text(const Missing& m)
{
    switch (m.tag) {
    case Missing::Tag::None: return "null";
    case Missing::Tag::Group: return "{\"group\":" + std::to_string(m.group) + "}";
    case Missing::Tag::Hole: return "{\"hole\":true}";
    }
    return "null";
}

} // namespace

std::string encode(const Design& raw)
{
    Design d = normalize(raw);
    std::string out;
    out += "{\"schema\":" + std::to_string(kSchemaVersion);
    out += ",\"kind\":\"" + to_string(d.kind) + "\"";
    out += ",\"v\":" + std::to_string(d.v);
    if (!d.groups.empty()) {
        out += ",\"groups\":[";
        for (std::size_t i = 0; i < d.groups.size(); ++i) {
            if (i)
                out += ',';
            append_points(out, d.groups[i]);
        }
        out += ']';
    }
    if (!d.hole.empty()) {
        out += ",\"hole\":";
        append_points(out, d.hole);
    }
    out += ",\"classes\":[";
    for (std::size_t c = 0; c < d.classes.size(); ++c) {
        const auto& cls = d.classes[c];
        out += c ? ",\n" : "\n";
        out += "{\"kind\":\"" + to_string(cls.kind) + "\",\"missing\":" + missing_text(cls.missing) +
               ",\"blocks\":[";
        for (std::size_t b = 0; b < cls.blocks.size(); ++b) {
            if (b)
                out += ',';
            append_points(out, cls.blocks[b].points());
        }
        out += "]}";
    }
    out += "\n]}\n";
    return out;
}

namespace {

Point point_at(const json& j, int v, const std::string& where)
{
    if (!j.is_number_integer())
        throw DecodeError(where + ": point is not an integer");
    auto p = j.get<long long>();
    if (p < 0 || p >= v)
        throw DecodeError(where + ": point " + std::to_string(p) + " outside 0.." +
                          std::to_string(v - 1));
    return static_cast<Point>(p);
}

std::vector<Point> point_list(const json& j, int v, const std::string& where)
{
    if (!j.is_array())
        throw DecodeError(where + ": expected an array of points");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < j.size(); ++i)
        pts.push_back(point_at(j[i], v, where + "[" + std::to_string(i) + "]"));
    return pts;
}

Missing decode_missing(const json& cls, const std::string& where)
{
    if (!cls.contains("missing") || cls["missing"].is_null())
        return Missing::none();
    const auto& m = cls["missing"];
    if (!m.is_object())
        throw DecodeError(where + ".missing: expected null or an object");
    if (m.contains("group")) {
        if (!m["group"].is_number_integer() || m["group"].get<long long>() < 0)
            throw DecodeError(where + ".missing.group: expected a nonnegative integer");
        return Missing::of_group(m["group"].get<int>());
    }
    if (m.contains("hole") && m["hole"] == true)
        return Missing::hole();
    throw DecodeError(where + ".missing: expected {\"group\":i} or {\"hole\":true}");
}

} // namespace

Design decode(const std::string& text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DecodeError(std::string("not valid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw DecodeError("top level: expected an object");
    if (!root.contains("schema") || !root["schema"].is_number_integer())
        throw DecodeError("schema: missing or not an integer");
    if (root["schema"].get<long long>() != kSchemaVersion)
        throw DecodeError("schema: unknown version " + root["schema"].dump());

    Design d;
    if (!root.contains("kind") || !root["kind"].is_string())
        throw DecodeError("kind: missing or not a string");
    try {
        d.kind = parse_design_kind(root["kind"].get<std::string>());
    } catch (const SpecError&) {
        throw DecodeError("kind: unknown design kind " + root["kind"].dump());
    }
    if (!root.contains("v") || !root["v"].is_number_integer())
        throw DecodeError("v: missing or not an integer");
    auto v = root["v"].get<long long>();
    if (v < 4)
        throw DecodeError("v: must be at least 4, got " + std::to_string(v));
    if (v > 100000)
        throw DecodeError("v: unreasonably large (" + std::to_string(v) + ")");
    d.v = static_cast<int>(v);

    if (root.contains("groups")) {
        const auto& gs = root["groups"];
        if (!gs.is_array())
            throw DecodeError("groups: expected an array");
        for (std::size_t i = 0; i < gs.size(); ++i)
            d.groups.push_back(point_list(gs[i], d.v, "groups[" + std::to_string(i) + "]"));
    }
    if (root.contains("hole"))
        d.hole = point_list(root["hole"], d.v, "hole");

    if (!root.contains("classes") || !root["classes"].is_array())
        throw DecodeError("classes: missing or not an array");
    const auto& classes = root["classes"];
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::string where = "classes[" + std::to_string(c) + "]";
        const auto& jc = classes[c];
        if (!jc.is_object())
            throw DecodeError(where + ": expected an object");
        ResolutionClass cls;
        if (!jc.contains("kind") || !jc["kind"].is_string())
            throw DecodeError(where + ".kind: missing or not a string");
        try {
            cls.kind = parse_class_kind(jc["kind"].get<std::string>());
        } catch (const SpecError&) {
            throw DecodeError(where + ".kind: unknown class kind " + jc["kind"].dump());
        }
        cls.missing = decode_missing(jc, where);
        if (is_partial(cls.kind) == (cls.missing.tag == Missing::Tag::None))
            throw DecodeError(where + ": partial classes (and only those) declare a missing part");
        if (!jc.contains("blocks") || !jc["blocks"].is_array())
            throw DecodeError(where + ".blocks: missing or not an array");
        auto want = block_kind_of(cls.kind);
        std::size_t want_size = want == BlockKind::Edge ? 2 : 4;
        for (std::size_t b = 0; b < jc["blocks"].size(); ++b) {
            std::string bw = where + ".blocks[" + std::to_string(b) + "]";
            auto pts = point_list(jc["blocks"][b], d.v, bw);
            if (pts.size() != want_size)
                throw DecodeError(bw + ": a " + to_string(cls.kind) + " block needs " +
                                  std::to_string(want_size) + " points, got " +
                                  std::to_string(pts.size()));
            if (std::set<Point>(pts.begin(), pts.end()).size() != pts.size())
                throw DecodeError(bw + ": repeated point");
            Block blk;
            blk.kind = want;
            std::copy(pts.begin(), pts.end(), blk.pts.begin());
            cls.blocks.push_back(blk);
        }
        d.classes.push_back(std::move(cls));
    }
    return normalize(std::move(d));
}

Design read_design(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw DecodeError("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return decode(buf.str());
}

void write_design(const std::filesystem::path& file, const Design& d)
{
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);
    if (!out)
        throw Error("cannot write " + file.string());
    out << encode(d);
}

} // namespace urd
