#include "urd/constructions.hpp"

#include "urd/admissibility.hpp"
#include "urd/catalog.hpp"
#include "urd/error.hpp"
#include "urd/verifier.hpp"

#include <algorithm>
#include <map>

namespace urd {

namespace {

Block map_block(const Block& b, const std::vector<Point>& image)
{
    Block out = b;
    for (int i = 0; i < b.size(); ++i)
        out.pts[i] = image.at(b.pts[i]);
    return out;
}

// Classes of one full/partial kind pair, in normalized order, split by the
// block kind they use: [0] edges, [1] stars.
struct ByKind {
    std::vector<const ResolutionClass*> edge;
    std::vector<const ResolutionClass*> star;

    std::vector<const ResolutionClass*>& of(BlockKind k) { return k == BlockKind::Edge ? edge : star; }
};

ByKind full_classes(const Design& d)
{
    ByKind out;
    for (const auto& c : d.classes) {
        if (c.kind == ClassKind::OneFactor)
            out.edge.push_back(&c);
        else if (c.kind == ClassKind::StarClass)
            out.star.push_back(&c);
    }
    return out;
}

ByKind partial_classes(const Design& d)
{
    ByKind out;
    for (const auto& c : d.classes) {
        if (c.kind == ClassKind::PartialOneFactor)
            out.edge.push_back(&c);
        else if (c.kind == ClassKind::PartialStarClass)
            out.star.push_back(&c);
    }
    return out;
}

ClassKind full_kind(BlockKind k) { return k == BlockKind::Edge ? ClassKind::OneFactor : ClassKind::StarClass; }
ClassKind partial_kind(BlockKind k)
{
    return k == BlockKind::Edge ? ClassKind::PartialOneFactor : ClassKind::PartialStarClass;
}

void append_mapped(ResolutionClass& into, const ResolutionClass& from, const std::vector<Point>& image)
{
    for (const auto& b : from.blocks)
        into.blocks.push_back(map_block(b, image));
}

void require_verified(const Design& d, const DesignSpec& spec, const std::string& role)
{
    auto rep = verify(d, spec);
    if (!rep.pass)
        throw IngredientError(role + " is not a valid " + to_string(spec) + ": " + rep.summary(), rep);
}

// Closure check applied to every construction output.
ConstructionResult finish(Design d, std::vector<TraceStep> trace, const std::string& what)
{
    d = normalize(std::move(d));
    Profile p = d.profile();
    auto rep = verify(d, DesignSpec::urd(d.v, p));
    if (!rep.pass)
        throw ConstructionError(what + " produced an invalid URD(" + std::to_string(d.v) + "): " +
                                rep.summary());
    return {std::move(d), p, std::move(trace)};
}

int uniform_group_size(const Design& d, const std::string& role)
{
    if (d.groups.empty())
        throw ConstructionError(role + " has no groups");
    int g = static_cast<int>(d.groups.front().size());
    for (const auto& grp : d.groups)
        if (static_cast<int>(grp.size()) != g)
            throw ConstructionError(role + " has groups of different sizes");
    return g;
}

// Image of an ingredient of type t^4 placed on block b: point k of
// ingredient group j goes to b[j]*t + k.
std::vector<Point> block_image(const Design& ingredient, const Block& b, int t)
{
    std::array<Point, 4> sorted = b.pts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Point> image(ingredient.v, -1);
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < t; ++k)
            image[ingredient.groups[j][k]] = sorted[j] * t + k;
    return image;
}

std::vector<Point> expanded(const std::vector<Point>& group, int t)
{
    std::vector<Point> out;
    for (Point p : group)
        for (int i = 0; i < t; ++i)
            out.push_back(p * t + i);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

UrgddSupplier catalog_urgdd_supplier(int t)
{
    return [t](const Profile& p) -> Design {
        if (t == 2 && p == Profile{0, 4})
            return lookup("d1_urgdd_2x4").design;
        throw Unavailable({"no URGDD(" + std::to_string(p.r) + "," + std::to_string(p.s) + ") of type " +
                           std::to_string(t) + "^4 is known to this library"});
    };
}

Design one_factorization(int v)
{
    if (v < 2 || v % 2 != 0)
        throw ConstructionError("K_" + std::to_string(v) + " has a 1-factorization only for even v >= 2");
    Design d;
    d.kind = DesignKind::URD;
    d.v = v;
    int m = v - 1;
    for (int k = 0; k < m; ++k) {
        ResolutionClass cls;
        cls.kind = ClassKind::OneFactor;
        cls.blocks.push_back(Block::edge(k, m));
        for (int i = 1; i < v / 2; ++i)
            cls.blocks.push_back(Block::edge((k + i) % m, (k - i + m) % m));
        d.classes.push_back(std::move(cls));
    }
    return finish(std::move(d), {}, "one_factorization").design;
}

ConstructionResult inflate_rgdd(const Design& rgdd_in, int t, const std::vector<Profile>& schedule,
                                const UrgddSupplier& supplier, const Design& group_filler)
{
    Design rgdd = normalize(rgdd_in);
    int g = uniform_group_size(rgdd, "the 4-RGDD");
    int u = static_cast<int>(rgdd.groups.size());
    require_verified(rgdd, DesignSpec::rgdd({{g, u}}), "the 4-RGDD");
    if (t < 1)
        throw PreconditionError("weight t must be positive");
    int n_classes = static_cast<int>(rgdd.classes.size());
    if (schedule.size() != 1 && static_cast<int>(schedule.size()) != n_classes)
        throw ConstructionError("schedule has " + std::to_string(schedule.size()) + " entries for " +
                                std::to_string(n_classes) + " classes");
    require_verified(group_filler, DesignSpec::urd(g * t, group_filler.profile()), "the group filler");

    std::map<Profile, Design> ingredients;
    std::vector<std::string> used;
    for (int c = 0; c < n_classes; ++c) {
        Profile p = schedule.size() == 1 ? schedule[0] : schedule[c];
        if (ingredients.count(p))
            continue;
        DesignSpec spec = DesignSpec::urgdd({{t, 4}}, p);
        Design ing = normalize(supplier(p));
        require_verified(ing, spec, "the supplied ingredient");
        ingredients.emplace(p, std::move(ing));
        used.push_back(to_string(spec));
    }

    Design out;
    out.kind = DesignKind::URD;
    out.v = g * u * t;
    for (int c = 0; c < n_classes; ++c) {
        const Design& ing = ingredients.at(schedule.size() == 1 ? schedule[0] : schedule[c]);
        ByKind kinds = full_classes(ing);
        for (BlockKind bk : {BlockKind::Edge, BlockKind::Star}) {
            for (const ResolutionClass* ic : kinds.of(bk)) {
                ResolutionClass merged;
                merged.kind = full_kind(bk);
                for (const Block& b : rgdd.classes[c].blocks)
                    append_mapped(merged, *ic, block_image(ing, b, t));
                out.classes.push_back(std::move(merged));
            }
        }
    }
    Design filler = normalize(group_filler);
    for (const auto& fc : filler.classes) {
        ResolutionClass merged;
        merged.kind = fc.kind;
        for (const auto& grp : rgdd.groups)
            append_mapped(merged, fc, expanded(grp, t));
        out.classes.push_back(std::move(merged));
    }
    used.push_back(to_string(DesignSpec::urd(g * t, filler.profile())));

    std::vector<TraceStep> trace{{"inflate 4-RGDD " + to_string(GroupType{{g, u}}) + " with weight " +
                                      std::to_string(t),
                                  "weight-t inflation of a 4-RGDD with URGDD ingredients of type t^4 "
                                  "and a URD filler on each expanded group",
                                  used}};
    return finish(std::move(out), std::move(trace), "inflate_rgdd");
}

ConstructionResult frame_fill(const Design& frame_in, int t, const Design& urgdd_in, const Design& iurd_in,
                              const Design& hole_filler_in)
{
    Design frame = normalize(frame_in);
    int g = uniform_group_size(frame, "the 4-frame");
    int u = static_cast<int>(frame.groups.size());
    require_verified(frame, DesignSpec::frame({{g, u}}), "the 4-frame");
    Design urgdd = normalize(urgdd_in);
    require_verified(urgdd, DesignSpec::urgdd({{t, 4}}, urgdd.profile()), "the URGDD ingredient");
    Design iurd = normalize(iurd_in);
    int h = static_cast<int>(iurd.hole.size());
    require_verified(iurd, DesignSpec::iurd(iurd.v, h, iurd.counts().partial(), iurd.profile()),
                     "the IURD ingredient");
    if (iurd.v != g * t + h)
        throw ConstructionError("IURD has " + std::to_string(iurd.v) + " points, expected g*t+h = " +
                                std::to_string(g * t + h));
    Design hole_filler = normalize(hole_filler_in);
    require_verified(hole_filler, DesignSpec::urd(h, hole_filler.profile()), "the hole filler");
    if (hole_filler.profile() != iurd.counts().partial())
        throw ConstructionError("hole filler profile " + to_string(hole_filler.profile()) +
                                " differs from the IURD partial profile " + to_string(iurd.counts().partial()));
    int per_group = g / 3;
    if (iurd.profile() != urgdd.profile() * per_group)
        throw ConstructionError("IURD full profile " + to_string(iurd.profile()) + " is not " +
                                std::to_string(per_group) + " * " + to_string(urgdd.profile()));

    int base = g * u * t;
    Design out;
    out.kind = DesignKind::URD;
    out.v = base + h;

    // IURD placement on G_i x [t] plus the hole.
    std::vector<Point> iurd_rest;
    for (Point p = 0; p < iurd.v; ++p)
        if (!std::binary_search(iurd.hole.begin(), iurd.hole.end(), p))
            iurd_rest.push_back(p);
    auto iurd_image = [&](int i) {
        std::vector<Point> image(iurd.v);
        auto eg = expanded(frame.groups[i], t);
        for (size_t k = 0; k < iurd_rest.size(); ++k)
            image[iurd_rest[k]] = eg[k];
        for (int k = 0; k < h; ++k)
            image[iurd.hole[k]] = base + k;
        return image;
    };

    std::vector<std::vector<const ResolutionClass*>> around(u);
    for (const auto& c : frame.classes)
        around.at(c.missing.group).push_back(&c);

    ByKind ing_kinds = full_classes(urgdd);
    ByKind iurd_full = full_classes(iurd);
    ByKind iurd_partial = partial_classes(iurd);
    for (int i = 0; i < u; ++i) {
        if (static_cast<int>(around[i].size()) != per_group)
            throw ConstructionError("group " + std::to_string(i) + " has " + std::to_string(around[i].size()) +
                                    " partial classes, expected " + std::to_string(per_group));
        auto image = iurd_image(i);
        for (BlockKind bk : {BlockKind::Edge, BlockKind::Star}) {
            const auto& ics = ing_kinds.of(bk);
            for (int j = 0; j < per_group; ++j) {
                for (size_t k = 0; k < ics.size(); ++k) {
                    ResolutionClass merged;
                    merged.kind = full_kind(bk);
                    for (const Block& b : around[i][j]->blocks)
                        append_mapped(merged, *ics[k], block_image(urgdd, b, t));
                    append_mapped(merged, *iurd_full.of(bk).at(j * ics.size() + k), image);
                    out.classes.push_back(std::move(merged));
                }
            }
        }
    }
    ByKind filler_kinds = full_classes(hole_filler);
    std::vector<Point> hole_image(h);
    for (int k = 0; k < h; ++k)
        hole_image[k] = base + k;
    for (BlockKind bk : {BlockKind::Edge, BlockKind::Star}) {
        const auto& fcs = filler_kinds.of(bk);
        for (size_t k = 0; k < fcs.size(); ++k) {
            ResolutionClass merged;
            merged.kind = full_kind(bk);
            for (int i = 0; i < u; ++i)
                append_mapped(merged, *iurd_partial.of(bk).at(k), iurd_image(i));
            append_mapped(merged, *fcs[k], hole_image);
            out.classes.push_back(std::move(merged));
        }
    }

    std::vector<TraceStep> trace{
        {"fill 4-frame " + to_string(GroupType{{g, u}}) + " with weight " + std::to_string(t) + " and a hole of size " +
             std::to_string(h),
         "weight-t frame filling: URGDDs of type t^4 on frame blocks, an IURD on each expanded group plus the "
         "hole, a URD on the hole",
         {to_string(spec_of(urgdd)), to_string(spec_of(iurd)), to_string(spec_of(hole_filler))}}};
    return finish(std::move(out), std::move(trace), "frame_fill");
}

namespace {

Design place_on_groups(const Design& urgdd_in, const Design& filler_in, int skip)
{
    Design urgdd = normalize(urgdd_in);
    int g = uniform_group_size(urgdd, "the URGDD");
    require_verified(urgdd, DesignSpec::urgdd({{g, static_cast<int>(urgdd.groups.size())}}, urgdd.profile()),
                     "the URGDD");
    Design filler = normalize(filler_in);
    if (filler.v != g)
        throw ConstructionError("filler has " + std::to_string(filler.v) + " points but groups have " +
                                std::to_string(g));
    require_verified(filler, DesignSpec::urd(g, filler.profile()), "the filler");

    Design out;
    out.v = urgdd.v;
    out.classes = urgdd.classes;
    for (auto& c : out.classes)
        c.missing = Missing::none();
    for (const auto& fc : filler.classes) {
        ResolutionClass merged;
        merged.kind = fc.kind;
        for (int i = 0; i < static_cast<int>(urgdd.groups.size()); ++i)
            if (i != skip)
                append_mapped(merged, fc, urgdd.groups[i]);
        out.classes.push_back(std::move(merged));
    }
    if (skip < 0) {
        out.kind = DesignKind::URD;
    } else {
        out.kind = DesignKind::IURD;
        out.hole = urgdd.groups.at(skip);
        for (size_t k = urgdd.classes.size(); k < out.classes.size(); ++k) {
            auto& c = out.classes[k];
            c.kind = partial_kind(block_kind_of(c.kind));
            c.missing = Missing::hole();
        }
    }
    return out;
}

} // namespace

ConstructionResult fill_groups(const Design& urgdd, const Design& filler)
{
    Design d = place_on_groups(urgdd, filler, -1);
    std::vector<TraceStep> trace{{"fill the groups of a URGDD",
                                  "a URD on every group of a URGDD",
                                  {to_string(spec_of(normalize(urgdd))), to_string(spec_of(normalize(filler)))}}};
    return finish(std::move(d), std::move(trace), "fill_groups");
}

Design fill_groups_leaving_hole(const Design& urgdd, const Design& filler, int hole_group)
{
    if (hole_group < 0 || hole_group >= static_cast<int>(urgdd.groups.size()))
        throw PreconditionError("no group " + std::to_string(hole_group));
    Design d = normalize(place_on_groups(urgdd, filler, hole_group));
    auto rep = verify(d, DesignSpec::iurd(d.v, static_cast<int>(d.hole.size()), d.counts().partial(), d.profile()));
    if (!rep.pass)
        throw ConstructionError("fill_groups_leaving_hole produced an invalid IURD: " + rep.summary());
    return d;
}

ConstructionResult fill_hole(const Design& iurd_in, const Design& hole_design_in)
{
    Design iurd = normalize(iurd_in);
    int h = static_cast<int>(iurd.hole.size());
    require_verified(iurd, DesignSpec::iurd(iurd.v, h, iurd.counts().partial(), iurd.profile()), "the IURD");
    Design hole_design = normalize(hole_design_in);
    if (hole_design.v != h)
        throw ConstructionError("hole design has " + std::to_string(hole_design.v) + " points, hole has " +
                                std::to_string(h));
    require_verified(hole_design, DesignSpec::urd(h, hole_design.profile()), "the hole design");
    if (hole_design.profile() != iurd.counts().partial())
        throw ConstructionError("hole design profile " + to_string(hole_design.profile()) +
                                " differs from the IURD partial profile " + to_string(iurd.counts().partial()));

    Design out;
    out.kind = DesignKind::URD;
    out.v = iurd.v;
    ByKind partial = partial_classes(iurd);
    ByKind filler = full_classes(hole_design);
    std::vector<Point> identity(iurd.v);
    for (Point p = 0; p < iurd.v; ++p)
        identity[p] = p;
    for (BlockKind bk : {BlockKind::Edge, BlockKind::Star}) {
        for (size_t k = 0; k < filler.of(bk).size(); ++k) {
            ResolutionClass merged;
            merged.kind = full_kind(bk);
            append_mapped(merged, *partial.of(bk)[k], identity);
            append_mapped(merged, *filler.of(bk)[k], iurd.hole);
            out.classes.push_back(std::move(merged));
        }
    }
    for (const auto& c : iurd.classes)
        if (!is_partial(c.kind))
            out.classes.push_back(c);
    std::vector<TraceStep> trace{{"fill the hole of an IURD",
                                  "a URD on the hole completes each partial class",
                                  {to_string(spec_of(iurd)), to_string(spec_of(hole_design))}}};
    return finish(std::move(out), std::move(trace), "fill_hole");
}

Design iurd_16_4()
{
    // Group 0 of the catalog URGDD of type 4^4 (the x points) becomes the hole.
    const Design& d6 = lookup("d6_urgdd_4x4").design;
    return fill_groups_leaving_hole(d6, one_factorization(4), 0);
}

namespace {

void prepend(ConstructionResult& r, const std::vector<TraceStep>& earlier)
{
    r.trace.insert(r.trace.begin(), earlier.begin(), earlier.end());
}

ConstructionResult catalog_result(const std::string& key)
{
    const auto& e = lookup(key);
    return finish(e.design, {{"catalog design " + key, e.provenance, {to_string(e.spec)}}}, key);
}

} // namespace

ConstructionResult base_design(int v)
{
    switch (v) {
    case 4: {
        return finish(one_factorization(4), {{"1-factorization of K_4", "round robin", {}}}, "base_design");
    }
    case 8: {
        auto r = fill_groups(lookup("d1_urgdd_2x4").design, one_factorization(2));
        return r;
    }
    case 12:
        return catalog_result("d3_urd12");
    case 16: {
        auto r = fill_hole(iurd_16_4(), one_factorization(4));
        prepend(r, {{"IURD(16,4) from the URGDD of type 4^4", "URD(4;3,0) on three groups, the fourth left as hole",
                     {to_string(lookup("d6_urgdd_4x4").spec)}}});
        return r;
    }
    case 20: {
        auto inner = base_design(8);
        auto r = fill_hole(lookup("d11_iurd20").design, inner.design);
        prepend(r, inner.trace);
        return r;
    }
    case 24: {
        auto inner = base_design(8);
        auto r = fill_groups(lookup("d4_urgdd_8x3").design, inner.design);
        prepend(r, inner.trace);
        return r;
    }
    case 28:
        return fill_hole(lookup("d9_iurd28").design, one_factorization(4));
    default:
        throw NotFound("no base design for v = " + std::to_string(v));
    }
}

const std::set<int>& exception_orders()
{
    static const std::set<int> orders{40, 44, 52, 76, 92, 100, 280, 284, 328, 332, 428, 472, 476, 572};
    return orders;
}

std::string to_string(ConstructionStatus s)
{
    switch (s) {
    case ConstructionStatus::Built: return "Built";
    case ConstructionStatus::Unknown: return "Unknown";
    case ConstructionStatus::Nonexistent: return "Nonexistent";
    case ConstructionStatus::Unavailable: return "Unavailable";
    }
    return "?";
}

namespace {

ConstructionResult route(int v, const ConstructOptions& options)
{
    ObtainOptions oo;
    oo.search_budget = options.search_budget;
    oo.seed = options.seed;
    oo.store = options.store;
    auto get = [&](const DesignSpec& spec) { return obtain({spec}, oo); };

    if (v <= 28)
        return base_design(v);
    switch (v % 24) {
    case 0: {
        auto rgdd = get(DesignSpec::rgdd({{3, v / 6}}));
        return inflate_rgdd(rgdd, 2, {{0, 4}}, catalog_urgdd_supplier(2), one_factorization(6));
    }
    case 12: {
        int u = v / 12;
        auto urgdd = get(DesignSpec::urgdd({{12, u}}, {0, 2 * (v - 12) / 3}));
        auto filler = base_design(12);
        auto r = fill_groups(urgdd, filler.design);
        prepend(r, filler.trace);
        return r;
    }
    case 8: {
        auto rgdd = get(DesignSpec::rgdd({{4, v / 8}}));
        auto filler = base_design(8);
        auto r = inflate_rgdd(rgdd, 2, {{0, 4}}, catalog_urgdd_supplier(2), filler.design);
        prepend(r, filler.trace);
        return r;
    }
    case 16: {
        if (v == 88 || v == 424 || v == 568) {
            auto rgdd = get(DesignSpec::rgdd({{2, v / 4}}));
            return inflate_rgdd(rgdd, 2, {{0, 4}}, catalog_urgdd_supplier(2), one_factorization(4));
        }
        auto frame = get(DesignSpec::frame({{6, (v - 4) / 12}}));
        return frame_fill(frame, 2, lookup("d1_urgdd_2x4").design, iurd_16_4(), one_factorization(4));
    }
    case 4: {
        auto frame = get(DesignSpec::frame({{12, (v - 4) / 24}}));
        return frame_fill(frame, 2, lookup("d1_urgdd_2x4").design, lookup("d9_iurd28").design,
                          one_factorization(4));
    }
    case 20: {
        auto frame = get(DesignSpec::frame({{6, (v - 8) / 12}}));
        auto hole = base_design(8);
        auto r = frame_fill(frame, 2, lookup("d1_urgdd_2x4").design, lookup("d11_iurd20").design, hole.design);
        prepend(r, hole.trace);
        return r;
    }
    }
    throw ConstructionError("no route for v = " + std::to_string(v));
}

} // namespace

ConstructionOutcome construct_min(int v, const ConstructOptions& options)
{
    ConstructionOutcome out;
    if (v < 4 || v % 4 != 0) {
        out.status = ConstructionStatus::Nonexistent;
        out.reason = "v = " + std::to_string(v) + " is not 0 mod 4 (a 3-star class needs 4 | v)";
        return out;
    }
    if (exception_orders().count(v)) {
        out.status = ConstructionStatus::Unknown;
        out.reason = "v = " + std::to_string(v) + " is one of the orders left open";
        return out;
    }
    try {
        ConstructionResult r = route(v, options);
        Profile want = min_r(v);
        if (r.profile != want)
            throw ConstructionError("built profile " + to_string(r.profile) + " but min_r(" + std::to_string(v) +
                                    ") is " + to_string(want));
        out.status = ConstructionStatus::Built;
        out.result = std::move(r);
    } catch (const Unavailable& e) {
        out.status = ConstructionStatus::Unavailable;
        out.reason = e.what();
    } catch (const IngredientError& e) {
        out.status = ConstructionStatus::Unavailable;
        out.reason = e.what();
    }
    return out;
}

} // namespace urd
