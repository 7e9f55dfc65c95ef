#include "urd/search.hpp"

#include "urd/error.hpp"
#include "urd/verifier.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>

namespace urd {

std::string to_string(SearchMode m)
{
    switch (m) {
    case SearchMode::FirstSolution: return "first_solution";
    case SearchMode::ProveNone: return "prove_none";
    case SearchMode::CountAll: return "count_all";
    }
    return "?";
}

SearchMode parse_search_mode(const std::string& text)
{
    if (text == "first_solution" || text == "first") return SearchMode::FirstSolution;
    if (text == "prove_none" || text == "none") return SearchMode::ProveNone;
    if (text == "count_all" || text == "count") return SearchMode::CountAll;
    throw SpecError("unknown search mode '" + text + "'");
}

std::string to_string(SearchOutcome::Status s)
{
    switch (s) {
    case SearchOutcome::Status::Found: return "Found";
    case SearchOutcome::Status::NoneExists: return "NoneExists";
    case SearchOutcome::Status::Timeout: return "Timeout";
    }
    return "?";
}

namespace {

using Mask = std::uint64_t;
constexpr int kMaxPoints = 64;
constexpr int kCountAllMaxPoints = 12;

Mask bit(int p) { return Mask{1} << p; }

struct Slot {
    ClassKind kind = ClassKind::OneFactor;
    Mask cover = 0;
    Missing missing;
    bool ordered = false;   // anchor block must exceed the previous slot's
    bool fixed = false;     // pre-filled by symmetry breaking
};

struct Layout {
    int v = 0;
    std::vector<std::vector<Point>> groups;
    std::vector<Point> hole;
    std::vector<int> group_of;
    Mask hole_mask = 0;
    Mask all = 0;
};

Layout layout_of(const DesignSpec& spec)
{
    Layout l;
    l.v = spec.v;
    if (spec.kind == DesignKind::URGDD || spec.kind == DesignKind::RGDD ||
        spec.kind == DesignKind::Frame)
        l.groups = canonical_groups(spec.group_type);
    if (spec.kind == DesignKind::IURD)
        l.hole = canonical_hole(spec);
    l.group_of.assign(spec.v, -1);
    for (std::size_t g = 0; g < l.groups.size(); ++g)
        for (Point p : l.groups[g])
            l.group_of[p] = static_cast<int>(g);
    for (Point p : l.hole)
        l.hole_mask |= bit(p);
    l.all = spec.v >= 64 ? ~Mask{0} : bit(spec.v) - 1;
    return l;
}

bool pair_allowed(const Layout& l, Point u, Point w)
{
    if (l.group_of[u] >= 0 && l.group_of[u] == l.group_of[w])
        return false;
    return !((l.hole_mask & bit(u)) && (l.hole_mask & bit(w)));
}

Mask mask_of(const std::vector<Point>& pts)
{
    Mask m = 0;
    for (Point p : pts)
        m |= bit(p);
    return m;
}

// Slots in search order: star classes, then 4-block classes, then 1-factors.
std::vector<Slot> slots_for(const DesignSpec& spec, const Layout& l)
{
    std::vector<Slot> slots;
    auto push = [&](ClassKind kind, Mask cover, Missing missing, int n) {
        for (int i = 0; i < n; ++i)
            slots.push_back({kind, cover, missing, false, false});
    };
    const Mask nonhole = l.all & ~l.hole_mask;
    switch (spec.kind) {
    case DesignKind::URD:
    case DesignKind::URGDD:
        push(ClassKind::StarClass, l.all, Missing::none(), spec.profile.s);
        push(ClassKind::OneFactor, l.all, Missing::none(), spec.profile.r);
        break;
    case DesignKind::IURD:
        push(ClassKind::StarClass, l.all, Missing::none(), spec.profile.s);
        push(ClassKind::PartialStarClass, nonhole, Missing::hole(), spec.partial_profile.s);
        push(ClassKind::OneFactor, l.all, Missing::none(), spec.profile.r);
        push(ClassKind::PartialOneFactor, nonhole, Missing::hole(), spec.partial_profile.r);
        break;
    case DesignKind::RGDD: {
        int g = spec.group_type.front().first;
        int u = spec.group_type.front().second;
        push(ClassKind::BlockClass, l.all, Missing::none(), g * (u - 1) / 3);
        break;
    }
    case DesignKind::Frame:
        for (std::size_t i = 0; i < l.groups.size(); ++i)
            push(ClassKind::PartialBlockClass, l.all & ~mask_of(l.groups[i]),
                 Missing::of_group(static_cast<int>(i)),
                 static_cast<int>(l.groups[i].size()) / 3);
        break;
    }
    return slots;
}

int class_edges(ClassKind k, int n)
{
    switch (block_kind_of(k)) {
    case BlockKind::Edge: return n / 2;
    case BlockKind::Star: return 3 * n / 4;
    case BlockKind::Quad: return 3 * n / 2;
    }
    return 0;
}

bool class_size_ok(ClassKind k, int n)
{
    return block_kind_of(k) == BlockKind::Edge ? n % 2 == 0 : n % 4 == 0;
}

} // namespace

bool arithmetically_feasible(const DesignSpec& spec, std::string* why)
{
    auto fail = [&](std::string reason) {
        if (why)
            *why = std::move(reason);
        return false;
    };
    try {
        spec.check_consistent();
    } catch (const SpecError& e) {
        return fail(e.what());
    }
    if (spec.kind == DesignKind::RGDD || spec.kind == DesignKind::Frame) {
        if (spec.group_type.size() != 1)
            return fail("4-RGDDs and 4-frames need a uniform group type");
        int g = spec.group_type.front().first;
        int u = spec.group_type.front().second;
        if (spec.kind == DesignKind::RGDD && (g * (u - 1)) % 3 != 0)
            return fail("g(u-1) not divisible by 3");
        if (spec.kind == DesignKind::Frame && g % 3 != 0)
            return fail("frame group size not divisible by 3");
    }
    if (spec.v > 4096)
        return fail("too many points");
    Layout l;
    l.v = spec.v;
    if (spec.kind == DesignKind::URGDD || spec.kind == DesignKind::RGDD ||
        spec.kind == DesignKind::Frame)
        l.groups = canonical_groups(spec.group_type);
    l.hole = canonical_hole(spec);

    long long allowed = 1LL * spec.v * (spec.v - 1) / 2;
    for (const auto& g : l.groups)
        allowed -= 1LL * g.size() * (g.size() - 1) / 2;
    allowed -= 1LL * spec.hole_size * (spec.hole_size - 1) / 2;

    auto cover_size = [&](ClassKind k, int missing_group) {
        if (!is_partial(k))
            return spec.v;
        if (k == ClassKind::PartialBlockClass)
            return spec.v - static_cast<int>(l.groups[missing_group].size());
        return spec.v - spec.hole_size;
    };
    long long covered = 0;
    auto account = [&](ClassKind k, int count, int missing_group) -> bool {
        if (count == 0)
            return true;
        int n = cover_size(k, missing_group);
        if (!class_size_ok(k, n))
            return false;
        covered += 1LL * count * class_edges(k, n);
        return true;
    };
    bool ok = true;
    switch (spec.kind) {
    case DesignKind::URD:
    case DesignKind::URGDD:
        ok = account(ClassKind::StarClass, spec.profile.s, -1) &&
             account(ClassKind::OneFactor, spec.profile.r, -1);
        break;
    case DesignKind::IURD:
        ok = account(ClassKind::StarClass, spec.profile.s, -1) &&
             account(ClassKind::OneFactor, spec.profile.r, -1) &&
             account(ClassKind::PartialStarClass, spec.partial_profile.s, -1) &&
             account(ClassKind::PartialOneFactor, spec.partial_profile.r, -1);
        break;
    case DesignKind::RGDD: {
        int g = spec.group_type.front().first;
        int u = spec.group_type.front().second;
        ok = account(ClassKind::BlockClass, g * (u - 1) / 3, -1);
        break;
    }
    case DesignKind::Frame:
        for (std::size_t i = 0; i < l.groups.size() && ok; ++i)
            ok = account(ClassKind::PartialBlockClass, static_cast<int>(l.groups[i].size()) / 3,
                         static_cast<int>(i));
        break;
    }
    if (!ok)
        return fail("a class size is incompatible with its block size");
    if (covered != allowed)
        return fail("classes cover " + std::to_string(covered) + " edges but " +
                    std::to_string(allowed) + " must be covered");
    return true;
}

std::optional<CyclicDevelopment> group_rotation(const DesignSpec& spec)
{
    if (spec.group_type.size() != 1)
        return std::nullopt;
    int g = spec.group_type.front().first;
    int u = spec.group_type.front().second;
    int rotated = 0;
    if (spec.kind == DesignKind::Frame && u % 2 == 1 && g % 3 == 0)
        rotated = u;
    else if (spec.kind == DesignKind::RGDD && (u - 1) % 2 == 1 && g % 3 == 0 && u > 2)
        rotated = u - 1;
    else
        return std::nullopt;
    CyclicDevelopment dev;
    dev.order = rotated;
    dev.image.resize(spec.v);
    for (int k = 0; k < u; ++k)
        for (int x = 0; x < g; ++x)
            dev.image[g * k + x] = k < rotated ? g * ((k + 1) % rotated) + x : g * k + x;
    return dev;
}

namespace {

struct Model {
    DesignSpec spec;
    Layout layout;
    std::vector<Slot> slots;
    std::vector<int> key_of; // v*v, -1 when the pair is never covered
    std::vector<std::vector<std::pair<Point, Point>>> key_edges;
    std::optional<CyclicDevelopment> dev;
};

Model build_model(const SearchProblem& problem)
{
    Model m;
    m.spec = problem.spec;
    m.layout = layout_of(problem.spec);
    m.slots = slots_for(problem.spec, m.layout);
    m.dev = problem.development;
    const int v = m.layout.v;
    m.key_of.assign(static_cast<std::size_t>(v) * v, -1);

    if (!m.dev) {
        for (Point u = 0; u < v; ++u)
            for (Point w = u + 1; w < v; ++w)
                if (pair_allowed(m.layout, u, w)) {
                    int k = static_cast<int>(m.key_edges.size());
                    m.key_edges.push_back({{u, w}});
                    m.key_of[u * v + w] = m.key_of[w * v + u] = k;
                }
        return m;
    }

    const auto& dev = *m.dev;
    if (static_cast<int>(dev.image.size()) != v || dev.order < 1)
        throw PreconditionError("development permutation has the wrong size");
    for (Point u = 0; u < v; ++u) {
        for (Point w = u + 1; w < v; ++w) {
            if (!pair_allowed(m.layout, u, w) || m.key_of[u * v + w] >= 0)
                continue;
            int k = static_cast<int>(m.key_edges.size());
            m.key_edges.emplace_back();
            Point a = u;
            Point b = w;
            for (int j = 0; j < dev.order; ++j) {
                auto e = std::minmax(a, b);
                if (m.key_of[e.first * v + e.second] >= 0)
                    throw PreconditionError("development has a short pair orbit");
                if (!pair_allowed(m.layout, e.first, e.second))
                    throw PreconditionError("development does not preserve the groups");
                m.key_of[e.first * v + e.second] = m.key_of[e.second * v + e.first] = k;
                m.key_edges.back().push_back(e);
                a = dev.image[a];
                b = dev.image[b];
            }
            if (std::min(a, b) != u || std::max(a, b) != w)
                throw PreconditionError("development permutation order mismatch");
        }
    }
    // Keep only base slots.
    std::vector<Slot> base;
    if (m.spec.kind == DesignKind::Frame) {
        for (const auto& s : m.slots)
            if (s.missing.group == 0)
                base.push_back(s);
        if (static_cast<int>(m.layout.groups.size()) != dev.order)
            throw PreconditionError("frame development must rotate every group");
    } else {
        std::size_t i = 0;
        while (i < m.slots.size()) {
            std::size_t j = i;
            while (j < m.slots.size() && m.slots[j].kind == m.slots[i].kind &&
                   m.slots[j].cover == m.slots[i].cover)
                ++j;
            int n = static_cast<int>(j - i);
            if (n % dev.order != 0)
                throw PreconditionError("class counts not divisible by the development order");
            for (int c = 0; c < n / dev.order; ++c)
                base.push_back(m.slots[i]);
            i = j;
        }
    }
    m.slots = std::move(base);
    return m;
}

class Engine {
public:
    Engine(const Model& m, const SearchProblem& p)
        : m_(m),
          mode_(p.mode),
          rng_(p.seed),
          randomize_(p.mode == SearchMode::FirstSolution),
          developed_(m.dev.has_value())
    {
        start_ = std::chrono::steady_clock::now();
        deadline_ = start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                 std::chrono::duration<double>(std::max(0.0, p.time_budget)));
        slots_ = m.slots;
        // Mark same-kind, same-cover runs as ordered (class order is arbitrary).
        for (std::size_t i = 1; i < slots_.size(); ++i)
            slots_[i].ordered = slots_[i].kind == slots_[i - 1].kind &&
                                slots_[i].cover == slots_[i - 1].cover &&
                                slots_[i].missing == slots_[i - 1].missing;
        fix_first_ = p.symmetry_breaking && !developed_ && m.spec.kind == DesignKind::URD &&
                     !slots_.empty();
        if (fix_first_) {
            slots_[0].fixed = true;
            if (slots_.size() > 1)
                slots_[1].ordered = false;
        }
    }

    SearchOutcome run()
    {
        SearchOutcome out;
        const bool restarts = mode_ == SearchMode::FirstSolution;
        for (std::uint64_t attempt = 0;; ++attempt) {
            node_limit_ = restarts ? kRestartBase * luby(attempt + 1) : 0;
            nodes_this_run_ = 0;
            limit_hit_ = false;
            reset();
            Flow f = Flow::Continue;
            if (initial_ok_)
                f = begin();
            (void)f;
            if (found_design_ && mode_ != SearchMode::CountAll)
                break;
            if (timed_out_ || !limit_hit_)
                break;
            ++stats_.restarts;
        }
        stats_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        out.stats = stats_;
        out.count = count_;
        if (found_design_)
            out.design = found_design_;
        if (timed_out_) {
            out.status = SearchOutcome::Status::Timeout;
            out.note = "time budget exhausted";
            if (mode_ == SearchMode::CountAll)
                out.note += " (partial count)";
        } else if (found_design_) {
            out.status = SearchOutcome::Status::Found;
        } else {
            out.status = SearchOutcome::Status::NoneExists;
            out.note = "search space exhausted";
        }
        return out;
    }

private:
    enum class Flow { Continue, Stop };
    static constexpr std::uint64_t kRestartBase = 20000;

    static std::uint64_t luby(std::uint64_t i)
    {
        for (std::uint64_t k = 1;; ++k) {
            std::uint64_t full = (std::uint64_t{1} << k) - 1;
            if (i == full)
                return std::uint64_t{1} << (k - 1);
            if (i < full)
                return luby(i - (full >> 1));
        }
    }

    void reset()
    {
        const int v = m_.layout.v;
        avail_.fill(0);
        for (Point u = 0; u < v; ++u)
            for (Point w = 0; w < v; ++w)
                if (u != w && m_.key_of[u * v + w] >= 0)
                    avail_[u] |= bit(w);
        need_e_.fill(0);
        need_s_.fill(0);
        need_q_.fill(0);
        for (const auto& s : slots_)
            for (Point p = 0; p < v; ++p)
                if (s.cover & bit(p))
                    need_of(s.kind)[p]++;
        blocks_.assign(slots_.size(), {});
        anchor_.assign(slots_.size(), Block{});
        initial_ok_ = true;
        if (!developed_)
            for (Point p = 0; p < v; ++p)
                initial_ok_ = initial_ok_ && degree_ok(p);
        if (fix_first_ && initial_ok_) {
            const Slot& s = slots_[0];
            std::vector<Point> pts;
            for (Point p = 0; p < v; ++p)
                if (s.cover & bit(p))
                    pts.push_back(p);
            const bool star = block_kind_of(s.kind) == BlockKind::Star;
            const std::size_t step = star ? 4 : 2;
            for (std::size_t i = 0; i + step <= pts.size(); i += step) {
                Block b = star ? Block::star(pts[i], pts[i + 1], pts[i + 2], pts[i + 3])
                               : Block::edge(pts[i], pts[i + 1]);
                if (!apply(b)) {
                    initial_ok_ = false;
                    break;
                }
                cover_points(b, s.kind);
                blocks_[0].push_back(b);
            }
            for (Point p = 0; p < v && initial_ok_; ++p)
                initial_ok_ = degree_ok(p);
        }
    }

    Flow begin()
    {
        if (slots_.empty())
            return on_solution();
        if (fix_first_)
            return dfs(0, 0);
        return dfs(0, slots_[0].cover);
    }

    std::array<std::int16_t, kMaxPoints>& need_of(ClassKind k)
    {
        switch (block_kind_of(k)) {
        case BlockKind::Edge: return need_e_;
        case BlockKind::Star: return need_s_;
        case BlockKind::Quad: return need_q_;
        }
        return need_e_;
    }

    // Remaining available degree must be exactly what the remaining classes
    // through p will use: 1 per 1-factor, 3 per 4-block class, 1 or 3 per
    // star class.
    bool degree_ok(Point p) const
    {
        int d = std::popcount(avail_[p]) - need_e_[p] - 3 * need_q_[p] - need_s_[p];
        return d >= 0 && d % 2 == 0 && d <= 2 * need_s_[p];
    }

    bool apply(const Block& b)
    {
        for (auto [u, w] : b.edges()) {
            if (!(avail_[u] & bit(w)))
                return false;
            int k = m_.key_of[u * m_.layout.v + w];
            for (auto [a, c] : m_.key_edges[k]) {
                avail_[a] &= ~bit(c);
                avail_[c] &= ~bit(a);
            }
        }
        return true;
    }

    void cover_points(const Block& b, ClassKind k)
    {
        auto& need = need_of(k);
        for (Point p : b.points())
            --need[p];
    }

    Flow dfs(std::size_t si, Mask unc)
    {
        if (unc == 0) {
            ++si;
            if (si == slots_.size())
                return on_solution();
            unc = slots_[si].cover;
        }
        ++stats_.nodes;
        ++nodes_this_run_;
        if ((stats_.nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
            timed_out_ = true;
            return Flow::Stop;
        }
        if (node_limit_ && nodes_this_run_ > node_limit_) {
            limit_hit_ = true;
            return Flow::Stop;
        }

        const Slot& slot = slots_[si];
        const BlockKind bk = block_kind_of(slot.kind);
        const Point anchor = std::countr_zero(slot.cover);
        const bool anchor_step = (unc & bit(anchor)) != 0;

        Point p = anchor;
        if (!anchor_step) {
            int best = 1 << 30;
            for (Mask rest = unc; rest; rest &= rest - 1) {
                Point x = std::countr_zero(rest);
                int c = std::popcount(avail_[x] & unc);
                if (c < best) {
                    best = c;
                    p = x;
                }
            }
            if (best == 0)
                return Flow::Continue;
        }

        std::vector<Block> cands = candidates(p, unc, bk);
        if (anchor_step && slot.ordered) {
            const Block& prev = anchor_[si - 1];
            std::erase_if(cands, [&](const Block& b) { return !(prev < b); });
        }
        if (randomize_)
            std::shuffle(cands.begin(), cands.end(), rng_);

        for (const Block& b : cands) {
            const auto saved_avail = avail_;
            if (!apply(b)) {
                avail_ = saved_avail;
                continue;
            }
            cover_points(b, slot.kind);
            bool ok = true;
            if (!developed_)
                for (Point x : b.points())
                    ok = ok && degree_ok(x);
            Flow f = Flow::Continue;
            if (ok) {
                blocks_[si].push_back(b);
                if (anchor_step)
                    anchor_[si] = b;
                Mask used = 0;
                for (Point x : b.points())
                    used |= bit(x);
                f = dfs(si, unc & ~used);
                blocks_[si].pop_back();
            }
            auto& need = need_of(slot.kind);
            for (Point x : b.points())
                ++need[x];
            avail_ = saved_avail;
            if (f == Flow::Stop)
                return Flow::Stop;
        }
        return Flow::Continue;
    }

    std::vector<Block> candidates(Point p, Mask unc, BlockKind bk) const
    {
        std::vector<Block> out;
        const Mask n = avail_[p] & unc;
        auto points_of = [](Mask m) {
            std::vector<Point> pts;
            for (; m; m &= m - 1)
                pts.push_back(std::countr_zero(m));
            return pts;
        };
        switch (bk) {
        case BlockKind::Edge:
            for (Point q : points_of(n))
                out.push_back(Block::edge(std::min(p, q), std::max(p, q)));
            break;
        case BlockKind::Star: {
            auto nb = points_of(n);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    for (std::size_t k = j + 1; k < nb.size(); ++k)
                        out.push_back(Block::star(p, nb[i], nb[j], nb[k]));
            for (Point c : nb) {
                auto others = points_of(avail_[c] & unc & ~bit(p));
                for (std::size_t i = 0; i < others.size(); ++i)
                    for (std::size_t j = i + 1; j < others.size(); ++j) {
                        std::array<Point, 3> leaves{p, others[i], others[j]};
                        std::sort(leaves.begin(), leaves.end());
                        out.push_back(Block::star(c, leaves[0], leaves[1], leaves[2]));
                    }
            }
            break;
        }
        case BlockKind::Quad:
            for (Point a : points_of(n)) {
                Mask na = n & avail_[a] & ~((bit(a) << 1) - 1);
                for (Point b : points_of(na)) {
                    Mask nb = na & avail_[b] & ~((bit(b) << 1) - 1);
                    for (Point c : points_of(nb)) {
                        std::array<Point, 4> q{p, a, b, c};
                        std::sort(q.begin(), q.end());
                        out.push_back(Block::quad(q[0], q[1], q[2], q[3]));
                    }
                }
            }
            break;
        }
        return out;
    }

    Flow on_solution()
    {
        ++count_;
        if (!found_design_)
            found_design_ = assemble();
        return mode_ == SearchMode::CountAll ? Flow::Continue : Flow::Stop;
    }

    Design assemble() const
    {
        Design d;
        d.kind = m_.spec.kind;
        d.v = m_.layout.v;
        d.groups = m_.layout.groups;
        d.hole = m_.layout.hole;
        const int order = developed_ ? m_.dev->order : 1;
        for (std::size_t si = 0; si < slots_.size(); ++si) {
            std::vector<Block> blocks = blocks_[si];
            Missing missing = slots_[si].missing;
            for (int j = 0; j < order; ++j) {
                d.classes.push_back({slots_[si].kind, missing, blocks});
                if (!developed_)
                    break;
                for (auto& b : blocks)
                    for (int i = 0; i < b.size(); ++i)
                        b.pts[i] = m_.dev->image[b.pts[i]];
                if (missing.tag == Missing::Tag::Group) {
                    Point rep = m_.layout.groups[missing.group].front();
                    missing.group = m_.layout.group_of[m_.dev->image[rep]];
                }
            }
        }
        return normalize(std::move(d));
    }

    const Model& m_;
    SearchMode mode_;
    std::mt19937_64 rng_;
    bool randomize_;
    bool developed_;
    bool fix_first_ = false;
    std::vector<Slot> slots_;

    std::array<Mask, kMaxPoints> avail_{};
    std::array<std::int16_t, kMaxPoints> need_e_{};
    std::array<std::int16_t, kMaxPoints> need_s_{};
    std::array<std::int16_t, kMaxPoints> need_q_{};
    std::vector<std::vector<Block>> blocks_;
    std::vector<Block> anchor_;
    bool initial_ok_ = true;

    std::chrono::steady_clock::time_point start_;
    std::chrono::steady_clock::time_point deadline_;
    std::uint64_t node_limit_ = 0;
    std::uint64_t nodes_this_run_ = 0;
    bool limit_hit_ = false;
    bool timed_out_ = false;
    SearchStats stats_;
    std::uint64_t count_ = 0;
    std::optional<Design> found_design_;
};

} // namespace

SearchOutcome search(const SearchProblem& problem)
{
    if (problem.mode == SearchMode::CountAll && problem.spec.v > kCountAllMaxPoints)
        throw PreconditionError("count_all is limited to v <= " + std::to_string(kCountAllMaxPoints));
    std::string why;
    if (!arithmetically_feasible(problem.spec, &why)) {
        SearchOutcome out;
        out.status = SearchOutcome::Status::NoneExists;
        out.note = "DivisibilityError: " + why;
        return out;
    }
    if (problem.spec.v > kMaxPoints) {
        SearchOutcome out;
        out.status = SearchOutcome::Status::Timeout;
        out.note = "more than " + std::to_string(kMaxPoints) + " points is beyond the search engine";
        return out;
    }
    Model model = build_model(problem);
    Engine engine(model, problem);
    SearchOutcome out = engine.run();
    if (out.design) {
        auto rep = verify(*out.design, problem.spec);
        if (!rep.pass)
            throw OracleError("search produced a design that fails verification:\n" + rep.summary());
    }
    return out;
}

CrossCheckReport oracle_cross_check(int v_max, double budget_per_case)
{
    if (v_max > kCountAllMaxPoints)
        throw PreconditionError("oracle_cross_check is limited to v_max <= 12");
    CrossCheckReport report;
    std::string contradictions;
    for (int v = 4; v <= v_max; ++v) {
        std::set<Profile> profiles;
        for (int s = 0; 3 * s <= 2 * (v - 1); ++s)
            if ((2 * (v - 1) - 3 * s) % 2 == 0)
                profiles.insert({(2 * (v - 1) - 3 * s) / 2, s});
        for (int s = 1; 3 * s <= 2 * (v - 1) + 3; ++s)
            profiles.insert({0, s});
        for (const auto& prof : profiles) {
            CrossCheckCase c;
            c.v = v;
            c.profile = prof;
            c.verdict = validate_profile(v, prof.r, prof.s);
            SearchProblem problem;
            problem.spec = DesignSpec::urd(v, prof);
            problem.mode = c.verdict.admissible() ? SearchMode::FirstSolution : SearchMode::ProveNone;
            problem.time_budget = budget_per_case;
            problem.seed = static_cast<std::uint64_t>(v * 1000 + prof.r);
            auto outcome = search(problem);
            c.status = outcome.status;
            if (c.status == SearchOutcome::Status::Timeout)
                ++report.undecided;
            if (c.status == SearchOutcome::Status::Found && !c.verdict.admissible()) {
                c.contradiction = true;
                ++report.contradictions;
                contradictions += " URD(" + std::to_string(v) + ";" + std::to_string(prof.r) + "," +
                                  std::to_string(prof.s) + ")";
            }
            report.cases.push_back(c);
        }
    }
    if (report.contradictions > 0)
        throw OracleError("search found designs the necessary conditions exclude:" + contradictions);
    return report;
}

} // namespace urd
