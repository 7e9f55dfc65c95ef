// Checks written directly from the definitions, sharing no code with the
// verifier. Used to cross-examine the library.
#ifndef URD_TESTS_ORACLES_HPP
#define URD_TESTS_ORACLES_HPP

#include "urd/design.hpp"

#include <random>
#include <set>
#include <vector>

namespace oracle {

// Pairs {a,b} covered by one block.
inline std::vector<std::pair<int, int>> pairs_of(const urd::Block& b)
{
    std::vector<std::pair<int, int>> out;
    auto add = [&](int x, int y) { out.emplace_back(std::min(x, y), std::max(x, y)); };
    if (b.kind == urd::BlockKind::Edge) {
        add(b.pts[0], b.pts[1]);
    } else if (b.kind == urd::BlockKind::Star) {
        for (int i = 1; i < 4; ++i)
            add(b.pts[0], b.pts[i]);
    } else {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                add(b.pts[i], b.pts[j]);
    }
    return out;
}

// Incidence-matrix recount: every pair of distinct points not inside a
// common group is covered exactly once, pairs inside a group never; every
// class covers each point outside `skip(class)` exactly once.
template <class SkipFn>
bool covers_exactly(const urd::Design& d, const std::vector<std::vector<int>>& groups, SkipFn skip)
{
    int v = d.v;
    std::vector<int> group_of(v, -1);
    for (size_t g = 0; g < groups.size(); ++g)
        for (int p : groups[g])
            group_of[p] = static_cast<int>(g);
    std::vector<std::vector<int>> m(v, std::vector<int>(v, 0));
    for (const auto& c : d.classes) {
        std::vector<int> hits(v, 0);
        for (const auto& b : c.blocks) {
            for (int p : b.points()) {
                if (p < 0 || p >= v)
                    return false;
                ++hits[p];
            }
            for (auto [a, bb] : pairs_of(b)) {
                ++m[a][bb];
                ++m[bb][a];
            }
        }
        std::set<int> skipped = skip(c);
        for (int p = 0; p < v; ++p)
            if (hits[p] != (skipped.count(p) ? 0 : 1))
                return false;
    }
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b) {
            if (a == b)
                continue;
            bool same = group_of[a] >= 0 && group_of[a] == group_of[b];
            if (m[a][b] != (same ? 0 : 1))
                return false;
        }
    return true;
}

inline bool is_urd(const urd::Design& d, int r, int s)
{
    int ones = 0, stars = 0;
    for (const auto& c : d.classes) {
        bool all_edges = true, all_stars = true;
        for (const auto& b : c.blocks) {
            all_edges &= b.kind == urd::BlockKind::Edge;
            all_stars &= b.kind == urd::BlockKind::Star;
        }
        if (all_edges)
            ++ones;
        else if (all_stars)
            ++stars;
        else
            return false;
    }
    return ones == r && stars == s &&
           covers_exactly(d, {}, [](const urd::ResolutionClass&) { return std::set<int>{}; });
}

inline std::vector<int> random_permutation(int v, std::mt19937_64& rng)
{
    std::vector<int> p(v);
    for (int i = 0; i < v; ++i)
        p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline long long choose2(long long n) { return n * (n - 1) / 2; }

} // namespace oracle

#endif // URD_TESTS_ORACLES_HPP
