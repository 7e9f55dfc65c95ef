#include "urd/ingredients.hpp"

#include "urd/galois.hpp"
#include "urd/search.hpp"
#include "urd/serialize.hpp"

#include <algorithm>
#include <cstdlib>

namespace urd {

namespace {

std::string join_reasons(const std::vector<std::string>& reasons)
{
    std::string out = "Unavailable:";
    for (const auto& r : reasons)
        out += " [" + r + "]";
    return out;
}

} // namespace

Unavailable::Unavailable(std::vector<std::string> reasons)
    : Error(join_reasons(reasons)), reasons_(std::move(reasons))
{
}

Design rtd_prime_power(int q)
{
    if (q < 4)
        throw IngredientError("q = " + std::to_string(q) +
                                  ": a resolvable TD(4,q) needs 3 MOLS of order q, so q >= 4",
                              {});
    if (!prime_power(q))
        throw IngredientError("q = " + std::to_string(q) + " is not a prime power", {});
    GaloisField field(q);
    Design d;
    d.kind = DesignKind::RGDD;
    d.v = 4 * q;
    d.groups = canonical_groups({{q, 4}});
    for (int m = 0; m < q; ++m) {
        ResolutionClass cls;
        cls.kind = ClassKind::BlockClass;
        for (int b = 0; b < q; ++b) {
            std::array<Point, 4> pts{};
            for (int i = 0; i < 4; ++i)
                pts[i] = i * q + field.add(b, field.mul(m, i));
            cls.blocks.push_back(Block::quad(pts[0], pts[1], pts[2], pts[3]));
        }
        d.classes.push_back(std::move(cls));
    }
    d = normalize(std::move(d));
    auto rep = verify(d, DesignSpec::rgdd({{q, 4}}));
    if (!rep.pass)
        throw IngredientError("field construction failed for q = " + std::to_string(q), rep);
    return d;
}

Design import_ingredient(const std::filesystem::path& file, const DesignSpec& spec)
{
    Design d;
    try {
        d = read_design(file);
    } catch (const DecodeError& e) {
        VerificationReport rep;
        rep.violations.push_back({ViolationCode::SpecMismatch, e.what()});
        throw IngredientError(file.string() + ": " + e.what(), rep);
    }
    auto rep = verify(d, spec);
    if (!rep.pass) {
        std::string first = rep.violations.empty() ? "" : to_string(rep.violations.front().code);
        throw IngredientError(file.string() + " is not a valid " + to_string(spec) + " (" + first + ")",
                              rep);
    }
    return d;
}

IngredientStore IngredientStore::from_env()
{
    if (const char* env = std::getenv("URD_STORE"); env && *env)
        return IngredientStore(env);
    return IngredientStore("store");
}

std::filesystem::path IngredientStore::path_for(const DesignSpec& spec) const
{
    std::string text = to_string(spec);
    auto colon = text.find(':');
    std::string params = text.substr(colon + 1);
    std::replace(params.begin(), params.end(), ':', '_');
    return root_ / to_string(spec.kind) / (params + ".json");
}

std::optional<Design> IngredientStore::load(const DesignSpec& spec) const
{
    auto path = path_for(spec);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        return std::nullopt;
    return import_ingredient(path, spec);
}

bool IngredientStore::save(const DesignSpec& spec, const Design& d) const
{
    try {
        write_design(path_for(spec), d);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

bool frame_open_in_literature(const DesignSpec& spec)
{
    if (spec.kind != DesignKind::Frame || spec.group_type.size() != 1 ||
        spec.group_type.front().first != 6)
        return false;
    int t = spec.group_type.front().second;
    return t == 7 || t == 23 || t == 27 || t == 35 || t == 39 || t == 47;
}

namespace {

std::optional<int> rtd_order(const DesignSpec& spec)
{
    if (spec.kind != DesignKind::RGDD || spec.group_type.size() != 1 ||
        spec.group_type.front().second != 4)
        return std::nullopt;
    return spec.group_type.front().first;
}

} // namespace

Design obtain(const IngredientRequest& request, const ObtainOptions& options)
{
    const DesignSpec& spec = request.spec;
    std::vector<std::string> reasons;
    if (frame_open_in_literature(spec))
        throw Unavailable({"a 4-frame of type " + to_string(spec.group_type) +
                           " is open in the literature"});

    for (Channel ch : request.channels) {
        switch (ch) {
        case Channel::Field: {
            auto q = rtd_order(spec);
            if (!q) {
                reasons.push_back("field: not a 4-RGDD of type q^4");
                break;
            }
            try {
                return rtd_prime_power(*q);
            } catch (const IngredientError& e) {
                reasons.push_back(std::string("field: ") + e.what());
            }
            break;
        }
        case Channel::Store: {
            if (!options.store) {
                reasons.push_back("store: none configured");
                break;
            }
            try {
                if (auto d = options.store->load(spec))
                    return *d;
                reasons.push_back("store: no " + options.store->path_for(spec).string());
            } catch (const IngredientError& e) {
                reasons.push_back(std::string("store: ") + e.what());
            }
            break;
        }
        case Channel::Search: {
            if (options.search_budget <= 0) {
                reasons.push_back("search: disabled (zero budget)");
                break;
            }
            SearchProblem problem;
            problem.spec = spec;
            problem.seed = options.seed;
            problem.time_budget = options.search_budget;
            problem.development = group_rotation(spec);
            SearchOutcome outcome;
            try {
                outcome = search(problem);
                if (problem.development && outcome.status == SearchOutcome::Status::NoneExists) {
                    // No invariant design: fall back to an unrestricted search.
                    problem.development.reset();
                    problem.time_budget = std::max(0.0, options.search_budget - outcome.stats.seconds);
                    outcome = search(problem);
                }
            } catch (const PreconditionError& e) {
                reasons.push_back(std::string("search: ") + e.what());
                break;
            }
            if (outcome.status == SearchOutcome::Status::Found) {
                if (options.store && options.save_found)
                    options.store->save(spec, *outcome.design);
                return *outcome.design;
            }
            reasons.push_back("search: " + to_string(outcome.status) +
                              (outcome.note.empty() ? "" : " (" + outcome.note + ")"));
            break;
        }
        }
    }
    throw Unavailable(reasons);
}

} // namespace urd
