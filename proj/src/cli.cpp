#include "urd/cli.hpp"

#include "urd/admissibility.hpp"
#include "urd/catalog.hpp"
#include "urd/constructions.hpp"
#include "urd/search.hpp"
#include "urd/serialize.hpp"
#include "urd/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace urd {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

json profile_json(const Profile& p) { return json::array({p.r, p.s}); }

json report_json(const VerificationReport& rep)
{
    json violations = json::array();
    for (const auto& v : rep.violations)
        violations.push_back({{"code", to_string(v.code)}, {"detail", v.detail}});
    const auto& c = rep.profile_found;
    return {{"pass", rep.pass},
            {"counts",
             {{"one_factor", c.one_factor},
              {"star", c.star},
              {"partial_one_factor", c.partial_one_factor},
              {"partial_star", c.partial_star},
              {"block", c.block},
              {"partial_block", c.partial_block}}},
            {"violations", violations}};
}

IngredientStore store_from(const std::string& flag)
{
    return flag.empty() ? IngredientStore::from_env() : IngredientStore(flag);
}

void write_or_print(const Design& d, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-")
        out << encode(d);
    else
        write_design(path, d);
}

Profile parse_profile(const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw SpecError("profile must be r,s: " + text);
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw SpecError("profile must be r,s: " + text);
    }
}

void print_trace(const std::vector<TraceStep>& trace, std::ostream& out)
{
    for (size_t i = 0; i < trace.size(); ++i) {
        out << "  " << i + 1 << ". " << trace[i].step << "\n     " << trace[i].citation << "\n";
        for (const auto& ing : trace[i].ingredients)
            out << "     uses " << ing << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Uniformly resolvable decompositions of K_v into 1-factors and 3-star factors", "urd"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string store_dir;
    app.add_option("--store", store_dir, "ingredient store directory (default $URD_STORE or ./store)");

    int v = 0;
    std::string out_file;
    bool trace = false, as_json = false;
    double budget = 60.0;
    std::uint64_t seed = 1;

    auto* construct = app.add_subcommand("construct", "build a URD(v) with the minimum number of 1-factors");
    construct->add_option("-v", v, "order")->required();
    construct->add_option("--out", out_file, "design file to write");
    construct->add_flag("--trace", trace, "print the construction steps");
    construct->add_option("--budget", budget, "ingredient search budget in seconds");
    construct->add_option("--seed", seed, "search seed");
    construct->add_flag("--json", as_json, "machine-readable output");

    std::string file, spec_text;
    auto* verify_cmd = app.add_subcommand("verify", "check a design file");
    verify_cmd->add_option("file", file, "design file")->required();
    verify_cmd->add_option("--spec", spec_text, "target, e.g. urd:8:1,4 (default: what the file declares)");
    verify_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* admissible = app.add_subcommand("admissible", "print J(v) and the minimum-r profile");
    admissible->add_option("-v", v, "order")->required();
    admissible->add_flag("--json", as_json, "machine-readable output");

    std::string action, key;
    auto* catalog = app.add_subcommand("catalog", "list or export the explicit small designs");
    catalog->add_option("action", action, "list | export")->required()->check(CLI::IsMember({"list", "export"}));
    catalog->add_option("key", key, "entry to export");
    catalog->add_option("--out", out_file, "file to write (default stdout)");

    std::string kind = "urd", type, profile_text, partial_text, mode_text = "first_solution";
    int hole = 0;
    bool cyclic = false;
    auto* search_cmd = app.add_subcommand("search", "search for a small design");
    search_cmd->add_option("--kind", kind, "urd | urgdd | iurd | rgdd | frame");
    search_cmd->add_option("--type", type, "group type, e.g. 2^4");
    search_cmd->add_option("-v", v, "order (urd, iurd)");
    search_cmd->add_option("--hole", hole, "hole size (iurd)");
    search_cmd->add_option("--profile", profile_text, "full-class profile r,s");
    search_cmd->add_option("--partial", partial_text, "partial-class profile r,s (iurd)");
    search_cmd->add_option("--seed", seed, "seed");
    search_cmd->add_option("--budget", budget, "time budget in seconds");
    search_cmd->add_option("--mode", mode_text, "first_solution | prove_none | count_all");
    search_cmd->add_flag("--cyclic", cyclic, "search designs invariant under a group rotation");
    search_cmd->add_option("--out", out_file, "file to write the design to");

    int v_max = 0;
    auto* table = app.add_subcommand("table", "minimum-r profile and construction status per order");
    table->add_option("--max", v_max, "largest order")->required();
    table->add_option("--budget", budget, "ingredient search budget per order (default 0: store only)");

    std::vector<std::string> argv_store{"urd"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());
    bool table_budget_given = false;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        table_budget_given = table->count("--budget") > 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*construct) {
            ConstructOptions opts;
            opts.search_budget = budget;
            opts.seed = seed;
            opts.store = store_from(store_dir);
            auto outcome = construct_min(v, opts);
            if (as_json) {
                json j{{"v", v}, {"status", to_string(outcome.status)}};
                if (outcome.result)
                    j["profile"] = profile_json(outcome.result->profile);
                else
                    j["reason"] = outcome.reason;
                out << j.dump() << "\n";
            } else {
                out << "v = " << v << ": " << to_string(outcome.status) << "\n";
                if (outcome.result)
                    out << "profile " << to_string(outcome.result->profile) << "\n";
                else
                    out << outcome.reason << "\n";
                if (trace && outcome.result)
                    print_trace(outcome.result->trace, out);
            }
            if (outcome.result && !out_file.empty())
                write_design(out_file, outcome.result->design);
            switch (outcome.status) {
            case ConstructionStatus::Built: return kOk;
            case ConstructionStatus::Nonexistent: return kFail;
            default: return kUnknown;
            }
        }

        if (*verify_cmd) {
            Design d;
            try {
                d = read_design(file);
            } catch (const DecodeError& e) {
                err << e.what() << "\n";
                return kFail;
            }
            DesignSpec spec = spec_text.empty() ? spec_of(d) : parse_spec(spec_text);
            auto rep = verify(d, spec);
            if (as_json) {
                json j = report_json(rep);
                j["spec"] = to_string(spec);
                out << j.dump() << "\n";
            } else {
                out << to_string(spec) << ": " << rep.summary() << "\n";
            }
            return rep.pass ? kOk : kFail;
        }

        if (*admissible) {
            ProfileSet js;
            try {
                js = j_set(v);
            } catch (const DivisibilityError& e) {
                out << e.what() << "\n";
                return kFail;
            }
            Profile m = min_r(v);
            if (as_json) {
                json arr = json::array();
                for (auto it = js.rbegin(); it != js.rend(); ++it)
                    arr.push_back(profile_json(*it));
                out << json{{"v", v}, {"j_set", arr}, {"min_r", profile_json(m)}}.dump() << "\n";
            } else {
                out << to_string(js) << "\n" << "min_r " << to_string(m) << "\n";
            }
            return kOk;
        }

        if (*catalog) {
            if (action == "list") {
                for (const auto& k : catalog_keys()) {
                    const auto& e = lookup(k);
                    out << k << "  " << to_string(e.spec) << "  " << e.provenance << "\n";
                }
                return kOk;
            }
            if (key.empty()) {
                err << "usage error: catalog export needs a key\n";
                return kUsage;
            }
            write_or_print(lookup(key).design, out_file, out);
            return kOk;
        }

        if (*search_cmd) {
            Profile full = profile_text.empty() ? Profile{} : parse_profile(profile_text);
            Profile partial = partial_text.empty() ? Profile{} : parse_profile(partial_text);
            DesignSpec spec;
            switch (parse_design_kind(kind)) {
            case DesignKind::URD: spec = DesignSpec::urd(v, full); break;
            case DesignKind::IURD: spec = DesignSpec::iurd(v, hole, partial, full); break;
            case DesignKind::URGDD: spec = DesignSpec::urgdd(parse_group_type(type), full); break;
            case DesignKind::RGDD: spec = DesignSpec::rgdd(parse_group_type(type)); break;
            case DesignKind::Frame: spec = DesignSpec::frame(parse_group_type(type)); break;
            }
            spec.check_consistent();

            SearchProblem problem;
            problem.spec = spec;
            problem.seed = seed;
            problem.time_budget = budget;
            problem.mode = parse_search_mode(mode_text);
            if (cyclic) {
                problem.development = group_rotation(spec);
                if (!problem.development) {
                    err << "usage error: no group rotation is available for " << to_string(spec) << "\n";
                    return kUsage;
                }
            }
            auto outcome = search(problem);
            out << to_string(spec) << ": " << to_string(outcome.status);
            if (problem.mode == SearchMode::CountAll)
                out << " count=" << outcome.count;
            out << " nodes=" << outcome.stats.nodes << "\n";
            if (!outcome.note.empty())
                out << outcome.note << "\n";
            if (outcome.design) {
                store_from(store_dir).save(spec, *outcome.design);
                if (!out_file.empty())
                    write_design(out_file, *outcome.design);
            }
            switch (outcome.status) {
            case SearchOutcome::Status::Found: return kOk;
            case SearchOutcome::Status::NoneExists: return kFail;
            case SearchOutcome::Status::Timeout: return kUnknown;
            }
        }

        if (*table) {
            ConstructOptions opts;
            opts.search_budget = table_budget_given ? budget : 0.0;
            opts.store = store_from(store_dir);
            out << "v\tr\ts\tstatus\n";
            for (int n = 4; n <= v_max; n += 4) {
                Profile m = min_r(n);
                auto outcome = construct_min(n, opts);
                out << n << "\t" << m.r << "\t" << m.s << "\t" << to_string(outcome.status) << "\n";
            }
            return kOk;
        }
    } catch (const SpecError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const NotFound& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}

} // namespace urd
