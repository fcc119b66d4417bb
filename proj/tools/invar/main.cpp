#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "invar/group.hpp"
#include "invar_app/commands.hpp"

using namespace invar::app;

namespace {

void list_names(const RunConfig& cfg, Report& r) {
    r["command"] = "list";
    std::vector<std::string> groups, rings, descriptors, sequences;
    for (const auto& [k, v] : cfg.groups) groups.push_back(k);
    for (const auto& [k, v] : cfg.subrings) rings.push_back(k);
    for (const auto& [k, v] : cfg.descriptors) descriptors.push_back(k);
    for (const auto& [k, v] : cfg.sequences) sequences.push_back(k);
    r["groups"] = groups;
    r["rings"] = rings;
    r["descriptors"] = descriptors;
    r["sequences"] = sequences;
    r["permutation_groups"] = "S<n>, A<n>";
    r["verdict"] = "ok";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant rings of finite groups over F2, with the cohomology checks built on them"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", INVAR_VERSION);

    std::string format = "text";
    std::string cache_dir, config_file;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache", cache_dir, "Result cache directory (default: $INVAR_CACHE_DIR, unset disables)");
    app.add_option("--config", config_file, "JSON config whose entries replace the bundled ones");

    std::optional<int> bound;
    auto add_bound = [&](CLI::App* sub, const std::string& names = "--bound") {
        sub->add_option(names, bound, "Degree bound")->check(CLI::PositiveNumber);
    };

    std::string group, ring_a, ring_b, sequence, reading = "all", sub_name, sub_arg, ks, poly;
    std::optional<std::string> candidate;
    std::vector<std::string> primaries, variables;
    std::vector<int> only;
    bool no_timings = false;

    auto* inv = app.add_subcommand("invariants", "Dimension table, secondaries and series of a configured group");
    inv->add_option("group", group, "Group name")->required();
    add_bound(inv, "--degrees,--bound");
    inv->add_option("--primaries", primaries, "Primary invariants, comma separated")->delimiter(',');

    auto* inter = app.add_subcommand("intersect", "Per-degree intersection of two configured rings");
    inter->add_option("ring_a", ring_a)->required();
    inter->add_option("ring_b", ring_b)->required();
    inter->add_option("--candidate", candidate, "Ring expected to equal the intersection");
    add_bound(inter);

    auto* appx = app.add_subcommand("appendix", "Module reduction and ideal intersection inside F2[w, t, z]");
    add_bound(appx);

    auto* det = app.add_subcommand("detect", "Poincare series of a detection sequence");
    det->add_option("sequence", sequence)->required();
    add_bound(det);

    auto* einf = app.add_subcommand("einfty", "E-infinity readings against the detection series for 2A8");
    einf->add_option("--reading", reading)->check(CLI::IsMember({"all", "symmetric", "literal", "e4_removed"}));
    add_bound(einf);

    auto* rmap = app.add_subcommand("ringmap", "Relations of the S8 presentation under restriction to F2[w, t, z]");
    add_bound(rmap);

    auto* perm = app.add_subcommand("perm", "Elementary abelian 2-subgroups of S_n and A_n");
    perm->add_option("group", group, "S<n> or A<n>")->required();
    perm->add_option("subcommand", sub_name, "maximal-ea2 or cycle-type")->required();
    perm->add_option("arg", sub_arg, "Cycle type for cycle-type, e.g. 2^4");

    auto* sq = app.add_subcommand("steenrod", "Apply Sq^k (or a composite k1,k2,... right to left) to a polynomial");
    sq->add_option("k", ks)->required();
    sq->add_option("poly", poly, "Polynomial or symbol such as d4")->required();
    sq->add_option("--vars", variables, "Ring variables (default w,t,z with d2..d7 symbols)")->delimiter(',');

    auto* suite = app.add_subcommand("suite", "Run every acceptance check");
    suite->alias("paper-suite");
    suite->add_option("--only", only, "Criterion ids, comma separated")->delimiter(',');
    suite->add_flag("--no-timings", no_timings, "Leave out runtimes so output is byte-stable");

    auto* lst = app.add_subcommand("list", "Names available in the configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        RunConfig cfg = default_config();
        if (!config_file.empty()) cfg = load_config_file(config_file, cfg);
        if (cache_dir.empty())
            if (const char* env = std::getenv("INVAR_CACHE_DIR")) cache_dir = env;
        std::unique_ptr<Cache> cache;
        if (!cache_dir.empty()) cache = std::make_unique<Cache>(cache_dir);

        Outcome out;
        if (*inv) out = cmd_invariants(cfg, group, bound, primaries, cache.get());
        else if (*inter) out = cmd_intersect(cfg, ring_a, ring_b, bound, candidate);
        else if (*appx) out = cmd_appendix(cfg, bound);
        else if (*det) out = cmd_detect(cfg, sequence, bound);
        else if (*einf) out = cmd_einfty(cfg, reading, bound);
        else if (*rmap) out = cmd_ringmap(bound);
        else if (*perm) out = cmd_perm(group, sub_name, sub_arg);
        else if (*sq) out = cmd_steenrod(ks, poly, variables);
        else if (*suite) out = cmd_suite(cfg, only, !no_timings);
        else if (*lst) list_names(cfg, out.report);

        std::cout << (format == "json" ? out.report.dump(2) + "\n" : render_text(out.report));
        if (out.exit_code == kMismatch) {
            std::cerr << "invar: mismatch: " << out.report.value("failure", std::string("see report"));
            if (out.report.contains("first_failing_degree"))
                std::cerr << " (first failing degree " << out.report["first_failing_degree"].get<int>() << ")";
            std::cerr << "\n";
        }
        return out.exit_code;
    } catch (const ConfigError& e) {
        std::cerr << "invar: configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const invar::BudgetExceeded& e) {
        std::cerr << "invar: budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const std::exception& e) {
        std::cerr << "invar: error: " << e.what() << "\n";
        return kConfigError;
    }
}
