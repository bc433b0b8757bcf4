#include <CLI11.hpp>
#include <iostream>

#include "kmfold/report.hpp"
#include "kmfold/verify.hpp"

using namespace kmfold;

namespace {

// 0 all match, 1 deviations, 2 usage error, 3 internal assertion failure
enum Exit { kOk = 0, kDeviation = 1, kUsage = 2, kInternal = 3 };

int cmd_tables(std::vector<int> ids, int bound, const std::string& format) {
    if (ids.empty()) ids = {1, 2, 3, 4, 5};
    auto tables = build_tables(ids, bound);
    std::cout << render(tables, format);
    if (format == "json") std::cout << "\n";
    for (const auto& t : tables)
        if (t.has_deviation()) return kDeviation;
    return kOk;
}

int cmd_verify(const std::string& scope, int bound) {
    auto checks = run_verify(scope, bound);
    std::cout << to_json(checks).dump(2) << "\n";
    for (const auto& c : checks)
        if (!c.passed) return kDeviation;
    return kOk;
}

int cmd_deviations(int bound) {
    json rows = json::array();
    for (const auto& t : build_tables({1, 2, 3, 4, 5}, bound))
        for (const auto& r : t.rows)
            if (r.status != "match") rows.push_back(to_json(r));
    bool dev = std::any_of(rows.begin(), rows.end(), [](const json& r) { return r["status"] == "deviation"; });
    json out = {{"schema", "kmfold/1"}, {"rank_bound", bound}, {"rows", rows}, {"notes", deviation_notes()}};
    std::cout << out.dump(2) << "\n";
    return dev ? kDeviation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of non-connected affine Kac-Moody groups"};
    app.require_subcommand(0, 1);

    std::string verify_flag;
    app.add_option("--verify", verify_flag, "Shorthand for the verify subcommand")
        ->check(CLI::IsMember(verify_scopes()));

    int bound = kDefaultRankBound;
    std::vector<int> ids;
    std::string format = "md";
    auto* tables = app.add_subcommand("tables", "Regenerate Tables 1-5 and compare with the embedded values");
    tables->add_option("--table,table", ids, "Table id, repeatable (default: all)")->check(CLI::Range(1, 5));
    tables->add_option("--rank-bound", bound, "Largest rank in the parametric sweep")->check(CLI::Range(kSweepMin, 64));
    tables->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md", "tsv"}));

    std::string scope = "all";
    auto* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("scope", scope, "all or a module name")->check(CLI::IsMember(verify_scopes()));
    verify->add_option("--rank-bound", bound, "Largest rank in the sweep")->check(CLI::Range(1, 64));

    std::string desc, auto_name = "id", what;
    auto* cse = app.add_subcommand("case", "Run one operation on one case");
    cse->add_option("--case,case", desc, "Case descriptor, e.g. D1[4]")->required();
    cse->add_option("--auto", auto_name, "Automorphism: id, gamma, gamma^l, sigma, sigma*gamma, rho");
    cse->add_option("--what", what, "Operation")->required()->check(CLI::IsMember(case_whats()));

    auto* dev = app.add_subcommand("deviations", "List non-matching rows and the annotation notes");
    dev->add_option("--rank-bound", bound, "Largest rank in the parametric sweep")->check(CLI::Range(kSweepMin, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*tables) return cmd_tables(ids, bound, format);
        if (*verify) return cmd_verify(scope, bound);
        if (!verify_flag.empty()) return cmd_verify(verify_flag, bound);
        if (*cse) {
            std::cout << case_record(desc, auto_name, what).dump(2) << "\n";
            return kOk;
        }
        if (*dev) return cmd_deviations(bound);
        std::cerr << app.help();
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
