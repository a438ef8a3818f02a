#include "su3coh/descriptor.hpp"
#include "su3coh/geomverify.hpp"
#include "su3coh/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace su3coh;

namespace {

struct CliConfig {
    std::string output_format = "markdown";
    unsigned long long seed = 42;
    long long samples = 1000;
    long long bound = 5;
    int grid = 720;
    double tol_mat = 1e-9;
    double tol_rank = 1e-7;

    Tolerances tolerances() const { return {tol_mat, tol_rank}; }
};

void add_common(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--output-format", cfg.output_format, "markdown, csv or json")
        ->check(CLI::IsMember({"markdown", "csv", "json"}));
    cmd->add_option("--tol-mat", cfg.tol_mat, "matrix identity tolerance")
        ->envname("SU3COH_TOL_MAT");
    cmd->add_option("--tol-rank", cfg.tol_rank, "singular value threshold")
        ->envname("SU3COH_TOL_RANK");
}

int run_tables(const CliConfig& cfg) {
    std::cout << render(emit_tables(cfg.bound), parse_output_format(cfg.output_format));
    return 0;
}

int run_classify(const CliConfig& cfg, const std::string& t1, const std::string& t2) {
    const TubeDescriptor a = parse_tube(t1);
    const TubeDescriptor b = parse_tube(t2);
    GluingCount gc;
    try {
        gc = count_diffeo_classes(a, b);
    } catch (const IncompatibleRegime& e) {
        std::cerr << "no gluing: " << e.what() << "\n";
        return 1;
    }
    if (cfg.output_format == "json") {
        nlohmann::json out = {{"tube1", to_text(a)},
                              {"tube2", to_text(b)},
                              {"count", gc.count},
                              {"reason", to_string(gc.reason)}};
        for (const auto& ex : named_example_registry())
            if ((ex.row == tube_label(a) && ex.col == tube_label(b)) ||
                (ex.row == tube_label(b) && ex.col == tube_label(a)))
                out["named_example"] = ex.name;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_text(a) << " + " << to_text(b) << ": " << gc.count
                  << " class(es), " << to_string(gc.reason) << "\n";
        for (const auto& ex : named_example_registry())
            if ((ex.row == tube_label(a) && ex.col == tube_label(b)) ||
                (ex.row == tube_label(b) && ex.col == tube_label(a)))
                std::cout << "realized by: " << ex.name << "\n";
    }
    return gc.count > 0 ? 0 : 1;
}

int run_verify(const CliConfig& cfg, const std::string& which) {
    const Tolerances tol = cfg.tolerances();
    std::vector<VerificationReport> reports;
    if (which != "torus-lemma") {
        const VerifyGroup group = which == "consim"      ? VerifyGroup::Consim
                                  : which == "grassmann" ? VerifyGroup::Grassmann
                                                         : VerifyGroup::All;
        reports = verify_suite(cfg.seed, cfg.samples, tol, group, cfg.grid);
    }
    if (which == "torus-lemma" || which == "all")
        for (auto& r : verify_torus_lemma(cfg.bound)) reports.push_back(std::move(r));
    std::cout << render_reports(reports, parse_output_format(cfg.output_format), cfg.seed);
    for (const auto& r : reports)
        if (!r.passed) return 1;
    return 0;
}

int run_stabilizer(const CliConfig& cfg, const std::vector<std::string>& tokens) {
    std::string text;
    for (const auto& t : tokens) {
        if (!text.empty()) text += " ";
        text += t;
    }
    const SliceRep slice = parse_slice(text);
    const PrincipalStabilizer ps = principal_stabilizer(slice);
    if (cfg.output_format == "json") {
        const auto t = ps.circle.triple();
        nlohmann::json out = {{"slice", to_text(slice)},
                              {"circle", {{"k", ps.circle.k}, {"l", ps.circle.l}}},
                              {"triple", {t[0], t[1], t[2]}},
                              {"class", to_string(ps.circle.cls)},
                              {"h", ps.finite_part}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_text(slice) << ": circle " << circle_summary(ps.circle)
                  << ", h = " << ps.finite_part << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohomogeneity-one SU(3) classification tables and numeric checks"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* tables = app.add_subcommand("tables", "emit the slice and gluing-class tables");
    tables->add_option("--bound", cfg.bound, "parameter cap for m, p, q, h")
        ->check(CLI::PositiveNumber);
    add_common(tables, cfg);

    auto* classify = app.add_subcommand("classify", "count gluings of two tubes");
    std::string t1, t2;
    classify->add_option("tube1", t1, "first tube descriptor")->required();
    classify->add_option("tube2", t2, "second tube descriptor")->required();
    add_common(classify, cfg);

    auto* verify = app.add_subcommand("verify", "run the numeric verification suites");
    std::string which;
    verify->add_option("which", which, "consim, grassmann, torus-lemma or all")
        ->required()
        ->check(CLI::IsMember({"consim", "grassmann", "torus-lemma", "all"}));
    verify->add_option("--seed", cfg.seed, "random seed")->envname("SU3COH_SEED");
    verify->add_option("--samples", cfg.samples, "sample count per randomized check")
        ->check(CLI::PositiveNumber);
    verify->add_option("--bound", cfg.bound, "weight bound for torus-lemma")
        ->check(CLI::PositiveNumber);
    verify->add_option("--grid", cfg.grid, "hypersurface scan resolution");
    add_common(verify, cfg);

    auto* stabilizer =
        app.add_subcommand("stabilizer", "principal stabilizer of a slice representation");
    std::vector<std::string> slice_tokens;
    stabilizer->add_option("slice", slice_tokens, "slice descriptor, e.g. 'U2 3' or 'T2 4 6'")
        ->required()
        ->expected(-1);
    add_common(stabilizer, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (tables->parsed()) return run_tables(cfg);
        if (classify->parsed()) return run_classify(cfg, t1, t2);
        if (verify->parsed()) return run_verify(cfg, which);
        if (stabilizer->parsed()) return run_stabilizer(cfg, slice_tokens);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid option: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
