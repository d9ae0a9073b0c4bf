#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact search for rank-3 hyperbolic generalized Cartan matrices with a "
                 "lattice Weyl vector over the (2,3,infinity) triangle lattice"};
    app.require_subcommand(1);

    gcm3::cli::Config cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format: text, csv or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--out", cfg.out, "write output to this path (directory for pipeline)");
    };

    auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--cross-bound", cfg.cross_bound, "bound on -(delta1,delta3)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--lambda-cap", cfg.lambda_cap, "largest admissible twist coefficient")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--coeff-bound", cfg.coeff_bound, "coordinate bound for root scans")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-sides", cfg.max_sides, "polygon side limit")
            ->check(CLI::PositiveNumber);
    };

    std::string delta2 = "all", diff_path, gram, triple, lambda, in_path;
    std::optional<long> cap;

    CLI::App* enumerate = app.add_subcommand("enumerate", "step 1: list chamber triples");
    add_common(enumerate);
    enumerate->add_option("--delta2", delta2, "middle wall: a, b, c or all");
    enumerate->add_option("--diff", diff_path, "compare against a list fixture (JSON)");
    add_bounds(enumerate);

    CLI::App* twists = app.add_subcommand("twists", "step 2: twist coefficients for a Gram triple");
    add_common(twists);
    twists->add_option("--gram", gram, "g12,g13,g23")->required();
    long cap_value = 0;
    CLI::Option* cap_opt =
        twists->add_option("--cap", cap_value, "bound for unconstrained coefficients");

    CLI::App* weyl = app.add_subcommand("weyl", "step 3: solve for the Weyl vector");
    add_common(weyl);
    weyl->add_option("--triple", triple, "three roots, e.g. c,a,b")->required();
    weyl->add_option("--lambda", lambda, "twist coefficients, e.g. 1,1,1")->required();

    CLI::App* extend = app.add_subcommand("extend", "step 4: extend a seed to a closed polygon");
    add_common(extend);
    extend->add_option("--triple", triple, "three roots, e.g. a,b,c");
    extend->add_option("--lambda", lambda, "twist coefficients, e.g. 1,1,1");
    extend->add_option("--in", in_path, "candidate JSON file");
    add_bounds(extend);

    CLI::App* pipeline = app.add_subcommand("pipeline", "run all four steps");
    add_common(pipeline);
    add_bounds(pipeline);

    CLI::App* render = app.add_subcommand("render", "Klein-disk SVG of a candidate");
    add_common(render);
    render->add_option("--in", in_path, "candidate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (cap_opt->count() > 0) cap = cap_value;

    try {
        if (enumerate->parsed()) return gcm3::cli::cmd_enumerate(cfg, delta2, diff_path);
        if (twists->parsed()) return gcm3::cli::cmd_twists(cfg, gram, cap);
        if (weyl->parsed()) return gcm3::cli::cmd_weyl(cfg, triple, lambda);
        if (extend->parsed()) return gcm3::cli::cmd_extend(cfg, triple, lambda, in_path);
        if (pipeline->parsed()) return gcm3::cli::cmd_pipeline(cfg);
        if (render->parsed()) return gcm3::cli::cmd_render(cfg, in_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
