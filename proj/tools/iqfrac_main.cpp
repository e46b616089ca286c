#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "iqfrac/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"reduced and coprime fractions in imaginary quadratic fields"};
    app.require_subcommand(1);

    iqfrac::RunConfig cfg;
    std::string format;
    const std::map<std::string, iqfrac::OutputFormat> format_names{
        {"csv", iqfrac::OutputFormat::csv},
        {"json", iqfrac::OutputFormat::json},
        {"svg", iqfrac::OutputFormat::svg}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-d", cfg.d, "field selector: squarefree negative N of Q(sqrt(N))");
        sub->add_option("--norm-max", cfg.norm_max, "norm cutoff X");
        sub->add_option("--s", cfg.s, "real point of the Dirichlet series (s > 2)");
        sub->add_option("--x-ideal", cfg.x_ideal, "ideal-norm truncation for L-quotients");
        sub->add_option("--p-prime", cfg.p_prime,
                        "prime cutoff for Euler products; the prime p for 'baseline'");
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
        sub->add_option("--format", format, "csv|json|svg")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
    };

    CLI::App* classgroup = app.add_subcommand("classgroup", "reduced forms and class number");
    CLI::App* reps = app.add_subcommand("reps", "minimal-norm inseverable representatives");
    CLI::App* etacmd = app.add_subcommand("eta", "per-denominator counts with the residue oracle");
    CLI::App* density = app.add_subcommand("density", "cumulative phi/eta table and ratios");
    CLI::App* bounds = app.add_subcommand("bounds", "density value and bounds");
    CLI::App* lcheck = app.add_subcommand("lcheck", "truncated L-function quotient check");
    CLI::App* baseline = app.add_subcommand("baseline", "rational denominators divisible by p");
    CLI::App* cmcheck = app.add_subcommand("cmcheck", "form/ideal class correspondence of a point");
    for (CLI::App* sub : {classgroup, reps, etacmd, density, bounds, lcheck, baseline, cmcheck})
        add_common(sub);
    cmcheck->add_option("tau", cfg.tau, "point as (a_x,a_y)/(b_x,b_y)")->required();

    CLI11_PARSE(app, argc, argv);

    for (CLI::App* sub : {classgroup, reps, etacmd, density, bounds, lcheck, baseline, cmcheck})
        if (sub->parsed()) cfg.command = sub->get_name();
    if (!format.empty()) cfg.format = format_names.at(format);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "{\"error\":{\"code\":2,\"kind\":\"invalid_argument\","
                         "\"message\":\"cannot open output file\"}}\n";
            return 2;
        }
        out = &file;
    }
    return iqfrac::run_command(cfg, *out, std::cerr);
}
