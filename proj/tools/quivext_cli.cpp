// Command-line front end over the C API.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "quivext/quivext.h"

namespace {

int report_error(qx_status st, qx_output_mode mode) {
    char* text = nullptr;
    if (qx_format_error(st, qx_last_error(), mode, &text) == QX_OK) {
        std::fputs(text, mode == QX_OUTPUT_JSON ? stdout : stderr);
        qx_string_free(text);
    }
    return qx_status_exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hom and Ext of quiver representations with relations"};
    app.set_version_flag("--version", std::string(qx_version()));

    std::string command, input, field, output = "table";
    long long max_degree = -1, margin = -1;
    unsigned long long seed = 0;

    app.add_option("command", command, "check | hom | ext | oracle | coresolve | adhm | serre")
        ->required()
        ->check(CLI::IsMember({"check", "hom", "ext", "oracle", "coresolve", "adhm", "serre"}));
    app.add_option("--input", input, "problem file (JSON)")->required();
    app.add_option("--field", field, "rational | prime:P (overrides the file)");
    app.add_option("--max-degree", max_degree, "Ext degree P (default 3)")->check(CLI::NonNegativeNumber);
    app.add_option("--margin", margin, "extra cutoff degrees to verify (default 0)")->check(CLI::NonNegativeNumber);
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--output", output, "table | json")->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    const qx_output_mode mode = output == "json" ? QX_OUTPUT_JSON : QX_OUTPUT_TABLE;
    qx_run_options opts;
    qx_run_options_init(&opts);
    if (!field.empty()) opts.field = field.c_str();
    opts.max_degree = max_degree;
    opts.margin = margin;
    if (seed_opt->count() > 0) {
        opts.has_seed = 1;
        opts.seed = seed;
    }

    qx_problem* problem = nullptr;
    qx_status st = qx_problem_load_file(input.c_str(), &problem);
    if (st != QX_OK) return report_error(st, mode);

    qx_report* report = nullptr;
    st = qx_run(problem, command.c_str(), &opts, &report);
    qx_problem_free(problem);
    if (st != QX_OK) return report_error(st, mode);

    char* text = nullptr;
    st = qx_report_format(report, mode, &text);
    int rc = qx_report_exit_code(report);
    qx_report_free(report);
    if (st != QX_OK) return report_error(st, mode);
    std::fputs(text, stdout);
    qx_string_free(text);
    return rc;
}
