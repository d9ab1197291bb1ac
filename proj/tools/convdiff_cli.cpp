// Command-line front end for the convection-diffusion solver suite.
//
//   convdiff solve --problem ex1 --method mim --n 20 [--quad 3] [--out profile.csv]
//   convdiff convergence --problem ex2 --methods fd,mim,fem --n 1000,3000 --out rows.csv
//   convdiff table --id 1 --out table1.csv

#include "convdiff/convdiff.hpp"
#include "convdiff/harness_json.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace convdiff;

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
    }
    else {
        write_text_file(path, text);
    }
}

struct SchemeFlags
{
    int quad = 3;
    std::string convection = "row-aligned";
    std::string diffusion = "conservative";
    std::string fd_l2_recon = "dual";

    void add_to(CLI::App& app)
    {
        app.add_option("--quad", quad, "Gauss points per element for FEM assembly")
            ->check(CLI::IsMember({2, 3, 5}));
        app.add_option("--mim-convection", convection, "Mimetic convective coupling")
            ->check(CLI::IsMember({"row-aligned", "center-average"}));
        app.add_option("--mim-diffusion", diffusion, "Mimetic diffusion form")
            ->check(CLI::IsMember({"conservative", "nonconservative"}));
        app.add_option("--fd-l2-recon", fd_l2_recon, "FD reconstruction for the L2 norm")
            ->check(CLI::IsMember({"dual", "left"}));
    }

    void apply(ExperimentConfig& cfg) const
    {
        cfg.quadrature_order = quad;
        cfg.mimetic.convection = convection == "row-aligned" ? ConvectionCoupling::row_aligned
                                                             : ConvectionCoupling::center_average;
        cfg.mimetic.diffusion = diffusion == "conservative" ? DiffusionForm::conservative
                                                            : DiffusionForm::nonconservative;
        if (fd_l2_recon == "left") {
            cfg.fd_reconstruction = Reconstruction::pc_left;
        }
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"1-D steady convection-diffusion: mimetic, finite-difference and finite-element solvers"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve one problem and write the solution profile");
    std::string solve_problem;
    std::string solve_method;
    int solve_n = 0;
    std::string solve_out;
    SchemeFlags solve_flags;
    solve_cmd->add_option("--problem", solve_problem, "ex1 | ex2 | ex3-dirichlet | ex3-robin")->required();
    solve_cmd->add_option("--method", solve_method, "fd | mim | fem")->required();
    solve_cmd->add_option("--n", solve_n, "Number of cells")->required();
    solve_cmd->add_option("--out", solve_out, "CSV path (x,value,exact); stdout when omitted");
    solve_flags.add_to(*solve_cmd);

    // convergence
    auto* conv_cmd = app.add_subcommand("convergence", "Run an N ladder and report errors and orders");
    std::string conv_problem;
    std::vector<std::string> conv_methods{"fd", "mim", "fem"};
    std::vector<int> conv_n;
    std::vector<std::string> conv_norms{"max", "l2"};
    bool conv_cond = false;
    std::string conv_format = "csv";
    std::string conv_out;
    SchemeFlags conv_flags;
    conv_cmd->add_option("--problem", conv_problem, "ex1 | ex2 | ex3-dirichlet | ex3-robin")->required();
    conv_cmd->add_option("--methods", conv_methods, "Comma-separated subset of fd,mim,fem")->delimiter(',');
    conv_cmd->add_option("--n", conv_n, "Comma-separated, strictly increasing cell counts")
        ->delimiter(',')
        ->required();
    conv_cmd->add_option("--norms", conv_norms, "Comma-separated subset of max,l2")->delimiter(',');
    conv_cmd->add_flag("--cond", conv_cond, "Report a 1-norm condition estimate per system");
    conv_cmd->add_option("--format", conv_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    conv_cmd->add_option("--out", conv_out, "Output path ('-' for stdout)")->required();
    conv_flags.add_to(*conv_cmd);

    // table
    auto* table_cmd = app.add_subcommand("table", "Order table for a reference ladder (1: ex1, 2: ex2, 3: ex3-dirichlet)");
    int table_id = 0;
    std::string table_out;
    SchemeFlags table_flags;
    table_cmd->add_option("--id", table_id, "1 | 2 | 3")->required()->check(CLI::IsMember({1, 2, 3}));
    table_cmd->add_option("--out", table_out, "Output path ('-' for stdout)")->required();
    table_flags.add_to(*table_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*solve_cmd) {
            ExperimentConfig cfg;
            solve_flags.apply(cfg);
            const auto p = preset(solve_problem);
            const auto field = solve_with(p, parse_method(solve_method), solve_n, cfg);
            emit(solve_out, solution_csv(field, p));
            if (!solve_out.empty() && solve_out != "-" && p.exact.present()) {
                std::printf("%s %s n=%d err_max=%s err_l2=%s\n", p.name.c_str(), solve_method.c_str(), solve_n,
                            format_number(max_norm_error(field, p.exact)).c_str(),
                            format_number(l2_error(field, p.exact)).c_str());
            }
        }
        else if (*conv_cmd) {
            ExperimentConfig cfg;
            conv_flags.apply(cfg);
            cfg.problem = parse_preset(conv_problem);
            cfg.methods.clear();
            for (const auto& m : conv_methods) {
                cfg.methods.push_back(parse_method(m));
            }
            cfg.n_ladder = conv_n;
            cfg.norm_max = false;
            cfg.norm_l2 = false;
            for (const auto& norm : conv_norms) {
                if (norm == "max") {
                    cfg.norm_max = true;
                }
                else if (norm == "l2") {
                    cfg.norm_l2 = true;
                }
                else {
                    throw std::invalid_argument("unknown norm '" + norm + "' (expected max or l2)");
                }
            }
            cfg.report_condition = conv_cond;
            const auto rows = run_experiment(cfg);
            emit(conv_out, conv_format == "json" ? render_json(rows) : render_csv(rows));
        }
        else if (*table_cmd) {
            auto cfg = table_config(table_id);
            table_flags.apply(cfg);
            emit(table_out, render_table_csv(reproduce_table(table_id, cfg)));
        }
    }
    catch (const std::exception& e) {
        std::fprintf(stderr, "convdiff: error: %s\n", e.what());
        return 1;
    }
    return 0;
}
