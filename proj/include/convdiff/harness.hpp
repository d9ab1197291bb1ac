#ifndef CONVDIFF_HARNESS_HPP
#define CONVDIFF_HARNESS_HPP

#include "convdiff/analysis.hpp"
#include "convdiff/fd.hpp"
#include "convdiff/fem.hpp"
#include "convdiff/mimetic.hpp"
#include "convdiff/problem.hpp"
#include "convdiff/quadrature.hpp"
#include "convdiff/solution.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace convdiff {

enum class OutputFormat
{
    csv,
    json,
};

struct ExperimentConfig
{
    PresetId problem = PresetId::ex1;
    std::vector<Method> methods{Method::fd, Method::mim, Method::fem};
    std::vector<int> n_ladder;
    int quadrature_order = 3;
    bool norm_max = true;
    bool norm_l2 = true;
    bool report_condition = false;
    MimeticOptions mimetic;
    /// Overrides the FD reconstruction used by the L2 norm.
    std::optional<Reconstruction> fd_reconstruction;
    /// Run the N/2 warm-up so the first ladder entry gets an order.
    bool warm_up = true;
    bool parallel = true;
};

struct ConvergenceRow
{
    std::string problem;
    Method method = Method::fd;
    int n = 0;
    double h = 0.0;
    std::optional<double> err_max;
    std::optional<double> err_l2;
    std::optional<double> order_max;
    std::optional<double> order_l2;
    double peclet = 0.0;
    int oscillations = 0;
    std::optional<double> cond_estimate;
    /// Non-empty when the cell failed (e.g. singular system).
    std::string error;
};

inline void validate_config(const ExperimentConfig& cfg)
{
    if (cfg.methods.empty()) {
        throw std::invalid_argument("experiment: at least one method is required");
    }
    if (cfg.n_ladder.empty()) {
        throw std::invalid_argument("experiment: the N ladder is empty");
    }
    for (std::size_t i = 0; i < cfg.n_ladder.size(); ++i) {
        if (cfg.n_ladder[i] < 2) {
            throw std::invalid_argument("experiment: every N must be at least 2");
        }
        if (i > 0 && cfg.n_ladder[i] <= cfg.n_ladder[i - 1]) {
            throw std::invalid_argument("experiment: the N ladder must be strictly increasing");
        }
    }
    static_cast<void>(QuadratureRule(cfg.quadrature_order)); // throws on unsupported orders
}

inline SolutionField solve_with(const ProblemInstance& p, Method method, int n, const ExperimentConfig& cfg)
{
    switch (method) {
    case Method::fd: {
        auto field = solve_fd(p, n, FdOptions{cfg.report_condition});
        if (cfg.fd_reconstruction) {
            field.reconstruction = *cfg.fd_reconstruction;
        }
        return field;
    }
    case Method::mim: {
        auto opt = cfg.mimetic;
        opt.estimate_condition = cfg.report_condition;
        return solve_mimetic(p, n, opt);
    }
    case Method::fem:
        return solve_fem(p, n, FemOptions{cfg.quadrature_order, cfg.report_condition});
    }
    throw std::invalid_argument("unknown method");
}

namespace detail {

inline ConvergenceRow run_cell(const ProblemInstance& p, Method method, int n, const ExperimentConfig& cfg)
{
    ConvergenceRow row;
    row.problem = p.name;
    row.method = method;
    row.n = n;
    row.h = p.domain.length() / n;
    row.peclet = peclet(p, n).value;
    try {
        const auto field = solve_with(p, method, n, cfg);
        if (cfg.norm_max) {
            row.err_max = max_norm_error(field, p.exact);
        }
        if (cfg.norm_l2) {
            row.err_l2 = l2_error(field, p.exact);
        }
        row.oscillations = oscillation_count(field);
        row.cond_estimate = field.condition_estimate;
    }
    catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

inline void fill_orders(std::vector<ConvergenceRow>& rows, std::optional<double> ConvergenceRow::*err,
                        std::optional<double> ConvergenceRow::*order)
{
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto& prev = rows[k - 1].*err;
        const auto& cur = rows[k].*err;
        if (!prev || !cur) {
            continue;
        }
        const LadderPoint pair[2] = {{rows[k - 1].n, *prev}, {rows[k].n, *cur}};
        rows[k].*order = convergence_orders(pair).front();
    }
}

} // namespace detail

/// Runs every (method, N) cell of the experiment.
///
/// Orders pair consecutive ladder entries; the first entry is paired with an
/// extra N/2 run that is not emitted. Rows come back ordered by method
/// (fd, mim, fem) then ascending N, whatever the execution order.
inline std::vector<ConvergenceRow> run_experiment(const ExperimentConfig& cfg)
{
    validate_config(cfg);
    const ProblemInstance p = preset(cfg.problem);

    std::vector<int> ladder = cfg.n_ladder;
    const bool warm = cfg.warm_up && ladder.front() / 2 >= 2;
    if (warm) {
        ladder.insert(ladder.begin(), ladder.front() / 2);
    }

    std::vector<Method> methods;
    for (auto m : all_methods) {
        if (std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end()) {
            methods.push_back(m);
        }
    }

    std::vector<std::vector<ConvergenceRow>> per_method(methods.size());
    std::vector<std::vector<std::future<ConvergenceRow>>> pending(methods.size());
    const auto policy = cfg.parallel ? std::launch::async : std::launch::deferred;
    for (std::size_t m = 0; m < methods.size(); ++m) {
        for (int n : ladder) {
            pending[m].push_back(std::async(policy, [&p, &cfg, method = methods[m], n] {
                return detail::run_cell(p, method, n, cfg);
            }));
        }
    }

    std::vector<ConvergenceRow> out;
    for (std::size_t m = 0; m < methods.size(); ++m) {
        auto& rows = per_method[m];
        for (auto& fut : pending[m]) {
            rows.push_back(fut.get());
        }
        detail::fill_orders(rows, &ConvergenceRow::err_max, &ConvergenceRow::order_max);
        detail::fill_orders(rows, &ConvergenceRow::err_l2, &ConvergenceRow::order_l2);
        out.insert(out.end(), rows.begin() + (warm ? 1 : 0), rows.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text output. Numbers use %.17g so reruns are byte-identical.

inline std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_optional(const std::optional<double>& v) { return v ? format_number(*v) : std::string{}; }

inline constexpr const char* convergence_csv_header =
    "problem,method,n,h,err_max,err_l2,order_max,order_l2,peclet,oscillations,cond_estimate,error";

namespace detail {

inline std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c == '\n' ? ' ' : c;
    }
    out += '"';
    return out;
}

} // namespace detail

inline std::string render_csv(const std::vector<ConvergenceRow>& rows)
{
    std::string out = convergence_csv_header;
    out += '\n';
    for (const auto& r : rows) {
        out += r.problem;
        out += ',';
        out += to_string(r.method);
        out += ',' + std::to_string(r.n);
        out += ',' + format_number(r.h);
        out += ',' + format_optional(r.err_max);
        out += ',' + format_optional(r.err_l2);
        out += ',' + format_optional(r.order_max);
        out += ',' + format_optional(r.order_l2);
        out += ',' + format_number(r.peclet);
        out += ',' + std::to_string(r.oscillations);
        out += ',' + format_optional(r.cond_estimate);
        out += ',' + detail::csv_escape(r.error);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Table reproduction

struct TableReport
{
    int id = 0;
    PresetId problem = PresetId::ex1;
    std::vector<int> ladder;
    std::vector<ConvergenceRow> rows;

    [[nodiscard]] const ConvergenceRow* find(Method m, int n) const
    {
        for (const auto& r : rows) {
            if (r.method == m && r.n == n) {
                return &r;
            }
        }
        return nullptr;
    }
};

/// Reference ladders: 1 -> ex1, 2 -> ex2, 3 -> ex3 with Dirichlet ends.
inline ExperimentConfig table_config(int id)
{
    ExperimentConfig cfg;
    switch (id) {
    case 1:
        cfg.problem = PresetId::ex1;
        cfg.n_ladder = {1000, 3000, 5000, 7000, 9000, 11000};
        break;
    case 2:
        cfg.problem = PresetId::ex2;
        cfg.n_ladder = {1000, 3000, 5000, 7000, 9000, 11000};
        break;
    case 3:
        cfg.problem = PresetId::ex3_dirichlet;
        cfg.n_ladder = {1000, 2000, 4000, 5000};
        break;
    default:
        throw std::invalid_argument("table id must be 1, 2 or 3, got " + std::to_string(id));
    }
    return cfg;
}

inline TableReport reproduce_table(int id, const ExperimentConfig& base)
{
    TableReport report;
    report.id = id;
    report.problem = base.problem;
    report.ladder = base.n_ladder;
    report.rows = run_experiment(base);
    return report;
}

inline TableReport reproduce_table(int id) { return reproduce_table(id, table_config(id)); }

inline std::string render_table_csv(const TableReport& t)
{
    std::string out = "n,fd_order_max,mim_order_max,fem_order_max,fd_order_l2,mim_order_l2,fem_order_l2\n";
    for (int n : t.ladder) {
        out += std::to_string(n);
        for (auto order : {&ConvergenceRow::order_max, &ConvergenceRow::order_l2}) {
            for (auto m : all_methods) {
                const auto* row = t.find(m, n);
                out += ',';
                if (row) {
                    out += format_optional(row->*order);
                }
            }
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Solution profiles

/// `x,value,exact` at the method's sample locations (exact left empty when the
/// problem has none).
inline std::string solution_csv(const SolutionField& s, const ProblemInstance& p)
{
    std::string out = "x,value,exact\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        out += format_number(s.locations[i]);
        out += ',' + format_number(s.values[i]);
        out += ',';
        if (p.exact.present()) {
            out += format_number(p.exact.u(s.locations[i]));
        }
        out += '\n';
    }
    return out;
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    os << text;
    os.flush();
    if (!os) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

inline std::string dump_solution(PresetId problem, Method method, int n, const std::string& path,
                                 const ExperimentConfig& cfg = {})
{
    const auto p = preset(problem);
    const auto text = solution_csv(solve_with(p, method, n, cfg), p);
    write_text_file(path, text);
    return text;
}

} // namespace convdiff

#endif // CONVDIFF_HARNESS_HPP
