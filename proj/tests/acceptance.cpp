// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "convdiff/convdiff.hpp"
#include "support/dense.hpp"
#include "support/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace convdiff;

namespace {

struct Criterion
{
    std::string id;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what)
    {
        (ok ? notes : failures).push_back(what);
    }
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

const ConvergenceRow& row_of(const TableReport& t, Method m, int n)
{
    const auto* r = t.find(m, n);
    if (r == nullptr) {
        throw std::runtime_error("missing table row");
    }
    return *r;
}

void expect_order(Criterion& c, const TableReport& t, Method m, int n, bool max_norm, double target, double tol)
{
    const auto& r = row_of(t, m, n);
    const auto& order = max_norm ? r.order_max : r.order_l2;
    const std::string label = std::string(to_string(m)) + (max_norm ? " max" : " L2");
    if (!order) {
        c.check(false, label + " order missing");
        return;
    }
    c.check(std::abs(*order - target) <= tol,
            label + fmt(" order %.6f (want %.3f +- %.2f)", *order, target, tol));
}

double relative_inf_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff = std::max(diff, std::abs(a[i] - b[i]));
        scale = std::max(scale, std::abs(b[i]));
    }
    return diff / scale;
}

Criterion ac1()
{
    Criterion c{"AC1", {}, {}};
    const auto t = reproduce_table(1);
    expect_order(c, t, Method::fd, 5000, true, 2.000, 0.02);
    expect_order(c, t, Method::mim, 5000, true, 2.003, 0.05);
    expect_order(c, t, Method::fd, 5000, false, 0.997, 0.02);
    expect_order(c, t, Method::mim, 5000, false, 1.000, 0.01);
    expect_order(c, t, Method::fem, 5000, false, 2.000, 0.02);
    const auto p = preset(PresetId::ex1);
    for (int n : {100, 1000}) {
        const double e = max_norm_error(solve_fem(p, n, QuadratureRule(5)), p.exact);
        c.check(e <= 1e-9, fmt("fem max error %.3e at N=%.0f (want <= 1e-9)", e, n));
    }
    return c;
}

Criterion ac2()
{
    Criterion c{"AC2", {}, {}};
    const auto t = reproduce_table(2);
    expect_order(c, t, Method::fd, 5000, true, 1.000, 0.02);
    expect_order(c, t, Method::mim, 5000, true, 1.995, 0.05);
    expect_order(c, t, Method::fem, 5000, true, 2.000, 0.02);
    expect_order(c, t, Method::fd, 5000, false, 0.999, 0.02);
    expect_order(c, t, Method::mim, 5000, false, 1.000, 0.02);
    expect_order(c, t, Method::fem, 5000, false, 2.000, 0.02);
    return c;
}

Criterion ac3()
{
    Criterion c{"AC3", {}, {}};
    const auto t = reproduce_table(3);
    expect_order(c, t, Method::fd, 5000, true, 2.000, 0.02);
    expect_order(c, t, Method::fem, 5000, true, 2.000, 0.02);
    expect_order(c, t, Method::mim, 5000, true, 1.010, 0.05);
    expect_order(c, t, Method::fd, 5000, false, 0.999, 0.02);
    expect_order(c, t, Method::mim, 5000, false, 1.005, 0.05);
    expect_order(c, t, Method::fem, 5000, false, 2.000, 0.02);
    const auto p = preset(PresetId::ex3_dirichlet);
    for (int n : {50, 200, 1000}) {
        const double d = relative_inf_diff(solve_fd(p, n).values, solve_fem(p, n).values);
        c.check(d <= 1e-10, fmt("fd vs fem relative diff %.3e at N=%.0f (want <= 1e-10)", d, n));
    }
    return c;
}

Criterion ac4()
{
    Criterion c{"AC4", {}, {}};
    ExperimentConfig cfg;
    cfg.problem = PresetId::ex3_robin;
    cfg.n_ladder = {1000, 2000, 4000};
    cfg.norm_l2 = false;
    cfg.warm_up = false;
    const auto rows = run_experiment(cfg);
    std::vector<double> fd_errors;
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            c.check(false, std::string(to_string(r.method)) + " failed: " + r.error);
            continue;
        }
        if (r.method == Method::fd) {
            fd_errors.push_back(*r.err_max);
        }
        if (r.order_max && r.method != Method::fd) {
            const double target = r.method == Method::fem ? 2.0 : 1.0;
            c.check(std::abs(*r.order_max - target) <= 0.1,
                    std::string(to_string(r.method))
                        + fmt(" order %.4f at N=%.0f (want %.0f +- 0.1)", *r.order_max, r.n, target));
        }
    }
    for (std::size_t k = 1; k < fd_errors.size(); ++k) {
        c.check(fd_errors[k] >= fd_errors[k - 1],
                fmt("fd max error %.3e -> %.3e (want non-decreasing, step %.0f)", fd_errors[k - 1], fd_errors[k],
                    static_cast<double>(k)));
    }
    return c;
}

Criterion ac5()
{
    Criterion c{"AC5", {}, {}};
    const auto p = preset(PresetId::ex3_dirichlet);
    const int coarse = 50;
    const int fine = 200;
    c.notes.push_back(fmt("peclet %.4f at N=50", peclet(p, coarse).value));
    const SolutionField at_coarse[] = {solve_fd(p, coarse), solve_fem(p, coarse), solve_mimetic(p, coarse)};
    for (const auto& s : at_coarse) {
        const int osc = oscillation_count(s);
        c.check(osc > 0, std::string(to_string(s.method)) + fmt(" oscillations %.0f at N=50 (want > 0)", osc));
    }
    const SolutionField at_fine[] = {solve_fd(p, fine), solve_fem(p, fine)};
    for (const auto& s : at_fine) {
        const int osc = oscillation_count(s);
        c.check(osc == 0, std::string(to_string(s.method)) + fmt(" oscillations %.0f at N=200 (want 0)", osc));
    }
    // Reported only: first N where the mimetic profile is monotone. Roundoff
    // wiggles in the flat region (|u| ~ 1e-15) are ignored.
    for (int n = coarse; n <= 2000; n += 10) {
        if (oscillation_count(solve_mimetic(p, n), 1e-12) == 0) {
            c.notes.push_back(fmt("mim first monotone at N=%.0f (noise floor 1e-12)", n));
            break;
        }
    }
    return c;
}

Criterion ac6()
{
    Criterion c{"AC6", {}, {}};

    // Mimetic operators: exactness on quadratics, telescoping divergence.
    {
        const StaggeredMesh mesh(0.0, 2.0, 37);
        const auto g = build_gradient(mesh);
        const auto d = build_divergence(mesh);
        std::vector<double> u;
        for (double x : mesh.mim_points()) {
            u.push_back(1.0 - 3.0 * x + 2.0 * x * x);
        }
        const auto gu = g.multiply(u);
        double g_err = 0.0;
        for (std::size_t i = 0; i < gu.size(); ++i) {
            g_err = std::max(g_err, std::abs(gu[i] - (-3.0 + 4.0 * mesh.nodes()[i])));
        }
        std::vector<double> v;
        for (double x : mesh.nodes()) {
            v.push_back(0.5 + x - 1.5 * x * x);
        }
        const auto dv = d.multiply(v);
        double d_err = 0.0;
        double flux = 0.0;
        for (int cell = 0; cell < mesh.n_cells(); ++cell) {
            d_err = std::max(d_err, std::abs(dv[cell + 1] - (1.0 - 3.0 * mesh.centers()[cell])));
            flux += mesh.h() * dv[cell + 1];
        }
        const double tele = std::abs(flux - (v.back() - v.front()));
        c.check(g_err <= 1e-10 && d_err <= 1e-10, fmt("G/D quadratic error %.2e / %.2e", g_err, d_err));
        c.check(tele <= 1e-13, fmt("telescoping defect %.2e", tele));
    }

    // FD / FEM / MIM exactness on a linear solution.
    for (bool dirichlet : {true, false}) {
        const auto p = fixtures::polynomial_problem(1.0, 2.0, 0.0, dirichlet);
        for (const auto& s : {solve_fd(p, 40), solve_fem(p, 40), solve_mimetic(p, 40)}) {
            double e = 0.0;
            for (std::size_t i = 0; i < s.values.size(); ++i) {
                e = std::max(e, std::abs(s.values[i] - p.exact.u(s.locations[i])));
            }
            c.check(e <= 1e-11, std::string(to_string(s.method)) + fmt(" linear-solution error %.2e", e));
        }
    }

    // Banded LU against dense elimination.
    {
        std::mt19937_64 rng(20240611);
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            const auto sys = fixtures::random_banded_system(rng);
            const auto x = lu_factor(sys.a).solve(sys.rhs);
            const auto ref = dense::solve(dense::from_banded(sys.a), sys.rhs);
            worst = std::max(worst, relative_inf_diff(x, ref));
        }
        c.check(worst <= 1e-11, fmt("banded vs dense worst relative diff %.2e over 200 systems", worst));
    }

    // Gauss rules integrate polynomials up to degree 2 order - 1.
    for (int order : {2, 3, 5}) {
        const QuadratureRule q(order);
        double worst = 0.0;
        for (int deg = 0; deg <= q.exact_degree(); ++deg) {
            const double lo = -0.4;
            const double hi = 1.3;
            const double got = q.integrate([deg](double x) { return std::pow(x, deg); }, lo, hi);
            const double want = (std::pow(hi, deg + 1) - std::pow(lo, deg + 1)) / (deg + 1);
            worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
        }
        c.check(worst <= 1e-13, fmt("gauss-%.0f worst relative error %.2e", order, worst));
    }

    // Byte-identical CSV across reruns and execution policies.
    {
        ExperimentConfig cfg;
        cfg.problem = PresetId::ex2;
        cfg.n_ladder = {64, 128, 256};
        cfg.report_condition = true;
        const auto first = render_csv(run_experiment(cfg));
        const auto second = render_csv(run_experiment(cfg));
        cfg.parallel = false;
        const auto serial = render_csv(run_experiment(cfg));
        c.check(first == second && first == serial, "csv reruns byte-identical");
    }
    return c;
}

} // namespace

int main()
{
    using Runner = Criterion (*)();
    const Runner runners[] = {ac1, ac2, ac3, ac4, ac5, ac6};
    const char* ids[] = {"AC1", "AC2", "AC3", "AC4", "AC5", "AC6"};
    int failed = 0;
    for (std::size_t i = 0; i < std::size(runners); ++i) {
        Criterion c{ids[i], {}, {}};
        try {
            c = runners[i]();
        }
        catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        failed += ok ? 0 : 1;
        std::string detail;
        for (const auto& f : c.failures) {
            detail += (detail.empty() ? "" : "; ") + f;
        }
        if (ok) {
            for (const auto& n : c.notes) {
                detail += (detail.empty() ? "" : "; ") + n;
            }
        }
        std::printf("%s %s  %s\n", ok ? "PASS" : "FAIL", c.id.c_str(), detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, std::size(runners));
    return failed == 0 ? 0 : 1;
}
