#ifndef CONVDIFF_PROBLEM_HPP
#define CONVDIFF_PROBLEM_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace convdiff {

using ScalarFunction = std::function<double(double)>;

/// Coefficients of  k(x) u'' + nu(x) u' = f(x).
///
/// k_prime is supplied in closed form because the Galerkin weak form needs
/// (k v)' and the mimetic conservative flux needs nu - k'.
struct CoefficientSet
{
    ScalarFunction k;
    ScalarFunction k_prime;
    ScalarFunction nu;
    ScalarFunction f;
    bool k_constant = false;
    bool nu_constant = false;
};

/// alpha * u + beta * du/dx = gamma at one endpoint (d/dx at both ends).
struct RobinSpec
{
    double alpha = 1.0;
    double beta = 0.0;
    double gamma = 0.0;

    [[nodiscard]] bool is_dirichlet() const noexcept { return beta == 0.0; }
    [[nodiscard]] bool is_degenerate() const noexcept { return alpha == 0.0 && beta == 0.0; }
    /// Prescribed value for a Dirichlet endpoint.
    [[nodiscard]] double dirichlet_value() const { return gamma / alpha; }
};

struct ExactSolution
{
    ScalarFunction u;
    ScalarFunction u_prime;

    [[nodiscard]] bool present() const noexcept { return static_cast<bool>(u); }
};

struct Interval
{
    double a = 0.0;
    double b = 1.0;

    [[nodiscard]] double length() const noexcept { return b - a; }
};

struct ProblemInstance
{
    std::string name;
    Interval domain;
    CoefficientSet coefficients;
    RobinSpec left;
    RobinSpec right;
    ExactSolution exact;
};

enum class PresetId
{
    ex1,
    ex2,
    ex3_dirichlet,
    ex3_robin,
};

inline constexpr PresetId all_presets[] = {PresetId::ex1, PresetId::ex2, PresetId::ex3_dirichlet,
                                           PresetId::ex3_robin};

inline std::string_view to_string(PresetId id)
{
    switch (id) {
    case PresetId::ex1:
        return "ex1";
    case PresetId::ex2:
        return "ex2";
    case PresetId::ex3_dirichlet:
        return "ex3-dirichlet";
    case PresetId::ex3_robin:
        return "ex3-robin";
    }
    return "?";
}

/// Accepts the CLI spellings (`ex3-dirichlet`) and the underscore forms.
inline PresetId parse_preset(std::string_view name)
{
    std::string key(name);
    std::replace(key.begin(), key.end(), '_', '-');
    for (auto id : all_presets) {
        if (to_string(id) == key) {
            return id;
        }
    }
    throw std::invalid_argument("unknown problem preset '" + std::string(name)
                                + "' (expected ex1, ex2, ex3-dirichlet or ex3-robin)");
}

namespace detail {

inline ProblemInstance make_ex1()
{
    const double e20 = std::exp(20.0);
    const double scale = 1.0 / (e20 - 1.0);
    const double alpha = -20.0 * e20 * scale;

    ProblemInstance p;
    p.name = "ex1";
    p.domain = {0.0, 1.0};
    p.coefficients.k = [](double) { return 1.0; };
    p.coefficients.k_prime = [](double) { return 0.0; };
    p.coefficients.nu = [](double) { return 0.0; };
    p.coefficients.f = [scale](double x) { return 400.0 * std::exp(20.0 * x) * scale; };
    p.coefficients.k_constant = true;
    p.coefficients.nu_constant = true;
    // alpha u(0) - u'(0) = -20/(e^20 - 1): beta_a = -1 under the d/dx convention.
    p.left = {alpha, -1.0, -20.0 * scale};
    p.right = {alpha, 1.0, 0.0};
    p.exact.u = [scale](double x) { return std::expm1(20.0 * x) * scale; };
    p.exact.u_prime = [scale](double x) { return 20.0 * std::exp(20.0 * x) * scale; };
    return p;
}

inline ProblemInstance make_ex2()
{
    constexpr double ap = 250.0;
    constexpr double x0 = 0.75;
    auto front = [](double x) { return std::atan(ap * (x - x0)) + std::atan(ap * x0); };

    ProblemInstance p;
    p.name = "ex2";
    p.domain = {0.0, 1.0};
    p.coefficients.k = [](double x) { return 1.0 / ap + ap * (x - x0) * (x - x0); };
    p.coefficients.k_prime = [](double x) { return 2.0 * ap * (x - x0); };
    p.coefficients.nu = [](double x) { return 2.0 * ap * (x - x0); };
    // nu = k' makes the operator (k u')', so f = -k' A - 2 with A the arctan front.
    p.coefficients.f = [front](double x) { return -2.0 * ap * (x - x0) * front(x) - 2.0; };
    p.left = {1.0, 1.0, ap / (1.0 + ap * ap * x0 * x0)};
    p.right = {1.0, 1.0, -std::atan(ap * (1.0 - x0)) - std::atan(ap * x0)};
    p.exact.u = [front](double x) { return (1.0 - x) * front(x); };
    p.exact.u_prime = [front](double x) {
        const double s = ap * (x - x0);
        return -front(x) + (1.0 - x) * ap / (1.0 + s * s);
    };
    return p;
}

inline ProblemInstance make_ex3(bool robin)
{
    constexpr double k = 1.052;
    constexpr double nu = -110.5;
    constexpr double lambda = nu / k;
    // u = (1 - e^{-lambda x}) / (1 - e^{-lambda}); layer at x = 1 since lambda < 0.
    const double denom = -std::expm1(-lambda);

    ProblemInstance p;
    p.name = robin ? "ex3-robin" : "ex3-dirichlet";
    p.domain = {0.0, 1.0};
    p.coefficients.k = [](double) { return k; };
    p.coefficients.k_prime = [](double) { return 0.0; };
    p.coefficients.nu = [](double) { return nu; };
    p.coefficients.f = [](double) { return 0.0; };
    p.coefficients.k_constant = true;
    p.coefficients.nu_constant = true;
    if (robin) {
        p.left = {0.0, 1.0, lambda / denom};
        p.right = {1.0, 1.0, 1.0 + lambda * std::exp(-lambda) / denom};
    }
    else {
        p.left = {1.0, 0.0, 0.0};
        p.right = {1.0, 0.0, 1.0};
    }
    p.exact.u = [denom](double x) { return -std::expm1(-lambda * x) / denom; };
    p.exact.u_prime = [denom](double x) { return lambda * std::exp(-lambda * x) / denom; };
    return p;
}

inline void require_nondegenerate(const ProblemInstance& p)
{
    if (p.left.is_degenerate() || p.right.is_degenerate()) {
        throw std::invalid_argument("boundary condition with alpha = beta = 0");
    }
}

} // namespace detail

inline ProblemInstance preset(PresetId id)
{
    switch (id) {
    case PresetId::ex1:
        return detail::make_ex1();
    case PresetId::ex2:
        return detail::make_ex2();
    case PresetId::ex3_dirichlet:
        return detail::make_ex3(false);
    case PresetId::ex3_robin:
        return detail::make_ex3(true);
    }
    throw std::invalid_argument("unknown problem preset");
}

inline ProblemInstance preset(std::string_view name) { return preset(parse_preset(name)); }

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue
{
    std::string check;
    std::string location;
    std::string message;
};

struct ValidationReport
{
    std::vector<ValidationIssue> issues;

    [[nodiscard]] bool ok() const noexcept { return issues.empty(); }
    [[nodiscard]] bool has(std::string_view check) const
    {
        return std::any_of(issues.begin(), issues.end(),
                           [&](const ValidationIssue& i) { return i.check == check; });
    }
};

struct ValidationOptions
{
    int k_samples = 101;
    int residual_samples = 11;
    double residual_step = 1e-5;
    double residual_tol = 1e-6;
    double bc_tol = 1e-9;
};

namespace detail {

inline std::string fmt_x(double x)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "x=%.6g", x);
    return buf;
}

inline void check_robin(const RobinSpec& bc, double x, const char* side, const ExactSolution& exact,
                        double tol, std::vector<ValidationIssue>& out)
{
    if (bc.is_degenerate()) {
        out.push_back({"degenerate-bc", side, "alpha and beta are both zero"});
        return;
    }
    if (!exact.present() || !exact.u_prime) {
        return;
    }
    const double lhs = bc.alpha * exact.u(x) + bc.beta * exact.u_prime(x);
    const double scale = std::max({1.0, std::abs(bc.gamma), std::abs(bc.alpha * exact.u(x)),
                                   std::abs(bc.beta * exact.u_prime(x))});
    if (!(std::abs(lhs - bc.gamma) <= tol * scale)) {
        out.push_back({"bc-consistency", side,
                       "exact solution gives " + std::to_string(lhs) + ", gamma is "
                           + std::to_string(bc.gamma)});
    }
}

} // namespace detail

/// Checks the problem invariants; never throws, every violation is reported.
///
/// The PDE residual of the exact solution uses the supplied u' and a
/// Richardson-extrapolated centered difference of u' for u''. Differencing u
/// twice loses ~1e-5 to roundoff when k is large (ex2), and the plain centered
/// difference leaves an h^2 u'''' term of ~1e-3 inside the ex3 layer.
inline ValidationReport validate(const ProblemInstance& p, const ValidationOptions& opt = {})
{
    ValidationReport report;
    auto& out = report.issues;
    const auto [a, b] = p.domain;
    if (!(a < b)) {
        out.push_back({"domain", "", "a must be smaller than b"});
        return report;
    }
    const auto& c = p.coefficients;
    if (!c.k || !c.k_prime || !c.nu || !c.f) {
        out.push_back({"coefficients", "", "k, k', nu and f must all be set"});
        return report;
    }

    for (int i = 0; i < opt.k_samples; ++i) {
        const double x = a + (b - a) * i / (opt.k_samples - 1);
        if (!(c.k(x) > 0.0)) {
            out.push_back({"k-positive", detail::fmt_x(x), "k(x) = " + std::to_string(c.k(x))});
        }
        if (c.k_constant && c.k_prime(x) != 0.0) {
            out.push_back({"k-constant", detail::fmt_x(x), "k marked constant but k'(x) != 0"});
        }
    }

    detail::check_robin(p.left, a, "left", p.exact, opt.bc_tol, out);
    detail::check_robin(p.right, b, "right", p.exact, opt.bc_tol, out);

    if (p.exact.present() && p.exact.u_prime) {
        const double step = opt.residual_step;
        for (int i = 0; i < opt.residual_samples; ++i) {
            double x = a + (b - a) * i / (opt.residual_samples - 1);
            x = std::clamp(x, a + step, b - step);
            auto centered = [&](double s) {
                return (p.exact.u_prime(x + s) - p.exact.u_prime(x - s)) / (2.0 * s);
            };
            const double upp = (4.0 * centered(0.5 * step) - centered(step)) / 3.0;
            const double fx = c.f(x);
            const double residual = c.k(x) * upp + c.nu(x) * p.exact.u_prime(x) - fx;
            if (!(std::abs(residual) <= opt.residual_tol * std::max(1.0, std::abs(fx)))) {
                out.push_back({"pde-residual", detail::fmt_x(x),
                               "|k u'' + nu u' - f| = " + std::to_string(std::abs(residual))});
            }
        }
    }
    return report;
}

} // namespace convdiff

#endif // CONVDIFF_PROBLEM_HPP
