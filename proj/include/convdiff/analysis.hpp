#ifndef CONVDIFF_ANALYSIS_HPP
#define CONVDIFF_ANALYSIS_HPP

#include "convdiff/problem.hpp"
#include "convdiff/quadrature.hpp"
#include "convdiff/solution.hpp"

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace convdiff {

namespace detail {

inline void require_exact(const ExactSolution& exact)
{
    if (!exact.present()) {
        throw std::invalid_argument("error norms need an exact solution");
    }
}

inline void require_layout(const SolutionField& s)
{
    if (s.locations.size() != s.values.size()) {
        throw std::invalid_argument("solution field: locations and values differ in length");
    }
    const auto n = static_cast<std::size_t>(s.mesh.n_cells());
    const bool cells = s.reconstruction == Reconstruction::pc_cells;
    if (s.values.size() != (cells ? n + 2 : n + 1)) {
        throw std::invalid_argument("solution field: value count does not fit reconstruction "
                                    + std::string(to_string(s.reconstruction)));
    }
}

} // namespace detail

/// Max pointwise error over the scored index set: cell centers for the mimetic
/// layout (both boundary unknowns skipped), interior nodes otherwise.
inline double max_norm_error(const SolutionField& s, const ExactSolution& exact)
{
    detail::require_exact(exact);
    if (s.locations.size() != s.values.size() || s.values.size() < 3) {
        throw std::invalid_argument("max_norm_error: malformed solution field");
    }
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < s.values.size(); ++j) {
        worst = std::max(worst, std::abs(s.values[j] - exact.u(s.locations[j])));
    }
    return worst;
}

/// Continuous L2 error of the field's reconstruction against u.
///
/// Every reconstruction breakpoint starts a new quadrature piece, so the
/// integrand is smooth on each piece.
inline double l2_error(const SolutionField& s, const ExactSolution& exact,
                       const QuadratureRule& q = QuadratureRule(5))
{
    detail::require_exact(exact);
    detail::require_layout(s);
    const auto& x = s.mesh.nodes();
    const auto& v = s.values;
    const int n = s.mesh.n_cells();
    double sum = 0.0;
    auto constant_piece = [&](double lo, double hi, double value) {
        sum += q.integrate(
            [&](double t) {
                const double e = value - exact.u(t);
                return e * e;
            },
            lo, hi);
    };

    for (int c = 0; c < n; ++c) {
        const double lo = x[c];
        const double hi = x[c + 1];
        switch (s.reconstruction) {
        case Reconstruction::pc_cells:
            constant_piece(lo, hi, v[c + 1]);
            break;
        case Reconstruction::pc_dual: {
            const double mid = 0.5 * (lo + hi);
            constant_piece(lo, mid, v[c]);
            constant_piece(mid, hi, v[c + 1]);
            break;
        }
        case Reconstruction::pc_left:
            constant_piece(lo, hi, v[c]);
            break;
        case Reconstruction::p_linear: {
            const double len = hi - lo;
            sum += q.integrate(
                [&](double t) {
                    const double theta = (t - lo) / len;
                    const double e = (1.0 - theta) * v[c] + theta * v[c + 1] - exact.u(t);
                    return e * e;
                },
                lo, hi);
            break;
        }
        }
    }
    return std::sqrt(sum);
}

struct LadderPoint
{
    int n;
    double error;
};

/// Observed orders between consecutive ladder entries:
/// ln(e_{k-1} / e_k) / ln(n_k / n_{k-1}), one per k >= 1. An order touching a
/// nonpositive or non-finite error is left empty.
inline std::vector<std::optional<double>> convergence_orders(std::span<const LadderPoint> ladder)
{
    std::vector<std::optional<double>> orders;
    for (std::size_t k = 1; k < ladder.size(); ++k) {
        const auto& prev = ladder[k - 1];
        const auto& cur = ladder[k];
        if (cur.n <= prev.n) {
            throw std::invalid_argument("convergence_orders: cell counts must be strictly increasing");
        }
        if (!(prev.error > 0.0) || !(cur.error > 0.0) || !std::isfinite(prev.error)
            || !std::isfinite(cur.error)) {
            orders.emplace_back();
            continue;
        }
        orders.emplace_back(std::log(prev.error / cur.error)
                            / std::log(static_cast<double>(cur.n) / prev.n));
    }
    return orders;
}

struct PecletNumber
{
    double value;
    /// Set when k or nu vary; the value then uses the domain midpoint.
    bool approximate;
};

/// Local Peclet number |nu| h / (2k).
inline PecletNumber peclet(const ProblemInstance& p, int n_cells)
{
    const auto& c = p.coefficients;
    const double mid = 0.5 * (p.domain.a + p.domain.b);
    const double h = p.domain.length() / n_cells;
    return {std::abs(c.nu(mid)) * h / (2.0 * c.k(mid)), !(c.k_constant && c.nu_constant)};
}

/// Strict sign changes between successive differences; steps with
/// |difference| <= noise_floor are skipped (zero steps always are).
inline int oscillation_count(std::span<const double> values, double noise_floor = 0.0)
{
    int changes = 0;
    int last_sign = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double d = values[i] - values[i - 1];
        if (std::abs(d) <= noise_floor) {
            continue;
        }
        const int sign = (d > 0.0) - (d < 0.0);
        if (sign == 0) {
            continue;
        }
        if (last_sign != 0 && sign != last_sign) {
            ++changes;
        }
        last_sign = sign;
    }
    return changes;
}

inline int oscillation_count(const SolutionField& s, double noise_floor = 0.0)
{
    return oscillation_count(std::span<const double>(s.values), noise_floor);
}

struct ErrorReport
{
    double err_max = 0.0;
    double err_l2 = 0.0;
    int n_cells = 0;
    double h = 0.0;
    int oscillations = 0;
    double peclet = 0.0;
    std::optional<double> condition_estimate;
};

inline ErrorReport evaluate(const SolutionField& s, const ProblemInstance& p,
                            const QuadratureRule& q = QuadratureRule(5))
{
    ErrorReport r;
    r.err_max = max_norm_error(s, p.exact);
    r.err_l2 = l2_error(s, p.exact, q);
    r.n_cells = s.mesh.n_cells();
    r.h = s.mesh.h();
    r.oscillations = oscillation_count(s);
    r.peclet = peclet(p, s.mesh.n_cells()).value;
    r.condition_estimate = s.condition_estimate;
    return r;
}

} // namespace convdiff

#endif // CONVDIFF_ANALYSIS_HPP
