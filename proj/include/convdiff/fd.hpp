#ifndef CONVDIFF_FD_HPP
#define CONVDIFF_FD_HPP

#include "convdiff/banded.hpp"
#include "convdiff/mesh.hpp"
#include "convdiff/problem.hpp"
#include "convdiff/solution.hpp"

#include <vector>

namespace convdiff {

/// Nodal unknowns U_0..U_N, tridiagonal. Rows are kept in the h^2-scaled form
/// (k_i - nu_i h/2, -2 k_i, k_i + nu_i h/2) = h^2 f_i.
struct FdSystem
{
    BandedMatrix<double> matrix;
    std::vector<double> rhs;
};

struct FdOptions
{
    bool estimate_condition = false;
};

/// Centered second-order differences on the nodes.
///
/// A Robin endpoint eliminates the ghost node through the centered boundary
/// difference, e.g. at the left U_{-1} = U_1 + (2h/beta)(alpha U_0 - gamma).
/// A Dirichlet endpoint (beta = 0) replaces its row by U = gamma / alpha.
inline FdSystem assemble_fd(const ProblemInstance& p, const StaggeredMesh& mesh)
{
    detail::require_nondegenerate(p);
    const int n = mesh.n_cells();
    const double h = mesh.h();
    const auto& x = mesh.nodes();
    const auto& coef = p.coefficients;

    FdSystem sys{BandedMatrix<double>(n + 1, 1, 1), std::vector<double>(n + 1, 0.0)};
    auto& a = sys.matrix;
    for (int i = 1; i < n; ++i) {
        const double k = coef.k(x[i]);
        const double nu = coef.nu(x[i]);
        a.set(i, i - 1, k - nu * h / 2);
        a.set(i, i, -2 * k);
        a.set(i, i + 1, k + nu * h / 2);
        sys.rhs[i] = h * h * coef.f(x[i]);
    }

    if (p.left.is_dirichlet()) {
        a.set(0, 0, 1.0);
        sys.rhs[0] = p.left.dirichlet_value();
    }
    else {
        const auto [alpha, beta, gamma] = p.left;
        const double k = coef.k(x[0]);
        const double lower = k - coef.nu(x[0]) * h / 2;
        a.set(0, 0, lower * 2 * h * alpha / beta - 2 * k);
        a.set(0, 1, 2 * k);
        sys.rhs[0] = h * h * coef.f(x[0]) + lower * 2 * h / beta * gamma;
    }

    if (p.right.is_dirichlet()) {
        a.set(n, n, 1.0);
        sys.rhs[n] = p.right.dirichlet_value();
    }
    else {
        const auto [alpha, beta, gamma] = p.right;
        const double k = coef.k(x[n]);
        const double upper = k + coef.nu(x[n]) * h / 2;
        a.set(n, n - 1, 2 * k);
        a.set(n, n, -(upper * 2 * h * alpha / beta + 2 * k));
        sys.rhs[n] = h * h * coef.f(x[n]) - upper * 2 * h / beta * gamma;
    }
    return sys;
}

inline SolutionField solve_fd(const ProblemInstance& p, int n_cells, const FdOptions& opt = {})
{
    StaggeredMesh mesh(p.domain.a, p.domain.b, n_cells);
    const auto sys = assemble_fd(p, mesh);
    auto sol = solve_system(sys.matrix, sys.rhs, opt.estimate_condition);
    return SolutionField{Method::fd, mesh.nodes(), std::move(sol.values), Reconstruction::pc_dual,
                         std::move(mesh), sol.condition_estimate};
}

} // namespace convdiff

#endif // CONVDIFF_FD_HPP
