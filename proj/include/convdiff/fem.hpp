#ifndef CONVDIFF_FEM_HPP
#define CONVDIFF_FEM_HPP

#include "convdiff/banded.hpp"
#include "convdiff/mesh.hpp"
#include "convdiff/problem.hpp"
#include "convdiff/quadrature.hpp"
#include "convdiff/solution.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace convdiff {

/// Hat-basis Galerkin system; unknowns are the nodal values a_0..a_N.
struct FemSystem
{
    BandedMatrix<double> matrix;
    std::vector<double> rhs;
    /// (dof, value) pairs eliminated by Dirichlet conditions.
    std::vector<std::pair<int, double>> constrained;
};

struct FemOptions
{
    int quadrature_order = 3;
    bool estimate_condition = false;
};

/// Assembles B(phi_j, phi_i) = l(phi_i) for the weak form of k u'' + nu u' = f:
///
///   B(u, v) = theta_a alpha_a u(a) - theta_b alpha_b u(b)
///             - int [ k u' v' + k' u' v - nu u' v ] dx
///   l(v)    = int f v dx + theta_a gamma_a - theta_b gamma_b
///
/// with theta_a = k(a) v(a) / beta_a, theta_b = k(b) v(b) / beta_b. Both come
/// from integrating k u'' v by parts and substituting beta u' = gamma - alpha u.
inline FemSystem assemble_fem(const ProblemInstance& p, const StaggeredMesh& mesh, const QuadratureRule& q)
{
    detail::require_nondegenerate(p);
    const int n = mesh.n_cells();
    const double h = mesh.h();
    const auto& x = mesh.nodes();
    const auto& coef = p.coefficients;

    FemSystem sys{BandedMatrix<double>(n + 1, 1, 1), std::vector<double>(n + 1, 0.0), {}};
    auto& a = sys.matrix;
    const double dphi[2] = {-1.0 / h, 1.0 / h};

    for (int e = 0; e < n; ++e) {
        double local[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
        double load[2] = {0.0, 0.0};
        for (std::size_t g = 0; g < q.points().size(); ++g) {
            const double t = q.points()[g];
            const double w = q.weights()[g] * h;
            const double xq = x[e] + h * t;
            const double k = coef.k(xq);
            const double kp = coef.k_prime(xq);
            const double nu = coef.nu(xq);
            const double f = coef.f(xq);
            const double phi[2] = {1.0 - t, t};
            for (int i = 0; i < 2; ++i) {
                load[i] += w * f * phi[i];
                for (int j = 0; j < 2; ++j) {
                    local[i][j] -= w * (k * dphi[j] * dphi[i] + (kp - nu) * dphi[j] * phi[i]);
                }
            }
        }
        for (int i = 0; i < 2; ++i) {
            sys.rhs[e + i] += load[i];
            for (int j = 0; j < 2; ++j) {
                a.add(e + i, e + j, local[i][j]);
            }
        }
    }

    if (!p.left.is_dirichlet()) {
        const double ka = coef.k(p.domain.a);
        a.add(0, 0, ka * p.left.alpha / p.left.beta);
        sys.rhs[0] += ka * p.left.gamma / p.left.beta;
    }
    else {
        sys.constrained.emplace_back(0, p.left.dirichlet_value());
    }
    if (!p.right.is_dirichlet()) {
        const double kb = coef.k(p.domain.b);
        a.add(n, n, -kb * p.right.alpha / p.right.beta);
        sys.rhs[n] -= kb * p.right.gamma / p.right.beta;
    }
    else {
        sys.constrained.emplace_back(n, p.right.dirichlet_value());
    }

    // Eliminate constrained dofs: move their columns to the rhs, identity rows.
    for (const auto& [dof, value] : sys.constrained) {
        const int first_row = std::max(0, dof - a.ku());
        const int last_row = std::min(a.rows() - 1, dof + a.kl());
        for (int r = first_row; r <= last_row; ++r) {
            if (r != dof) {
                sys.rhs[r] -= a.get(r, dof) * value;
                a.set(r, dof, 0.0);
            }
        }
    }
    for (const auto& [dof, value] : sys.constrained) {
        a.clear_row(dof);
        a.set(dof, dof, 1.0);
        sys.rhs[dof] = value;
    }
    return sys;
}

inline SolutionField solve_fem(const ProblemInstance& p, int n_cells, const QuadratureRule& q,
                               bool estimate_condition = false)
{
    StaggeredMesh mesh(p.domain.a, p.domain.b, n_cells);
    const auto sys = assemble_fem(p, mesh, q);
    auto sol = solve_system(sys.matrix, sys.rhs, estimate_condition);
    return SolutionField{Method::fem, mesh.nodes(), std::move(sol.values), Reconstruction::p_linear,
                         std::move(mesh), sol.condition_estimate};
}

inline SolutionField solve_fem(const ProblemInstance& p, int n_cells, const FemOptions& opt = {})
{
    return solve_fem(p, n_cells, QuadratureRule(opt.quadrature_order), opt.estimate_condition);
}

} // namespace convdiff

#endif // CONVDIFF_FEM_HPP
