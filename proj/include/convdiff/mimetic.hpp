#ifndef CONVDIFF_MIMETIC_HPP
#define CONVDIFF_MIMETIC_HPP

#include "convdiff/banded.hpp"
#include "convdiff/mesh.hpp"
#include "convdiff/problem.hpp"
#include "convdiff/solution.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace convdiff {

/// Second-order Castillo-Grone gradient, (N+1) x (N+2).
///
/// Maps values on the mimetic points (x_0, x_{1/2}, ..., x_{N-1/2}, x_N) to
/// gradients at the nodes. Interior rows are the compact difference of the two
/// adjacent centers; the boundary rows are the one-sided (-8/3, 3, -1/3) stencil,
/// exact on quadratics.
inline BandedMatrix<double> build_gradient(const StaggeredMesh& mesh)
{
    const int n = mesh.n_cells();
    const double inv_h = 1.0 / mesh.h();
    BandedMatrix<double> g(n + 1, n + 2, 1, 2);
    g.set(0, 0, -8.0 / 3.0 * inv_h);
    g.set(0, 1, 3.0 * inv_h);
    g.set(0, 2, -1.0 / 3.0 * inv_h);
    for (int i = 1; i < n; ++i) {
        g.set(i, i, -inv_h);
        g.set(i, i + 1, inv_h);
    }
    g.set(n, n - 1, 1.0 / 3.0 * inv_h);
    g.set(n, n, -3.0 * inv_h);
    g.set(n, n + 1, 8.0 / 3.0 * inv_h);
    return g;
}

/// Second-order divergence, (N+2) x (N+1): cell differences of nodal values,
/// with zero first and last rows so that D G is square.
inline BandedMatrix<double> build_divergence(const StaggeredMesh& mesh)
{
    const int n = mesh.n_cells();
    const double inv_h = 1.0 / mesh.h();
    BandedMatrix<double> d(n + 2, n + 1, 1, 0);
    for (int c = 0; c < n; ++c) {
        d.set(c + 1, c, -inv_h);
        d.set(c + 1, c + 1, inv_h);
    }
    return d;
}

struct MimeticOperators
{
    BandedMatrix<double> gradient;
    BandedMatrix<double> divergence;
    double h;
};

inline MimeticOperators build_mimetic_operators(const StaggeredMesh& mesh)
{
    return {build_gradient(mesh), build_divergence(mesh), mesh.h()};
}

/// Average of the two nodal gradients bracketing each cell.
inline std::vector<double> gradient_at_centers(std::span<const double> nodal)
{
    if (nodal.size() < 2) {
        throw std::invalid_argument("gradient_at_centers: need at least two nodal values");
    }
    std::vector<double> out(nodal.size() - 1);
    for (std::size_t i = 0; i + 1 < nodal.size(); ++i) {
        out[i] = 0.5 * (nodal[i] + nodal[i + 1]);
    }
    return out;
}

/// Diffusion term of the cell rows.
enum class DiffusionForm
{
    /// D (k G U) with k sampled at the nodes; the convective row then carries
    /// nu - k' so the pair discretizes k u'' + nu u'.
    conservative,
    /// k(x_c) (D G U)_c with nu(x_c) on the convective row.
    nonconservative,
};

/// Which nodal gradient(s) feed the convective term of cell i+1/2.
enum class ConvectionCoupling
{
    /// Row i of G added to system row i, the direct (N+2)-row embedding of
    /// nu G: cell i+1/2 sees (GU)_{i+1}. First order when the convective
    /// coefficient is nonzero.
    row_aligned,
    /// ((GU)_i + (GU)_{i+1}) / 2, second order at the center.
    center_average,
};

struct MimeticOptions
{
    DiffusionForm diffusion = DiffusionForm::conservative;
    ConvectionCoupling convection = ConvectionCoupling::row_aligned;
    bool estimate_condition = false;
};

/// Unknowns (U_0, U_{1/2}, ..., U_{N-1/2}, U_N); kl = ku = 2.
struct MimeticSystem
{
    BandedMatrix<double> matrix;
    std::vector<double> rhs;
};

inline MimeticSystem assemble_mimetic(const ProblemInstance& p, const StaggeredMesh& mesh,
                                      const MimeticOptions& opt = {})
{
    detail::require_nondegenerate(p);
    const int n = mesh.n_cells();
    const auto& coef = p.coefficients;
    const auto& nodes = mesh.nodes();
    const auto& centers = mesh.centers();
    const auto g = build_gradient(mesh);
    const auto d = build_divergence(mesh);

    MimeticSystem sys{BandedMatrix<double>(n + 2, 2, 2), std::vector<double>(n + 2, 0.0)};
    auto& a = sys.matrix;

    // Adds scale * (row i of G) into system row r.
    auto add_gradient_row = [&](int r, int i, double scale) {
        for (int j = g.first_col(i); j <= g.last_col(i); ++j) {
            a.add(r, j, scale * g.get(i, j));
        }
    };

    for (int c = 0; c < n; ++c) {
        const int r = c + 1;
        const double xc = centers[c];
        double convective = coef.nu(xc);
        for (int i = d.first_col(r); i <= d.last_col(r); ++i) {
            const double k = opt.diffusion == DiffusionForm::conservative ? coef.k(nodes[i]) : coef.k(xc);
            add_gradient_row(r, i, d.get(r, i) * k);
        }
        if (opt.diffusion == DiffusionForm::conservative) {
            convective -= coef.k_prime(xc);
        }
        if (convective != 0.0) {
            if (opt.convection == ConvectionCoupling::row_aligned) {
                add_gradient_row(r, c + 1, convective);
            }
            else {
                add_gradient_row(r, c, 0.5 * convective);
                add_gradient_row(r, c + 1, 0.5 * convective);
            }
        }
        sys.rhs[r] = coef.f(xc);
    }

    // alpha u + beta (G u) = gamma; beta = 0 leaves the Dirichlet row alpha U = gamma.
    a.add(0, 0, p.left.alpha);
    if (p.left.beta != 0.0) {
        add_gradient_row(0, 0, p.left.beta);
    }
    sys.rhs[0] = p.left.gamma;
    a.add(n + 1, n + 1, p.right.alpha);
    if (p.right.beta != 0.0) {
        add_gradient_row(n + 1, n, p.right.beta);
    }
    sys.rhs[n + 1] = p.right.gamma;
    return sys;
}

inline SolutionField solve_mimetic(const ProblemInstance& p, int n_cells, const MimeticOptions& opt = {})
{
    StaggeredMesh mesh(p.domain.a, p.domain.b, n_cells);
    const auto sys = assemble_mimetic(p, mesh, opt);
    auto sol = solve_system(sys.matrix, sys.rhs, opt.estimate_condition);
    SolutionField field{Method::mim, mesh.mim_points(), std::move(sol.values), Reconstruction::pc_cells,
                        std::move(mesh), sol.condition_estimate};
    return field;
}

} // namespace convdiff

#endif // CONVDIFF_MIMETIC_HPP
