#include "convdiff/convdiff.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace convdiff;

namespace {

double max_nodal_error(const SolutionField& s, const ExactSolution& exact)
{
    double e = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        e = std::max(e, std::abs(s.values[i] - exact.u(s.locations[i])));
    }
    return e;
}

} // namespace

TEST(AssembleFd, PoissonRows)
{
    auto p = fixtures::polynomial_problem(0.0, 0.0, 1.0, true);
    p.coefficients.nu = [](double) { return 0.0; };
    p.coefficients.f = [](double x) { return 1.0 + x; };
    p.left = {1.0, 0.0, 0.0};
    const StaggeredMesh m(0.0, 1.0, 8);
    const auto sys = assemble_fd(p, m);
    const double h = m.h();
    for (int i = 1; i < 8; ++i) {
        EXPECT_DOUBLE_EQ(sys.matrix.get(i, i - 1), 1.0);
        EXPECT_DOUBLE_EQ(sys.matrix.get(i, i), -2.0);
        EXPECT_DOUBLE_EQ(sys.matrix.get(i, i + 1), 1.0);
        EXPECT_DOUBLE_EQ(sys.matrix.get(i, i - 1) + sys.matrix.get(i, i) + sys.matrix.get(i, i + 1), 0.0);
        EXPECT_NEAR(sys.rhs[i], h * h * (1.0 + m.nodes()[i]), 1e-15);
    }
    EXPECT_DOUBLE_EQ(sys.matrix.get(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(sys.matrix.get(0, 1), 0.0);
    EXPECT_DOUBLE_EQ(sys.rhs[0], 0.0);
    EXPECT_DOUBLE_EQ(sys.matrix.get(8, 8), 1.0);
    EXPECT_DOUBLE_EQ(sys.rhs[8], p.right.gamma);
}

TEST(AssembleFd, BoundaryLayerRowSignature)
{
    const auto p = preset(PresetId::ex3_dirichlet);
    const auto sys = assemble_fd(p, StaggeredMesh(0.0, 1.0, 50));
    EXPECT_NEAR(sys.matrix.get(10, 9), 2.157, 1e-12);
    EXPECT_NEAR(sys.matrix.get(10, 10), -2.104, 1e-12);
    EXPECT_NEAR(sys.matrix.get(10, 11), -0.053, 1e-12);
}

TEST(AssembleFd, RobinRowsEliminateGhostNodes)
{
    // Build the i = 0 and i = N stencils with a ghost unknown and substitute the
    // centered boundary difference by hand.
    const auto p = preset(PresetId::ex1);
    const int n = 10;
    const StaggeredMesh m(0.0, 1.0, n);
    const double h = m.h();
    const auto sys = assemble_fd(p, m);
    const auto& c = p.coefficients;

    {
        const double k = c.k(0.0);
        const double lo = k - c.nu(0.0) * h / 2;
        const double hi = k + c.nu(0.0) * h / 2;
        // U_{-1} = U_1 + s (alpha U_0 - gamma), s = 2h / beta
        const double s = 2 * h / p.left.beta;
        EXPECT_NEAR(sys.matrix.get(0, 0), -2 * k + lo * s * p.left.alpha, 1e-12);
        EXPECT_NEAR(sys.matrix.get(0, 1), hi + lo, 1e-12);
        EXPECT_NEAR(sys.rhs[0], h * h * c.f(0.0) + lo * s * p.left.gamma, 1e-12);
    }
    {
        const double k = c.k(1.0);
        const double lo = k - c.nu(1.0) * h / 2;
        const double hi = k + c.nu(1.0) * h / 2;
        // U_{N+1} = U_{N-1} + s (gamma - alpha U_N)
        const double s = 2 * h / p.right.beta;
        EXPECT_NEAR(sys.matrix.get(n, n - 1), lo + hi, 1e-12);
        EXPECT_NEAR(sys.matrix.get(n, n), -2 * k - hi * s * p.right.alpha, 1e-12);
        EXPECT_NEAR(sys.rhs[n], h * h * c.f(1.0) - hi * s * p.right.gamma, 1e-12);
    }
}

TEST(SolveFd, ExactOnLinears)
{
    for (bool dirichlet : {true, false}) {
        for (bool variable_k : {false, true}) {
            const auto p = fixtures::polynomial_problem(2.0, -1.3, 0.0, dirichlet, variable_k);
            for (int n : {2, 9, 200}) {
                const auto s = solve_fd(p, n);
                EXPECT_EQ(s.reconstruction, Reconstruction::pc_dual);
                EXPECT_LE(max_nodal_error(s, p.exact), 1e-11) << dirichlet << variable_k << " n " << n;
            }
        }
    }
}

TEST(SolveFd, ExactOnQuadraticsWithDirichlet)
{
    auto p = fixtures::polynomial_problem(0.5, 1.0, -2.0, true, true);
    p.left = {1.0, 0.0, p.exact.u(0.0)};
    for (int n : {4, 33}) {
        EXPECT_LE(max_nodal_error(solve_fd(p, n), p.exact), 1e-10);
    }
}

TEST(SolveFd, AgreesWithFemOnBoundaryLayer)
{
    const auto p = preset(PresetId::ex3_dirichlet);
    for (int n : {50, 200, 1000}) {
        const auto fd = solve_fd(p, n);
        const auto fem = solve_fem(p, n);
        double diff = 0.0;
        double scale = 0.0;
        for (std::size_t i = 0; i < fd.values.size(); ++i) {
            diff = std::max(diff, std::abs(fd.values[i] - fem.values[i]));
            scale = std::max(scale, std::abs(fem.values[i]));
        }
        EXPECT_LE(diff / scale, 1e-10) << "n " << n;
    }
}

TEST(SolveFd, SecondOrderOnEx1)
{
    const auto p = preset(PresetId::ex1);
    const double e500 = max_norm_error(solve_fd(p, 500), p.exact);
    const double e1000 = max_norm_error(solve_fd(p, 1000), p.exact);
    EXPECT_NEAR(std::log2(e500 / e1000), 1.999944, 0.02);
}

TEST(SolveFd, RobinBoundaryLayerConverges)
{
    // The centered ghost-node closure stays convergent on the Robin variant of
    // the boundary-layer problem (roughly second order).
    const auto p = preset(PresetId::ex3_robin);
    const double e1 = max_norm_error(solve_fd(p, 1000), p.exact);
    const double e2 = max_norm_error(solve_fd(p, 2000), p.exact);
    EXPECT_LT(e2, e1);
    EXPECT_NEAR(std::log2(e1 / e2), 1.95, 0.1);
}
