// Shared fixtures: seeded random banded systems and small manufactured problems.
#ifndef CONVDIFF_TESTS_FIXTURES_HPP
#define CONVDIFF_TESTS_FIXTURES_HPP

#include "convdiff/banded.hpp"
#include "convdiff/problem.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace fixtures {

struct RandomSystem
{
    convdiff::BandedMatrix<double> a;
    std::vector<double> rhs;
};

// Entries uniform in [-1, 1], n <= 200, kl = ku <= 3. With `dominant` the
// diagonal is shifted to make rows strictly dominant; without it partial
// pivoting actually swaps rows.
inline RandomSystem random_banded_system(std::mt19937_64& rng, bool dominant = true)
{
    std::uniform_int_distribution<int> size(1, 200);
    std::uniform_int_distribution<int> band(0, 3);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    const int n = size(rng);
    const int width = std::min(band(rng), n - 1);
    RandomSystem s{convdiff::BandedMatrix<double>(n, width, width), std::vector<double>(n)};
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = s.a.first_col(i); j <= s.a.last_col(i); ++j) {
            const double v = entry(rng);
            s.a.set(i, j, v);
            if (j != i) {
                off += std::abs(v);
            }
        }
        if (dominant) {
            const double d = s.a.get(i, i);
            s.a.set(i, i, (d < 0.0 ? -1.0 : 1.0) * (off + 0.5 + std::abs(d)));
        }
        s.rhs[i] = entry(rng);
    }
    return s;
}

// k u'' + nu u' = f on [0, 1] with u = c0 + c1 x + c2 x^2, left Robin, right
// as requested. Variable k so that k' enters the schemes.
inline convdiff::ProblemInstance polynomial_problem(double c0, double c1, double c2, bool right_dirichlet,
                                                    bool variable_k = false)
{
    convdiff::ProblemInstance p;
    p.name = "poly";
    p.domain = {0.0, 1.0};
    auto& c = p.coefficients;
    if (variable_k) {
        c.k = [](double x) { return 1.0 + 0.5 * x; };
        c.k_prime = [](double) { return 0.5; };
    }
    else {
        c.k = [](double) { return 1.0; };
        c.k_prime = [](double) { return 0.0; };
        c.k_constant = true;
    }
    c.nu = [](double) { return 2.0; };
    c.nu_constant = true;
    const auto k = c.k;
    c.f = [=](double x) { return k(x) * 2.0 * c2 + 2.0 * (c1 + 2.0 * c2 * x); };
    p.exact.u = [=](double x) { return c0 + c1 * x + c2 * x * x; };
    p.exact.u_prime = [=](double x) { return c1 + 2.0 * c2 * x; };
    p.left = {1.0, 1.0, p.exact.u(0.0) + p.exact.u_prime(0.0)};
    if (right_dirichlet) {
        p.right = {1.0, 0.0, p.exact.u(1.0)};
    }
    else {
        p.right = {2.0, 0.5, 2.0 * p.exact.u(1.0) + 0.5 * p.exact.u_prime(1.0)};
    }
    return p;
}

} // namespace fixtures

#endif // CONVDIFF_TESTS_FIXTURES_HPP
