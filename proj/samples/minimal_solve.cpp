// Solves the boundary-layer problem with all three methods on a coarse and a
// fine mesh and prints errors, showing the centered-scheme wiggles at N = 50.

#include "convdiff/convdiff.hpp"

#include <cstdio>
#include <string>

int main()
{
    using namespace convdiff;
    const auto p = preset(PresetId::ex3_dirichlet);

    std::printf("%-4s %6s %8s %14s %14s %6s\n", "meth", "n", "peclet", "err_max", "err_l2", "osc");
    for (int n : {50, 200, 1000}) {
        const auto pe = peclet(p, n).value;
        const SolutionField fields[] = {solve_fd(p, n), solve_mimetic(p, n), solve_fem(p, n)};
        for (const auto& s : fields) {
            const auto r = evaluate(s, p);
            std::printf("%-4s %6d %8.4f %14.6e %14.6e %6d\n", std::string(to_string(s.method)).c_str(), n, pe, r.err_max, r.err_l2,
                        r.oscillations);
        }
    }
    return 0;
}
