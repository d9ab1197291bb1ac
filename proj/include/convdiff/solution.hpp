#ifndef CONVDIFF_SOLUTION_HPP
#define CONVDIFF_SOLUTION_HPP

#include "convdiff/banded.hpp"
#include "convdiff/mesh.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace convdiff {

enum class Method
{
    fd,
    mim,
    fem,
};

inline constexpr Method all_methods[] = {Method::fd, Method::mim, Method::fem};

inline std::string_view to_string(Method m)
{
    switch (m) {
    case Method::fd:
        return "fd";
    case Method::mim:
        return "mim";
    case Method::fem:
        return "fem";
    }
    return "?";
}

inline Method parse_method(std::string_view name)
{
    for (auto m : all_methods) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown method '" + std::string(name) + "' (expected fd, mim or fem)");
}

/// How discrete values are extended to a function on [a, b] for the L2 error.
enum class Reconstruction
{
    pc_cells, ///< center value constant over its cell (mimetic)
    pc_dual,  ///< nodal value constant over [x_i - h/2, x_i + h/2] clipped to [a, b]
    p_linear, ///< piecewise-linear nodal interpolant
    pc_left,  ///< nodal value x_i constant over [x_i, x_{i+1}]
};

inline std::string_view to_string(Reconstruction r)
{
    switch (r) {
    case Reconstruction::pc_cells:
        return "pc_cells";
    case Reconstruction::pc_dual:
        return "pc_dual";
    case Reconstruction::p_linear:
        return "p_linear";
    case Reconstruction::pc_left:
        return "pc_left";
    }
    return "?";
}

inline constexpr Reconstruction default_reconstruction(Method m)
{
    switch (m) {
    case Method::fd:
        return Reconstruction::pc_dual;
    case Method::mim:
        return Reconstruction::pc_cells;
    case Method::fem:
        return Reconstruction::p_linear;
    }
    return Reconstruction::pc_dual;
}

struct SolutionField
{
    Method method = Method::fd;
    std::vector<double> locations;
    std::vector<double> values;
    Reconstruction reconstruction = Reconstruction::pc_dual;
    StaggeredMesh mesh;
    std::optional<double> condition_estimate;
};

struct SystemSolution
{
    std::vector<double> values;
    std::optional<double> condition_estimate;
};

/// Factor and solve A x = rhs; optionally estimate kappa_1(A) from the same factors.
inline SystemSolution solve_system(const BandedMatrix<double>& a, const std::vector<double>& rhs,
                                   bool estimate_condition = false)
{
    const auto lu = lu_factor(a);
    SystemSolution out{lu.solve(rhs), std::nullopt};
    if (estimate_condition) {
        out.condition_estimate = condition_estimate_1norm(lu, a);
    }
    return out;
}

} // namespace convdiff

#endif // CONVDIFF_SOLUTION_HPP
