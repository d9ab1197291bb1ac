#ifndef CONVDIFF_QUADRATURE_HPP
#define CONVDIFF_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace convdiff {

/// Gauss-Legendre rule on the reference element [0, 1]; exact for
/// polynomials of degree <= 2 * order - 1.
class QuadratureRule
{
public:
    explicit QuadratureRule(int order = 3)
        : order_(order)
    {
        // Nodes/weights on [-1, 1], mapped below.
        std::vector<double> xi;
        std::vector<double> wt;
        switch (order) {
        case 2: {
            const double g = 1.0 / std::sqrt(3.0);
            xi = {-g, g};
            wt = {1.0, 1.0};
            break;
        }
        case 3: {
            const double g = std::sqrt(3.0 / 5.0);
            xi = {-g, 0.0, g};
            wt = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
            break;
        }
        case 5: {
            const double inner = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
            const double outer = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
            const double w_inner = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
            const double w_outer = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
            xi = {-outer, -inner, 0.0, inner, outer};
            wt = {w_outer, w_inner, 128.0 / 225.0, w_inner, w_outer};
            break;
        }
        default:
            throw std::invalid_argument("quadrature: supported orders are 2, 3 and 5, got "
                                        + std::to_string(order));
        }
        points_.resize(xi.size());
        weights_.resize(xi.size());
        for (std::size_t q = 0; q < xi.size(); ++q) {
            points_[q] = 0.5 * (xi[q] + 1.0);
            weights_[q] = 0.5 * wt[q];
        }
    }

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] int exact_degree() const noexcept { return 2 * order_ - 1; }
    [[nodiscard]] const std::vector<double>& points() const noexcept { return points_; }
    [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }

    template <typename F>
    [[nodiscard]] double integrate(F&& fn, double lo, double hi) const
    {
        const double len = hi - lo;
        double s = 0.0;
        for (std::size_t q = 0; q < points_.size(); ++q) {
            s += weights_[q] * fn(lo + len * points_[q]);
        }
        return s * len;
    }

private:
    int order_;
    std::vector<double> points_;
    std::vector<double> weights_;
};

} // namespace convdiff

#endif // CONVDIFF_QUADRATURE_HPP
