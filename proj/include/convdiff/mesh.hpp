#ifndef CONVDIFF_MESH_HPP
#define CONVDIFF_MESH_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace convdiff {

/// Uniform staggered 1-D mesh.
///
/// Nodes x_0..x_N bound the N cells; centers sit at the cell midpoints. The
/// mimetic unknowns live on (x_0, x_{1/2}, ..., x_{N-1/2}, x_N), i.e. the
/// centers bracketed by the two boundary nodes.
class StaggeredMesh
{
public:
    StaggeredMesh(double a, double b, int n_cells)
        : a_(a)
        , b_(b)
        , n_(n_cells)
    {
        if (!(a < b)) {
            throw std::invalid_argument("mesh: require a < b");
        }
        if (n_cells < 2) {
            throw std::invalid_argument("mesh: require at least 2 cells, got "
                                        + std::to_string(n_cells));
        }
        h_ = (b - a) / n_cells;
        nodes_.resize(n_ + 1);
        for (int i = 0; i <= n_; ++i) {
            nodes_[i] = a + i * h_;
        }
        nodes_[n_] = b;
        centers_.resize(n_);
        for (int i = 0; i < n_; ++i) {
            centers_[i] = (nodes_[i] + nodes_[i + 1]) / 2;
        }
        mim_points_.reserve(n_ + 2);
        mim_points_.push_back(a);
        mim_points_.insert(mim_points_.end(), centers_.begin(), centers_.end());
        mim_points_.push_back(b);
    }

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] int n_cells() const noexcept { return n_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] const std::vector<double>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<double>& centers() const noexcept { return centers_; }
    [[nodiscard]] const std::vector<double>& mim_points() const noexcept { return mim_points_; }

private:
    double a_;
    double b_;
    int n_;
    double h_ = 0.0;
    std::vector<double> nodes_;
    std::vector<double> centers_;
    std::vector<double> mim_points_;
};

inline StaggeredMesh build_mesh(double a, double b, int n_cells) { return {a, b, n_cells}; }

} // namespace convdiff

#endif // CONVDIFF_MESH_HPP
