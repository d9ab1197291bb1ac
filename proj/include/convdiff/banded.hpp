#ifndef CONVDIFF_BANDED_HPP
#define CONVDIFF_BANDED_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace convdiff {

class SingularMatrixError : public std::runtime_error
{
public:
    explicit SingularMatrixError(int pivot_index)
        : std::runtime_error("singular matrix: zero pivot in column " + std::to_string(pivot_index))
        , pivot_(pivot_index)
    {
    }

    [[nodiscard]] int pivot_index() const noexcept { return pivot_; }

private:
    int pivot_;
};

/// Row-major band storage for a rows x cols matrix with kl sub- and ku
/// super-diagonals. Entry (i, j) is addressable iff -kl <= j - i <= ku; any
/// access outside the band throws instead of being dropped.
template <typename T>
class BandedMatrix
{
public:
    BandedMatrix(int n, int kl, int ku)
        : BandedMatrix(n, n, kl, ku)
    {
    }

    BandedMatrix(int rows, int cols, int kl, int ku)
        : rows_(rows)
        , cols_(cols)
        , kl_(kl)
        , ku_(ku)
    {
        if (rows <= 0 || cols <= 0) {
            throw std::invalid_argument("banded: dimensions must be positive");
        }
        if (kl < 0 || ku < 0 || kl >= rows || ku >= cols) {
            throw std::invalid_argument("banded: bandwidths must satisfy 0 <= kl < rows, 0 <= ku < cols");
        }
        data_.assign(static_cast<std::size_t>(rows_) * width(), T{});
    }

    [[nodiscard]] int rows() const noexcept { return rows_; }
    [[nodiscard]] int cols() const noexcept { return cols_; }
    [[nodiscard]] int n() const noexcept { return rows_; }
    [[nodiscard]] int kl() const noexcept { return kl_; }
    [[nodiscard]] int ku() const noexcept { return ku_; }
    [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] bool in_band(int i, int j) const noexcept
    {
        return i >= 0 && i < rows_ && j >= 0 && j < cols_ && j - i >= -kl_ && j - i <= ku_;
    }

    /// First and last column index stored for row i.
    [[nodiscard]] int first_col(int i) const noexcept { return std::max(0, i - kl_); }
    [[nodiscard]] int last_col(int i) const noexcept { return std::min(cols_ - 1, i + ku_); }

    [[nodiscard]] T get(int i, int j) const { return data_[index(i, j)]; }
    void set(int i, int j, T value) { data_[index(i, j)] = value; }
    void add(int i, int j, T value) { data_[index(i, j)] += value; }

    /// Zeroes every stored entry of row i.
    void clear_row(int i)
    {
        for (int j = first_col(i); j <= last_col(i); ++j) {
            set(i, j, T{});
        }
    }

    [[nodiscard]] std::vector<T> multiply(std::span<const T> x) const
    {
        if (static_cast<int>(x.size()) != cols_) {
            throw std::invalid_argument("banded: multiply length mismatch");
        }
        std::vector<T> y(rows_, T{});
        for (int i = 0; i < rows_; ++i) {
            T s{};
            for (int j = first_col(i); j <= last_col(i); ++j) {
                s += get(i, j) * x[j];
            }
            y[i] = s;
        }
        return y;
    }

    /// Max absolute column sum.
    [[nodiscard]] T norm1() const
    {
        std::vector<T> colsum(cols_, T{});
        for (int i = 0; i < rows_; ++i) {
            for (int j = first_col(i); j <= last_col(i); ++j) {
                colsum[j] += std::abs(get(i, j));
            }
        }
        return *std::max_element(colsum.begin(), colsum.end());
    }

    /// Max absolute row sum.
    [[nodiscard]] T norm_inf() const
    {
        T best{};
        for (int i = 0; i < rows_; ++i) {
            T s{};
            for (int j = first_col(i); j <= last_col(i); ++j) {
                s += std::abs(get(i, j));
            }
            best = std::max(best, s);
        }
        return best;
    }

private:
    [[nodiscard]] int width() const noexcept { return kl_ + ku_ + 1; }

    [[nodiscard]] std::size_t index(int i, int j) const
    {
        if (!in_band(i, j)) {
            throw std::out_of_range("banded: entry (" + std::to_string(i) + ", " + std::to_string(j)
                                    + ") is outside the band");
        }
        return static_cast<std::size_t>(i) * width() + (j - i + kl_);
    }

    int rows_;
    int cols_;
    int kl_;
    int ku_;
    std::vector<T> data_;
};

/// Banded LU with row partial pivoting.
///
/// Stored LAPACK-gbtrf style: U keeps upper bandwidth kl + ku (pivoting fill),
/// and L is kept as the sequence of Gauss transforms, so row k's multipliers are
/// never moved by later interchanges. The factors therefore satisfy
/// A = P_0 L_0 P_1 L_1 ... P_{n-1} L_{n-1} U.
template <typename T>
class LuFactors
{
public:
    explicit LuFactors(const BandedMatrix<T>& a)
        : n_(a.n())
        , kl_(a.kl())
        , ku_(a.ku())
    {
        if (!a.square()) {
            throw std::invalid_argument("lu: matrix must be square");
        }
        work_.assign(static_cast<std::size_t>(n_) * width(), T{});
        mult_.assign(static_cast<std::size_t>(n_) * std::max(kl_, 1), T{});
        pivots_.resize(n_);
        for (int i = 0; i < n_; ++i) {
            for (int j = a.first_col(i); j <= a.last_col(i); ++j) {
                w(i, j) = a.get(i, j);
            }
        }
        factor();
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int kl() const noexcept { return kl_; }
    [[nodiscard]] int ku() const noexcept { return ku_; }
    /// Upper bandwidth of U after pivoting.
    [[nodiscard]] int ku_factored() const noexcept { return kl_ + ku_; }

    [[nodiscard]] const std::vector<int>& pivots() const noexcept { return pivots_; }
    /// Multiplier eliminating row k + 1 + t at step k (0 <= t < kl).
    [[nodiscard]] T multiplier(int k, int t) const { return mult_[static_cast<std::size_t>(k) * kl_ + t]; }
    /// U(i, j) for i <= j <= i + kl + ku.
    [[nodiscard]] T upper(int i, int j) const
    {
        if (j < i || j > i + kl_ + ku_ || j >= n_) {
            return T{};
        }
        return work_[static_cast<std::size_t>(i) * width() + (j - i + kl_)];
    }

    [[nodiscard]] std::vector<T> solve(std::span<const T> rhs) const
    {
        check_length(rhs.size());
        std::vector<T> x(rhs.begin(), rhs.end());
        for (int k = 0; k < n_; ++k) {
            if (pivots_[k] != k) {
                std::swap(x[k], x[pivots_[k]]);
            }
            const int span = std::min(kl_, n_ - 1 - k);
            for (int t = 0; t < span; ++t) {
                x[k + 1 + t] -= multiplier(k, t) * x[k];
            }
        }
        for (int i = n_ - 1; i >= 0; --i) {
            T s = x[i];
            const int last = std::min(n_ - 1, i + kl_ + ku_);
            for (int j = i + 1; j <= last; ++j) {
                s -= upper(i, j) * x[j];
            }
            x[i] = s / upper(i, i);
        }
        return x;
    }

    /// Solves A^T x = rhs.
    [[nodiscard]] std::vector<T> solve_transpose(std::span<const T> rhs) const
    {
        check_length(rhs.size());
        std::vector<T> x(rhs.begin(), rhs.end());
        for (int i = 0; i < n_; ++i) {
            T s = x[i];
            for (int j = std::max(0, i - kl_ - ku_); j < i; ++j) {
                s -= upper(j, i) * x[j];
            }
            x[i] = s / upper(i, i);
        }
        for (int k = n_ - 1; k >= 0; --k) {
            const int span = std::min(kl_, n_ - 1 - k);
            for (int t = 0; t < span; ++t) {
                x[k] -= multiplier(k, t) * x[k + 1 + t];
            }
            if (pivots_[k] != k) {
                std::swap(x[k], x[pivots_[k]]);
            }
        }
        return x;
    }

private:
    [[nodiscard]] int width() const noexcept { return 2 * kl_ + ku_ + 1; }

    // Working row i covers columns [i - kl, i + kl + ku].
    T& w(int i, int j) { return work_[static_cast<std::size_t>(i) * width() + (j - i + kl_)]; }

    void check_length(std::size_t len) const
    {
        if (static_cast<int>(len) != n_) {
            throw std::invalid_argument("lu: rhs length " + std::to_string(len) + " does not match n = "
                                        + std::to_string(n_));
        }
    }

    void factor()
    {
        for (int k = 0; k < n_; ++k) {
            const int last_row = std::min(n_ - 1, k + kl_);
            const int last_col = std::min(n_ - 1, k + kl_ + ku_);
            int p = k;
            T best = std::abs(w(k, k));
            for (int r = k + 1; r <= last_row; ++r) {
                if (std::abs(w(r, k)) > best) {
                    best = std::abs(w(r, k));
                    p = r;
                }
            }
            if (best == T{}) {
                throw SingularMatrixError(k);
            }
            pivots_[k] = p;
            if (p != k) {
                for (int j = k; j <= last_col; ++j) {
                    std::swap(w(k, j), w(p, j));
                }
            }
            const T pivot = w(k, k);
            for (int r = k + 1; r <= last_row; ++r) {
                const T m = w(r, k) / pivot;
                mult_[static_cast<std::size_t>(k) * kl_ + (r - k - 1)] = m;
                w(r, k) = T{};
                if (m == T{}) {
                    continue;
                }
                for (int j = k + 1; j <= last_col; ++j) {
                    w(r, j) -= m * w(k, j);
                }
            }
        }
    }

    int n_;
    int kl_;
    int ku_;
    std::vector<T> work_;
    std::vector<T> mult_;
    std::vector<int> pivots_;
};

template <typename T>
LuFactors<T> lu_factor(const BandedMatrix<T>& a)
{
    return LuFactors<T>(a);
}

template <typename T>
std::vector<T> solve(const LuFactors<T>& f, std::span<const T> rhs)
{
    return f.solve(rhs);
}

template <typename T>
std::vector<T> solve(const LuFactors<T>& f, const std::vector<T>& rhs)
{
    return f.solve(std::span<const T>(rhs));
}

/// Estimate of the 1-norm condition number ||A||_1 ||A^-1||_1.
///
/// ||A^-1||_1 comes from Hager's power iteration on A^-1 / A^-T (Higham's
/// variant: at most five sweeps, plus the alternating-sign probe vector). The
/// result is a lower bound on the true condition number.
template <typename T>
T condition_estimate_1norm(const LuFactors<T>& f, const BandedMatrix<T>& a)
{
    const int n = f.n();
    const T anorm = a.norm1();
    auto norm1 = [](const std::vector<T>& v) {
        T s{};
        for (T e : v) {
            s += std::abs(e);
        }
        return s;
    };
    auto signs = [](const std::vector<T>& v) {
        std::vector<T> s(v.size());
        std::transform(v.begin(), v.end(), s.begin(), [](T e) { return e >= T{} ? T{1} : T{-1}; });
        return s;
    };

    std::vector<T> x(n, T{1} / n);
    std::vector<T> y = f.solve(x);
    T est = norm1(y);
    if (n == 1) {
        return anorm * est;
    }
    std::vector<T> xi = signs(y);
    std::vector<T> z = f.solve_transpose(xi);

    for (int iter = 0; iter < 5; ++iter) {
        int j = 0;
        for (int i = 1; i < n; ++i) {
            if (std::abs(z[i]) > std::abs(z[j])) {
                j = i;
            }
        }
        T ztx{};
        for (int i = 0; i < n; ++i) {
            ztx += z[i] * x[i];
        }
        if (std::abs(z[j]) <= ztx) {
            break;
        }
        std::fill(x.begin(), x.end(), T{});
        x[j] = T{1};
        y = f.solve(x);
        const T next = norm1(y);
        std::vector<T> next_xi = signs(y);
        if (next <= est || next_xi == xi) {
            est = std::max(est, next);
            break;
        }
        est = next;
        xi = std::move(next_xi);
        z = f.solve_transpose(xi);
    }

    std::vector<T> alt(n);
    for (int i = 0; i < n; ++i) {
        const T mag = T{1} + static_cast<T>(i) / (n - 1);
        alt[i] = (i % 2 == 0) ? mag : -mag;
    }
    const T alt_est = 2 * norm1(f.solve(alt)) / (3 * n);
    return anorm * std::max(est, alt_est);
}

} // namespace convdiff

#endif // CONVDIFF_BANDED_HPP
