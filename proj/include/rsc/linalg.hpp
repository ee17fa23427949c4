#ifndef RSC_LINALG_HPP
#define RSC_LINALG_HPP

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rsc/field.hpp"

namespace rsc {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

enum class Reduction { echelon, reduced };

/// Row echelon form with the pivot column of each leading row.
template <typename Scalar>
struct Echelon {
    RowMatrix<Scalar> matrix;
    std::vector<Index> pivots;

    Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

/// In-place Gauss-Jordan elimination over an exact field. Row operations touch only the
/// non-zero entries of the pivot row, which keeps sparse coboundary matrices cheap.
template <typename Scalar>
std::vector<Index> eliminate(RowMatrix<Scalar>& a, Reduction mode) {
    const Index rows = a.rows();
    const Index cols = a.cols();
    std::vector<Index> pivots;
    std::vector<Index> support;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = -1;
        for (Index i = r; i < rows; ++i) {
            if (!is_zero(a(i, c))) {
                p = i;
                break;
            }
        }
        if (p < 0)
            continue;
        if (p != r)
            a.row(p).swap(a.row(r));

        const Scalar inv = Scalar(1) / a(r, c);
        a(r, c) = Scalar(1);
        support.clear();
        for (Index j = c + 1; j < cols; ++j) {
            if (!is_zero(a(r, j))) {
                a(r, j) *= inv;
                support.push_back(j);
            }
        }
        const Index first = mode == Reduction::reduced ? 0 : r + 1;
        for (Index i = first; i < rows; ++i) {
            if (i == r || is_zero(a(i, c)))
                continue;
            const Scalar f = a(i, c);
            a(i, c) = Scalar(0);
            for (Index j : support)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

template <typename Derived>
Echelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m,
                                             Reduction mode = Reduction::reduced) {
    using Scalar = typename Derived::Scalar;
    Echelon<Scalar> e{RowMatrix<Scalar>(m), {}};
    e.pivots = detail::eliminate(e.matrix, mode);
    return e;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return row_reduce(m, Reduction::echelon).rank();
}

/// Columns form a basis of {x : m x = 0}.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const Index n = m.cols();
    if (m.rows() == 0)
        return Matrix<Scalar>::Identity(n, n);
    const auto e = row_reduce(m, Reduction::reduced);
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, n - e.rank());
    Index col = 0;
    for (Index f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        basis(f, col) = Scalar(1);
        for (Index k = 0; k < e.rank(); ++k)
            basis(e.pivots[k], col) = -e.matrix(k, f);
        ++col;
    }
    return basis;
}

/// Indices of the leftmost maximal linearly independent set of columns.
template <typename Derived>
std::vector<Index> independent_columns(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() == 0 || m.cols() == 0)
        return {};
    return row_reduce(m, Reduction::echelon).pivots;
}

/// Inverse of a square invertible matrix; throws InputError if singular.
template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const Index n = m.rows();
    if (m.cols() != n)
        throw InputError("inverse of a non-square matrix");
    RowMatrix<Scalar> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = RowMatrix<Scalar>::Identity(n, n);
    const auto pivots = detail::eliminate(aug, Reduction::reduced);
    if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] >= n))
        throw InputError("matrix is singular");
    return aug.rightCols(n);
}

/// Solves m x = b for one solution, or returns false when b is not in the column space.
template <typename Derived, typename VecDerived>
bool solve(const Eigen::MatrixBase<Derived>& m, const Eigen::MatrixBase<VecDerived>& b,
           Vector<typename Derived::Scalar>& x) {
    using Scalar = typename Derived::Scalar;
    const Index n = m.cols();
    RowMatrix<Scalar> aug(m.rows(), n + 1);
    aug.leftCols(n) = m;
    aug.col(n) = b;
    const auto pivots = detail::eliminate(aug, Reduction::reduced);
    x = Vector<Scalar>::Zero(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == n)
            return false;
        x(pivots[k]) = aug(static_cast<Index>(k), n);
    }
    return true;
}

} // namespace rsc

#endif // RSC_LINALG_HPP
