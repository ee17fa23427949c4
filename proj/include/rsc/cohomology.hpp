#ifndef RSC_COHOMOLOGY_HPP
#define RSC_COHOMOLOGY_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rsc/cochain.hpp"

namespace rsc {

/// Representatives of H^k as columns, plus the linear map sending a cocycle to its coordinates.
template <typename Scalar>
struct DegreeBasis {
    int degree = 0;
    Matrix<Scalar> representatives; ///< f_k x b_k
    Matrix<Scalar> reduction;       ///< b_k x f_k; exact on cocycles only

    Index betti() const { return representatives.cols(); }
};

template <typename Scalar>
struct CohomologyClass {
    Cochain<Scalar> representative;
    Vector<Scalar> coordinates;

    int degree() const { return representative.degree(); }
    bool is_zero() const {
        for (Index i = 0; i < coordinates.size(); ++i)
            if (!rsc::is_zero(coordinates(i)))
                return false;
        return true;
    }
};

/**
 * Cohomology of a complex over an exact field.
 *
 * Betti numbers come from coboundary ranks computed at construction. Per-degree bases are
 * built on first use, once, and may be requested concurrently.
 */
template <typename Scalar>
class Cohomology {
public:
    explicit Cohomology(ComplexPtr k);

    const ComplexPtr& complex_ptr() const noexcept { return s_->k; }
    const SimplicialComplex& complex() const noexcept { return *s_->k; }

    int betti(int k) const;
    std::vector<int> betti_numbers() const;

    const DegreeBasis<Scalar>& basis(int k) const;

    /// Coordinates of [z]; zero iff z is a coboundary. Throws InputError if dz != 0.
    Vector<Scalar> reduce(const Cochain<Scalar>& z) const;

    Cochain<Scalar> lift(int k, const Vector<Scalar>& coordinates) const;
    CohomologyClass<Scalar> class_of(Cochain<Scalar> z) const;
    CohomologyClass<Scalar> basis_class(int k, int i) const;
    CohomologyClass<Scalar> product(const CohomologyClass<Scalar>& x, const CohomologyClass<Scalar>& y) const;

private:
    struct State {
        ComplexPtr k;
        std::vector<Index> ranks; ///< rank of the coboundary out of degree k
        std::vector<std::once_flag> once;
        std::vector<std::optional<DegreeBasis<Scalar>>> bases;
    };

    DegreeBasis<Scalar> build(int k) const;
    Index coboundary_rank(int k) const;

    std::shared_ptr<State> s_;
};

template <typename Scalar>
Cohomology<Scalar>::Cohomology(ComplexPtr k) : s_(std::make_shared<State>()) {
    if (!k)
        throw InputError("cohomology needs a complex");
    s_->k = std::move(k);
    const int top = s_->k->dim();
    const std::size_t slots = top < 0 ? 0 : static_cast<std::size_t>(top + 1);
    s_->ranks.resize(slots);
    for (int d = 0; d <= top; ++d)
        s_->ranks[d] = rank(coboundary_matrix<Scalar>(*s_->k, d));
    s_->once = std::vector<std::once_flag>(slots);
    s_->bases.resize(slots);
}

template <typename Scalar>
Index Cohomology<Scalar>::coboundary_rank(int k) const {
    if (k < 0 || k >= static_cast<int>(s_->ranks.size()))
        return 0;
    return s_->ranks[k];
}

template <typename Scalar>
int Cohomology<Scalar>::betti(int k) const {
    if (k < 0 || k > complex().dim())
        return 0;
    return static_cast<int>(static_cast<Index>(complex().count(k)) - coboundary_rank(k) - coboundary_rank(k - 1));
}

template <typename Scalar>
std::vector<int> Cohomology<Scalar>::betti_numbers() const {
    std::vector<int> b;
    for (int k = 0; k <= complex().dim(); ++k)
        b.push_back(betti(k));
    return b;
}

template <typename Scalar>
const DegreeBasis<Scalar>& Cohomology<Scalar>::basis(int k) const {
    if (k < 0 || k > complex().dim()) {
        static const DegreeBasis<Scalar> none{};
        return none;
    }
    std::call_once(s_->once[k], [&] { s_->bases[k] = build(k); });
    return *s_->bases[k];
}

template <typename Scalar>
DegreeBasis<Scalar> Cohomology<Scalar>::build(int k) const {
    const auto& cx = complex();
    const Index fk = static_cast<Index>(cx.count(k));
    DegreeBasis<Scalar> out;
    out.degree = k;
    const Index h = betti(k);
    if (h == 0) {
        out.representatives = Matrix<Scalar>(fk, 0);
        out.reduction = Matrix<Scalar>(0, fk);
        return out;
    }

    // Cocycles Z, a basis of coboundaries B, and the cocycles independent of B modulo B.
    const Matrix<Scalar> z = nullspace(coboundary_matrix<Scalar>(cx, k));
    Matrix<Scalar> b(fk, 0);
    if (k > 0) {
        const RowMatrix<Scalar> prev = coboundary_matrix<Scalar>(cx, k - 1);
        const auto cols = independent_columns(prev);
        b.resize(fk, static_cast<Index>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            b.col(static_cast<Index>(j)) = prev.col(cols[j]);
    }
    const Index nb = b.cols();
    Matrix<Scalar> bz(fk, nb + z.cols());
    bz << b, z;
    const auto pivots = independent_columns(bz);
    Matrix<Scalar> m(fk, nb + h);
    m.leftCols(nb) = b;
    Index col = nb;
    for (auto c : pivots)
        if (c >= nb)
            m.col(col++) = bz.col(c);
    if (col != nb + h)
        throw std::logic_error("cohomology basis size disagrees with the Betti number");
    out.representatives = m.rightCols(h);

    // A cocycle z equals m [y; x] for unique y, x. Restricting to rows where m is invertible
    // gives [y; x] = m_P^{-1} z_P, so the last h rows of m_P^{-1} read off x.
    const auto rows = independent_columns(Matrix<Scalar>(m.transpose()));
    Matrix<Scalar> mp(nb + h, nb + h);
    for (std::size_t r = 0; r < rows.size(); ++r)
        mp.row(static_cast<Index>(r)) = m.row(rows[r]);
    const Matrix<Scalar> inv = inverse(mp);
    out.reduction = Matrix<Scalar>::Zero(h, fk);
    for (std::size_t r = 0; r < rows.size(); ++r)
        out.reduction.col(rows[r]) = inv.block(nb, static_cast<Index>(r), h, 1);
    return out;
}

template <typename Scalar>
Vector<Scalar> Cohomology<Scalar>::reduce(const Cochain<Scalar>& z) const {
    if (z.complex_ptr() != s_->k && !(z.complex() == complex()))
        throw InputError("cochain lives on a different complex");
    if (!coboundary(z).is_zero())
        throw InputError("cochain is not a cocycle");
    const auto& basis_k = basis(z.degree());
    if (basis_k.betti() == 0)
        return Vector<Scalar>(0);
    return basis_k.reduction * z.values();
}

template <typename Scalar>
Cochain<Scalar> Cohomology<Scalar>::lift(int k, const Vector<Scalar>& coordinates) const {
    const auto& basis_k = basis(k);
    if (coordinates.size() != basis_k.betti())
        throw InputError("coordinate vector has the wrong length");
    if (basis_k.betti() == 0)
        return Cochain<Scalar>(complex_ptr(), k);
    return Cochain<Scalar>(complex_ptr(), k, basis_k.representatives * coordinates);
}

template <typename Scalar>
CohomologyClass<Scalar> Cohomology<Scalar>::class_of(Cochain<Scalar> z) const {
    auto coords = reduce(z);
    return {std::move(z), std::move(coords)};
}

template <typename Scalar>
CohomologyClass<Scalar> Cohomology<Scalar>::basis_class(int k, int i) const {
    const auto& basis_k = basis(k);
    if (i < 0 || i >= basis_k.betti())
        throw InputError("basis index out of range");
    Vector<Scalar> e = Vector<Scalar>::Zero(basis_k.betti());
    e(i) = Scalar(1);
    return {Cochain<Scalar>(complex_ptr(), k, basis_k.representatives.col(i)), std::move(e)};
}

template <typename Scalar>
CohomologyClass<Scalar> Cohomology<Scalar>::product(const CohomologyClass<Scalar>& x,
                                                    const CohomologyClass<Scalar>& y) const {
    return class_of(cup(x.representative, y.representative));
}

template <typename Scalar>
std::vector<int> betti(const SimplicialComplex& k) {
    return Cohomology<Scalar>(share(k)).betti_numbers();
}

std::vector<int> betti(const SimplicialComplex& k, Field field);

/**
 * Largest r such that some product of r positive-degree classes is non-zero; 0 when there is
 * no positive-degree cohomology. For a disconnected complex this is the maximum over its
 * components, since products of classes supported on different components vanish.
 */
template <typename Scalar>
int cup_length(const Cohomology<Scalar>& h) {
    const int top = h.complex().dim();
    // Coordinates (as columns) spanning the r-fold products, per degree.
    std::vector<Matrix<Scalar>> level(static_cast<std::size_t>(std::max(top + 1, 0)));
    bool any = false;
    for (int k = 1; k <= top; ++k) {
        const Index b = h.betti(k);
        level[k] = Matrix<Scalar>::Identity(b, b);
        any = any || b > 0;
    }
    if (!any)
        return 0;
    int r = 1;
    while (true) {
        std::vector<Matrix<Scalar>> next(level.size());
        bool nonzero = false;
        for (int m = 2; m <= top; ++m) {
            const Index target = h.betti(m);
            std::vector<Vector<Scalar>> products;
            if (target > 0) {
                for (int a = 1; a < m; ++a) {
                    const int b = m - a;
                    if (level[a].cols() == 0 || h.betti(b) == 0)
                        continue;
                    for (Index i = 0; i < level[a].cols(); ++i) {
                        const auto x = h.lift(a, level[a].col(i));
                        for (Index j = 0; j < h.betti(b); ++j) {
                            auto c = h.reduce(cup(x, h.basis_class(b, j).representative));
                            products.push_back(std::move(c));
                        }
                    }
                }
            }
            Matrix<Scalar> span(target, static_cast<Index>(products.size()));
            for (std::size_t i = 0; i < products.size(); ++i)
                span.col(static_cast<Index>(i)) = products[i];
            const auto cols = independent_columns(span);
            next[m].resize(target, static_cast<Index>(cols.size()));
            for (std::size_t i = 0; i < cols.size(); ++i)
                next[m].col(static_cast<Index>(i)) = span.col(cols[i]);
            nonzero = nonzero || !cols.empty();
        }
        if (!nonzero)
            return r;
        level = std::move(next);
        ++r;
    }
}

template <typename Scalar>
int cup_length(const SimplicialComplex& k) {
    return cup_length(Cohomology<Scalar>(share(k)));
}

int cup_length(const SimplicialComplex& k, Field field);

extern template class Cohomology<Rational>;
extern template class Cohomology<F2>;
extern template class Cohomology<F3>;
extern template class Cohomology<F5>;
extern template class Cohomology<F7>;

} // namespace rsc

#endif // RSC_COHOMOLOGY_HPP
