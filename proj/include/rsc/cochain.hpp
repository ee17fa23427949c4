#ifndef RSC_COCHAIN_HPP
#define RSC_COCHAIN_HPP

#include <type_traits>
#include <utility>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/errors.hpp"
#include "rsc/linalg.hpp"

namespace rsc {

/**
 * A degree-k cochain on a fixed complex: one field value per k-simplex, indexed like
 * K.simplices(k). Degrees above dim K are allowed and carry no values.
 */
template <typename Scalar>
class Cochain {
public:
    Cochain(ComplexPtr k, int degree) : k_(std::move(k)), degree_(degree) {
        if (!k_)
            throw InputError("cochain needs a complex");
        if (degree < 0)
            throw InputError("negative cochain degree");
        values_ = Vector<Scalar>::Zero(static_cast<Index>(k_->count(degree)));
    }

    Cochain(ComplexPtr k, int degree, Vector<Scalar> values) : Cochain(std::move(k), degree) {
        if (values.size() != values_.size())
            throw InputError("cochain value vector has the wrong length");
        values_ = std::move(values);
    }

    /// The cochain that is 1 on s and 0 elsewhere.
    static Cochain indicator(ComplexPtr k, const Simplex& s) {
        Cochain c(std::move(k), s.dim());
        c.values_(c.index(s)) = Scalar(1);
        return c;
    }

    int degree() const noexcept { return degree_; }
    const SimplicialComplex& complex() const noexcept { return *k_; }
    const ComplexPtr& complex_ptr() const noexcept { return k_; }
    const Vector<Scalar>& values() const noexcept { return values_; }
    Vector<Scalar>& values() noexcept { return values_; }

    /// Value on a k-simplex of the complex; throws InputError otherwise.
    const Scalar& operator()(const Simplex& s) const { return values_(index(s)); }
    Scalar& operator()(const Simplex& s) { return values_(index(s)); }

    bool is_zero() const {
        for (Index i = 0; i < values_.size(); ++i)
            if (!rsc::is_zero(values_(i)))
                return false;
        return true;
    }

    bool same_ambient(const Cochain& o) const { return k_ == o.k_ || *k_ == *o.k_; }

    Cochain& operator+=(const Cochain& o) {
        check_compatible(o);
        values_ += o.values_;
        return *this;
    }
    Cochain& operator-=(const Cochain& o) {
        check_compatible(o);
        values_ -= o.values_;
        return *this;
    }
    Cochain& operator*=(const Scalar& s) {
        values_ *= s;
        return *this;
    }

    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator-(Cochain a) {
        a.values_ = -a.values_;
        return a;
    }
    friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree_ == b.degree_ && a.same_ambient(b) && a.values_ == b.values_;
    }

private:
    Index index(const Simplex& s) const {
        if (s.dim() != degree_)
            throw InputError("simplex " + s.to_string() + " has the wrong dimension for this cochain");
        auto idx = k_->index_of(s);
        if (!idx)
            throw InputError("simplex " + s.to_string() + " is not in the complex");
        return static_cast<Index>(*idx);
    }

    void check_compatible(const Cochain& o) const {
        if (degree_ != o.degree_ || !same_ambient(o))
            throw InputError("cochains live on different complexes or degrees");
    }

    ComplexPtr k_;
    int degree_;
    Vector<Scalar> values_;
};

/// Matrix of the coboundary C^k -> C^{k+1}: rows are (k+1)-simplices, columns k-simplices.
template <typename Scalar>
RowMatrix<Scalar> coboundary_matrix(const SimplicialComplex& k, int degree) {
    const auto& cols = k.simplices(degree);
    const auto& rows = k.simplices(degree + 1);
    RowMatrix<Scalar> d = RowMatrix<Scalar>::Zero(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t j = 0; j < rows[r].size(); ++j) {
            const auto c = *k.index_of(rows[r].face_without(j));
            d(static_cast<Index>(r), static_cast<Index>(c)) = (j % 2 == 0) ? Scalar(1) : Scalar(-1);
        }
    }
    return d;
}

/// (dc)(v0..v_{k+1}) = sum_j (-1)^j c(v0..^vj..v_{k+1}).
template <typename Scalar>
Cochain<Scalar> coboundary(const Cochain<Scalar>& c) {
    const auto& k = c.complex();
    Cochain<Scalar> out(c.complex_ptr(), c.degree() + 1);
    const auto& top = k.simplices(c.degree() + 1);
    for (std::size_t r = 0; r < top.size(); ++r) {
        Scalar sum(0);
        for (std::size_t j = 0; j < top[r].size(); ++j) {
            const Scalar& v = c(top[r].face_without(j));
            if (j % 2 == 0)
                sum += v;
            else
                sum -= v;
        }
        out.values()(static_cast<Index>(r)) = sum;
    }
    return out;
}

/// Front-face times back-face: (a u b)(v0..v_{p+q}) = a(v0..vp) b(vp..v_{p+q}).
template <typename Scalar>
Cochain<Scalar> cup(const Cochain<Scalar>& a, const Cochain<Scalar>& b) {
    if (!a.same_ambient(b))
        throw InputError("cup product of cochains on different complexes");
    const int p = a.degree(), q = b.degree();
    Cochain<Scalar> out(a.complex_ptr(), p + q);
    const auto& top = a.complex().simplices(p + q);
    for (std::size_t r = 0; r < top.size(); ++r) {
        const Scalar& x = a(top[r].slice(0, p));
        if (is_zero(x))
            continue;
        out.values()(static_cast<Index>(r)) = x * b(top[r].slice(p, p + q));
    }
    return out;
}

namespace detail {

/// Calls fn(front, back) for every term of Steenrod's cup-i formula on a simplex with
/// vertices 0..n (n = p + q - i): for u0 < ... < ui in {0..n}, cut [0, n] at the u's into
/// intervals I0 = [0,u0], I1 = [u0,u1], ..., I_{i+1} = [ui,n]; `front` is the union of the
/// even intervals and must have p+1 vertices, `back` the union of the odd ones with q+1.
template <typename Fn>
void cup_i_terms(int n, int p, int q, int i, Fn&& fn) {
    std::vector<int> u(static_cast<std::size_t>(i + 1));
    for (int j = 0; j <= i; ++j)
        u[j] = j;
    std::vector<int> front, back;
    while (true) {
        front.clear();
        back.clear();
        int start = 0;
        for (int j = 0; j <= i + 1; ++j) {
            const int end = j <= i ? u[j] : n;
            auto& dst = (j % 2 == 0) ? front : back;
            for (int v = start; v <= end; ++v)
                if (dst.empty() || dst.back() < v)
                    dst.push_back(v);
            start = end;
        }
        if (static_cast<int>(front.size()) == p + 1 && static_cast<int>(back.size()) == q + 1)
            fn(front, back);

        int j = i;
        while (j >= 0 && u[j] == n - (i - j))
            --j;
        if (j < 0)
            break;
        ++u[j];
        for (int t = j + 1; t <= i; ++t)
            u[t] = u[t - 1] + 1;
    }
}

inline Simplex pick(const Simplex& s, const std::vector<int>& positions) {
    std::vector<Vertex> v;
    v.reserve(positions.size());
    for (int pos : positions)
        v.push_back(s[static_cast<std::size_t>(pos)]);
    return Simplex(std::move(v));
}

} // namespace detail

/// Steenrod's cup-i product over F2, of degree |a| + |b| - i. Requires 0 <= i <= min(|a|, |b|).
template <typename Scalar>
    requires std::is_same_v<Scalar, F2>
Cochain<Scalar> cup_i(const Cochain<Scalar>& a, const Cochain<Scalar>& b, int i) {
    if (!a.same_ambient(b))
        throw InputError("cup-i product of cochains on different complexes");
    const int p = a.degree(), q = b.degree();
    if (i < 0 || i > std::min(p, q))
        throw InputError("cup-" + std::to_string(i) + " needs 0 <= i <= min(deg a, deg b)");
    const int n = p + q - i;
    Cochain<Scalar> out(a.complex_ptr(), n);
    const auto& top = a.complex().simplices(n);
    for (std::size_t r = 0; r < top.size(); ++r) {
        Scalar sum(0);
        detail::cup_i_terms(n, p, q, i, [&](const std::vector<int>& front, const std::vector<int>& back) {
            const Scalar& x = a(detail::pick(top[r], front));
            if (!is_zero(x))
                sum += x * b(detail::pick(top[r], back));
        });
        out.values()(static_cast<Index>(r)) = sum;
    }
    return out;
}

/// Pullback along the inclusion of a subcomplex.
template <typename Scalar>
Cochain<Scalar> restrict_to(const Cochain<Scalar>& c, ComplexPtr sub) {
    Cochain<Scalar> out(std::move(sub), c.degree());
    const auto& simplices = out.complex().simplices(c.degree());
    for (std::size_t r = 0; r < simplices.size(); ++r)
        out.values()(static_cast<Index>(r)) = c(simplices[r]);
    return out;
}

} // namespace rsc

#endif // RSC_COCHAIN_HPP
