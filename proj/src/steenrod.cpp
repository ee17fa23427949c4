#include "rsc/steenrod.hpp"

namespace rsc {

Cochain<F2> sq_cochain(const Cochain<F2>& z, int i) {
    if (i < 0)
        throw InputError("Steenrod square index must be non-negative");
    const int k = z.degree();
    if (i > k)
        return Cochain<F2>(z.complex_ptr(), k + i);
    return cup_i(z, z, k - i);
}

CohomologyClass<F2> sq(const Cohomology<F2>& h, int i, const CohomologyClass<F2>& x) {
    return h.class_of(sq_cochain(x.representative, i));
}

Matrix<F2> sq_matrix(const Cohomology<F2>& h, int i, int k) {
    const Index src = h.betti(k);
    const Index dst = h.betti(k + i);
    Matrix<F2> m = Matrix<F2>::Zero(dst, src);
    if (dst == 0)
        return m;
    for (Index j = 0; j < src; ++j)
        m.col(j) = sq(h, i, h.basis_class(k, static_cast<int>(j))).coordinates;
    return m;
}

namespace {

bool nonzero_map(const SimplicialComplex& k, int i, int d) {
    if (i < 0 || d - i < 0)
        return false;
    Cohomology<F2> h(share(k));
    if (h.betti(d - i) == 0 || h.betti(d) == 0)
        return false;
    return rank(sq_matrix(h, i, d - i)) > 0;
}

} // namespace

bool steenrod_nontrivial(const SimplicialComplex& k, int i, int d) {
    return nonzero_map(k, i, d);
}

bool steenrod_nontrivial_on_components(const SimplicialComplex& k, int i, int d) {
    if (i < 0 || d - i < 0 || d > k.dim())
        return false;
    if (d >= 1) {
        bool any = false;
        for (const auto& c : strong_components(skeleton(k, d), d)) {
            if (nonzero_map(c, i, d)) {
                any = true;
                break;
            }
        }
        if (!any)
            return false;
    }
    return nonzero_map(k, i, d);
}

void require_f2(Field field) {
    if (field.characteristic != 2)
        throw InputError("Steenrod squares need --field f2 (got " + field.name() + ")");
}

} // namespace rsc
