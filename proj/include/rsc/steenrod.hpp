#ifndef RSC_STEENROD_HPP
#define RSC_STEENROD_HPP

#include "rsc/cohomology.hpp"

namespace rsc {

/// Cochain-level square: z u_{k-i} z for a degree-k cochain z, and 0 (in degree k+i) if i > k.
Cochain<F2> sq_cochain(const Cochain<F2>& z, int i);

/// Sq^i on a mod-2 class; the result does not depend on the representative.
CohomologyClass<F2> sq(const Cohomology<F2>& h, int i, const CohomologyClass<F2>& x);

/// Matrix of Sq^i : H^k -> H^{k+i} in the chosen bases (b_{k+i} x b_k).
Matrix<F2> sq_matrix(const Cohomology<F2>& h, int i, int k);

/// Whether Sq^i : H^{d-i}(K) -> H^d(K) is non-zero, computed on K directly.
bool steenrod_nontrivial(const SimplicialComplex& k, int i, int d);

/**
 * Same answer as steenrod_nontrivial, but first looks at the strong components of the
 * d-skeleton: if Sq^i vanishes on each of them it vanishes on K and the global computation
 * is skipped.
 */
bool steenrod_nontrivial_on_components(const SimplicialComplex& k, int i, int d);

/// Throws InputError unless `field` is F2; Steenrod squares are only defined mod 2 here.
void require_f2(Field field);

} // namespace rsc

#endif // RSC_STEENROD_HPP
