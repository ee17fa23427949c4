#ifndef RSC_SUSPENSION_HPP
#define RSC_SUSPENSION_HPP

#include "rsc/complex.hpp"

namespace rsc {

/**
 * Dimension-preserving suspension model.
 *
 * Cones K from a new apex (label n_vertices()), fills the full simplex on the vertices of K,
 * and keeps the (dim K + 1)-skeleton. The result is homotopy equivalent to the suspension of K
 * up to the truncation, has a complete 1-skeleton, and stays pure and strongly connected
 * whenever K is. Throws InputError if K is empty or zero-dimensional.
 */
SimplicialComplex prime_suspension(const SimplicialComplex& k);

/// r-fold iterate of prime_suspension.
SimplicialComplex prime_suspension(const SimplicialComplex& k, int r);

} // namespace rsc

#endif // RSC_SUSPENSION_HPP
