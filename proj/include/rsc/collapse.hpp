#ifndef RSC_COLLAPSE_HPP
#define RSC_COLLAPSE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rsc/complex.hpp"

namespace rsc {

/// (sigma, tau): sigma is a codimension-one face of tau and tau is its only proper coface.
using FreePair = std::pair<Simplex, Simplex>;

std::vector<FreePair> free_faces(const SimplicialComplex& k);

struct CollapseResult {
    SimplicialComplex complex;   ///< lowest-dimensional result over all restarts
    bool success = false;        ///< reached dimension <= d
    int restarts_used = 0;
    std::vector<FreePair> steps; ///< elementary collapses leading to `complex`, in order
};

/**
 * Greedy randomized collapse onto dimension d.
 *
 * Free pairs (sigma, tau) with dim tau > d are removed one at a time, each chosen uniformly
 * among the currently free pairs. Up to `restarts` independent runs are tried. Success is a
 * certificate of collapsibility onto dimension d; failure is not a proof of the converse.
 */
CollapseResult collapse_to_dim(const SimplicialComplex& k, int d, std::uint64_t seed, int restarts = 16);

} // namespace rsc

#endif // RSC_COLLAPSE_HPP
