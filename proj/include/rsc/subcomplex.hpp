#ifndef RSC_SUBCOMPLEX_HPP
#define RSC_SUBCOMPLEX_HPP

#include <cstdint>

#include "rsc/complex.hpp"

namespace rsc {

struct CopyCount {
    std::uint64_t embeddings = 0;   ///< injective simplicial maps pattern -> host
    std::uint64_t automorphisms = 0;
    std::uint64_t copies = 0;       ///< embeddings / automorphisms

    friend bool operator==(const CopyCount&, const CopyCount&) = default;
};

/// Number of injective vertex maps carrying every pattern simplex onto a host simplex.
/// The host may contain extra simplices on the image vertices (not an induced count).
std::uint64_t count_embeddings(const SimplicialComplex& pattern, const SimplicialComplex& host);

/// Copies of `pattern` inside `host` as a (not necessarily induced) subcomplex.
CopyCount count_subcomplex_copies(const SimplicialComplex& pattern, const SimplicialComplex& host);

/// True when the two complexes are simplicially isomorphic.
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

} // namespace rsc

#endif // RSC_SUBCOMPLEX_HPP
