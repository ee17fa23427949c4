#ifndef RSC_SAMPLER_HPP
#define RSC_SAMPLER_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/params.hpp"

namespace rsc {

/// Upper bound on the number of candidate faces a single sample may enumerate.
inline constexpr std::uint64_t max_enumerated_faces = 200'000'000;

/**
 * The uniform coin of a k-face: a deterministic function of (seed, dimension, colex rank),
 * in [0, 1). The face is marked when its coin is below p_k. Every closure of the same seed
 * reads the same coins.
 */
double face_coin(const SampleSeed& seed, int k, std::uint64_t rank) noexcept;
double face_coin(const SampleSeed& seed, const Simplex& s);

/// Marked faces of the random hypergraph, per dimension; marked[k] lists k-faces (k >= 1),
/// lexicographically ordered. marked[0] is unused.
struct Hypergraph {
    std::size_t n = 0;
    std::vector<std::vector<Simplex>> marked;

    std::size_t count(int k) const { return k < static_cast<int>(marked.size()) ? marked[k].size() : 0; }
};

/// Enumerates every face up to the dimension cap. Throws ResourceError above max_enumerated_faces.
Hypergraph sample_hypergraph(std::size_t n, const ParamVector& params, const SampleSeed& seed);

/// Largest complex inside the hypergraph: a k-face is kept iff its coin is marked and all of
/// its (k-1)-faces were kept. All n vertices are present.
SimplicialComplex lower_closure(std::size_t n, const ParamVector& params, const SampleSeed& seed);

/// Smallest complex containing the hypergraph, plus all n vertices.
SimplicialComplex upper_closure(std::size_t n, const ParamVector& params, const SampleSeed& seed);

enum class Model { lower, upper };

Model parse_model(const std::string& text);
std::string to_string(Model m);

SimplicialComplex sample(Model model, std::size_t n, const ParamVector& params, const SampleSeed& seed);

} // namespace rsc

#endif // RSC_SAMPLER_HPP
