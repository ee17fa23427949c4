#ifndef RSC_COMPLEX_HPP
#define RSC_COMPLEX_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "rsc/simplex.hpp"

namespace rsc {

/// Number of simplices per dimension; counts[i] is f_i.
struct FVector {
    std::vector<std::size_t> counts;

    std::size_t operator[](std::size_t i) const { return i < counts.size() ? counts[i] : 0; }
    std::size_t size() const noexcept { return counts.size(); }
    long long euler_characteristic() const;

    friend bool operator==(const FVector&, const FVector&) = default;
};

/**
 * A finite abstract simplicial complex on the ambient vertex set {0, ..., n_vertices-1}.
 *
 * Simplices are kept per dimension in lexicographic order; the position of a simplex in
 * simplices(k) is its index, which cochains use as their coordinate. Instances are
 * immutable and downward closed.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of `facets`. Throws InputError on a vertex label >= n_vertices.
    static SimplicialComplex from_facets(std::span<const Simplex> facets, std::size_t n_vertices);

    /// Wraps an already downward-closed family; throws InputError if it is not closed.
    static SimplicialComplex from_closed(std::vector<Simplex> simplices, std::size_t n_vertices);

    std::size_t n_vertices() const noexcept { return n_; }
    int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const noexcept { return by_dim_.empty(); }

    /// Lexicographically sorted k-simplices; empty for k outside [0, dim()].
    const std::vector<Simplex>& simplices(int k) const;
    std::size_t count(int k) const { return simplices(k).size(); }
    std::size_t size() const noexcept;

    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    FVector f_vector() const;
    std::vector<Vertex> vertices() const;
    std::vector<Simplex> facets() const;
    /// Every simplex, lowest dimension first.
    std::vector<Simplex> all_simplices() const;

    bool is_subcomplex_of(const SimplicialComplex& other) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.by_dim_ == b.by_dim_;
    }

private:
    SimplicialComplex(std::size_t n, std::vector<std::vector<Simplex>> by_dim);

    std::size_t n_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr share(SimplicialComplex k) {
    return std::make_shared<const SimplicialComplex>(std::move(k));
}

FVector f_vector(const SimplicialComplex& k);

/// All simplices of dimension <= d.
SimplicialComplex skeleton(const SimplicialComplex& k, int d);

/// Simplices tau disjoint from s with tau u s in K. Labels are kept. Throws if s is not in K.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& s);

/// Closed star of a simplex: every simplex containing s, with its faces.
SimplicialComplex star(const SimplicialComplex& k, const Simplex& s);

/**
 * Strong connectivity components with respect to dimension d (d >= 1).
 *
 * d-simplices are joined when they share a (d-1)-face. Each simplex of dimension > d joins
 * the component of its d-faces, merging components if they differ. Each component is
 * returned as the downward closure of its simplices of dimension >= d, ordered by the
 * lexicographically smallest d-simplex.
 */
std::vector<SimplicialComplex> strong_components(const SimplicialComplex& k, int d);

bool is_pure(const SimplicialComplex& k, int d);
bool is_strongly_connected(const SimplicialComplex& k, int d);

/// Union of two complexes on max(n_a, n_b) vertices.
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);

/// Applies a vertex relabelling (injective on the vertices of K) into n_vertices labels.
SimplicialComplex relabel(const SimplicialComplex& k, std::span<const Vertex> map, std::size_t n_vertices);

/// The full simplex on vertices {0, ..., n}.
SimplicialComplex full_simplex(std::size_t n);

/// The boundary of the full simplex on {0, ..., n}.
SimplicialComplex simplex_boundary(std::size_t n);

} // namespace rsc

#endif // RSC_COMPLEX_HPP
