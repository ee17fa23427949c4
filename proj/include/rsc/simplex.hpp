#ifndef RSC_SIMPLEX_HPP
#define RSC_SIMPLEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rsc {

using Vertex = std::uint32_t;

/**
 * An oriented simplex: a strictly increasing, non-empty list of vertex labels.
 * The orientation is always the ascending order of the labels.
 */
class Simplex {
public:
    Simplex(std::initializer_list<Vertex> vertices);
    explicit Simplex(std::vector<Vertex> vertices);

    /// Sorts the labels first; still rejects repeated labels.
    static Simplex from_unsorted(std::vector<Vertex> vertices);

    int dim() const noexcept { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const noexcept { return v_.size(); }
    Vertex operator[](std::size_t i) const noexcept { return v_[i]; }
    Vertex front() const noexcept { return v_.front(); }
    Vertex back() const noexcept { return v_.back(); }
    auto begin() const noexcept { return v_.begin(); }
    auto end() const noexcept { return v_.end(); }
    std::span<const Vertex> vertices() const noexcept { return v_; }

    /// The codimension-one face obtained by deleting the j-th vertex. Requires dim() >= 1.
    Simplex face_without(std::size_t j) const;

    /// Vertices at positions [first, last] (inclusive).
    Simplex slice(std::size_t first, std::size_t last) const;

    bool contains(Vertex v) const noexcept;
    bool is_face_of(const Simplex& other) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;

private:
    struct Trusted {};
    Simplex(Trusted, std::vector<Vertex> vertices) : v_(std::move(vertices)) {}

    std::vector<Vertex> v_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// Union of two simplices with disjoint vertex sets.
Simplex join(const Simplex& a, const Simplex& b);

/// Binomial coefficient, saturating at UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Colexicographic rank of a simplex among all simplices of its dimension.
/// Independent of the ambient vertex count. Throws ResourceError on 64-bit overflow.
std::uint64_t colex_rank(const Simplex& s);

} // namespace rsc

#endif // RSC_SIMPLEX_HPP
