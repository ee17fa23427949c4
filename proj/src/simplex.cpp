#include "rsc/simplex.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "rsc/errors.hpp"

namespace rsc {

namespace {

void check_strictly_increasing(const std::vector<Vertex>& v) {
    if (v.empty())
        throw InputError("simplex must have at least one vertex");
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] >= v[i])
            throw InputError("simplex vertices must be strictly increasing");
    }
}

} // namespace

Simplex::Simplex(std::initializer_list<Vertex> vertices) : v_(vertices) {
    check_strictly_increasing(v_);
}

Simplex::Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
    check_strictly_increasing(v_);
}

Simplex Simplex::from_unsorted(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return Simplex(std::move(vertices));
}

Simplex Simplex::face_without(std::size_t j) const {
    if (v_.size() < 2)
        throw InputError("a vertex has no non-empty proper faces");
    std::vector<Vertex> f;
    f.reserve(v_.size() - 1);
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i != j)
            f.push_back(v_[i]);
    }
    return Simplex(Trusted{}, std::move(f));
}

Simplex Simplex::slice(std::size_t first, std::size_t last) const {
    if (first > last || last >= v_.size())
        throw InputError("invalid simplex slice");
    return Simplex(Trusted{}, std::vector<Vertex>(v_.begin() + first, v_.begin() + last + 1));
}

bool Simplex::contains(Vertex v) const noexcept {
    return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const noexcept {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

std::string Simplex::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v_.size(); ++i)
        out << (i ? "," : "") << v_[i];
    out << ']';
    return out.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
    for (Vertex v : s) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
}

Simplex join(const Simplex& a, const Simplex& b) {
    std::vector<Vertex> v;
    v.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return Simplex(std::move(v));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t colex_rank(const Simplex& s) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max() / 2;
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto term = binomial(s[i], i + 1);
        if (term >= cap || rank >= cap - term)
            throw ResourceError("face rank overflows 64 bits for simplex " + s.to_string());
        rank += term;
    }
    return rank;
}

} // namespace rsc
