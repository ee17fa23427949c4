#include "rsc/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "rsc/errors.hpp"

namespace rsc {

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

long long FVector::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[i]);
    return chi;
}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<std::vector<Simplex>> by_dim)
    : n_(n), by_dim_(std::move(by_dim)) {
    while (!by_dim_.empty() && by_dim_.back().empty())
        by_dim_.pop_back();
    index_.resize(by_dim_.size());
    for (std::size_t k = 0; k < by_dim_.size(); ++k) {
        auto& level = by_dim_[k];
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        index_[k].reserve(level.size());
        for (std::size_t i = 0; i < level.size(); ++i)
            index_[k].emplace(level[i], i);
    }
}

SimplicialComplex SimplicialComplex::from_facets(std::span<const Simplex> facets, std::size_t n_vertices) {
    int top = -1;
    for (const auto& f : facets) {
        if (f.back() >= n_vertices)
            throw InputError("vertex " + std::to_string(f.back()) + " out of range for " +
                             std::to_string(n_vertices) + " vertices");
        top = std::max(top, f.dim());
    }
    std::vector<SimplexSet> levels(static_cast<std::size_t>(top + 1));
    for (const auto& f : facets)
        levels[f.dim()].insert(f);
    for (int k = top; k >= 1; --k) {
        for (const auto& s : levels[k]) {
            for (std::size_t j = 0; j < s.size(); ++j)
                levels[k - 1].insert(s.face_without(j));
        }
    }
    std::vector<std::vector<Simplex>> by_dim(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k)
        by_dim[k].assign(levels[k].begin(), levels[k].end());
    return SimplicialComplex(n_vertices, std::move(by_dim));
}

SimplicialComplex SimplicialComplex::from_closed(std::vector<Simplex> simplices, std::size_t n_vertices) {
    std::vector<std::vector<Simplex>> by_dim;
    for (auto& s : simplices) {
        if (s.back() >= n_vertices)
            throw InputError("vertex " + std::to_string(s.back()) + " out of range");
        if (static_cast<std::size_t>(s.dim()) >= by_dim.size())
            by_dim.resize(s.dim() + 1);
        by_dim[s.dim()].push_back(std::move(s));
    }
    SimplicialComplex k(n_vertices, std::move(by_dim));
    for (int d = 1; d <= k.dim(); ++d) {
        for (const auto& s : k.simplices(d)) {
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (!k.contains(s.face_without(j)))
                    throw InputError("simplex family is not downward closed at " + s.to_string());
            }
        }
    }
    return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k > dim())
        return none;
    return by_dim_[k];
}

std::size_t SimplicialComplex::size() const noexcept {
    std::size_t total = 0;
    for (const auto& level : by_dim_)
        total += level.size();
    return total;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    if (s.dim() > dim())
        return std::nullopt;
    const auto& idx = index_[s.dim()];
    auto it = idx.find(s);
    if (it == idx.end())
        return std::nullopt;
    return it->second;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    for (const auto& level : by_dim_)
        f.counts.push_back(level.size());
    return f;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> v;
    for (const auto& s : simplices(0))
        v.push_back(s.front());
    return v;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (int k = dim(); k >= 0; --k) {
        SimplexSet covered;
        for (const auto& s : simplices(k + 1)) {
            for (std::size_t j = 0; j < s.size(); ++j)
                covered.insert(s.face_without(j));
        }
        for (const auto& s : simplices(k)) {
            if (!covered.contains(s))
                out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    out.reserve(size());
    for (const auto& level : by_dim_)
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    if (dim() > other.dim())
        return false;
    for (const auto& level : by_dim_) {
        for (const auto& s : level) {
            if (!other.contains(s))
                return false;
        }
    }
    return true;
}

FVector f_vector(const SimplicialComplex& k) { return k.f_vector(); }

SimplicialComplex skeleton(const SimplicialComplex& k, int d) {
    if (d < 0)
        throw InputError("skeleton dimension must be non-negative");
    std::vector<Simplex> keep;
    for (int i = 0; i <= std::min(d, k.dim()); ++i)
        keep.insert(keep.end(), k.simplices(i).begin(), k.simplices(i).end());
    return SimplicialComplex::from_closed(std::move(keep), k.n_vertices());
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
    if (!k.contains(s))
        throw InputError("link of " + s.to_string() + ": simplex is not in the complex");
    std::vector<Simplex> out;
    for (int d = s.dim() + 1; d <= k.dim(); ++d) {
        for (const auto& t : k.simplices(d)) {
            if (!s.is_face_of(t))
                continue;
            std::vector<Vertex> rest;
            std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
            out.emplace_back(std::move(rest));
        }
    }
    return SimplicialComplex::from_closed(std::move(out), k.n_vertices());
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& s) {
    if (!k.contains(s))
        throw InputError("star of " + s.to_string() + ": simplex is not in the complex");
    std::vector<Simplex> cofaces;
    for (int d = s.dim(); d <= k.dim(); ++d) {
        for (const auto& t : k.simplices(d)) {
            if (s.is_face_of(t))
                cofaces.push_back(t);
        }
    }
    return SimplicialComplex::from_facets(cofaces, k.n_vertices());
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

std::vector<SimplicialComplex> strong_components(const SimplicialComplex& k, int d) {
    if (d < 1)
        throw InputError("strong connectivity needs d >= 1");
    const auto& top = k.simplices(d);
    if (top.empty())
        return {};

    DisjointSets sets(top.size());
    std::unordered_map<Simplex, std::size_t, SimplexHash> first_owner;
    for (std::size_t i = 0; i < top.size(); ++i) {
        for (std::size_t j = 0; j < top[i].size(); ++j) {
            auto [it, fresh] = first_owner.emplace(top[i].face_without(j), i);
            if (!fresh)
                sets.unite(it->second, i);
        }
    }

    // Higher simplices glue together the components of their d-faces.
    std::vector<std::pair<const Simplex*, std::size_t>> higher;
    for (int e = d + 1; e <= k.dim(); ++e) {
        for (const auto& s : k.simplices(e)) {
            std::vector<Vertex> first_face(s.begin(), s.begin() + d + 1);
            const auto anchor = *k.index_of(Simplex(std::move(first_face)));
            // Every d-face of s joins the component of the first one.
            std::vector<std::size_t> pick(d + 1);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                std::vector<Vertex> face;
                for (auto p : pick)
                    face.push_back(s[p]);
                sets.unite(anchor, *k.index_of(Simplex(std::move(face))));
                int pos = d;
                while (pos >= 0 && pick[pos] == s.size() - (d + 1) + pos)
                    --pos;
                if (pos < 0)
                    break;
                ++pick[pos];
                for (int q = pos + 1; q <= d; ++q)
                    pick[q] = pick[q - 1] + 1;
            }
            higher.emplace_back(&s, anchor);
        }
    }

    std::vector<std::size_t> root_to_component(top.size(), top.size());
    std::vector<std::vector<Simplex>> generators;
    for (std::size_t i = 0; i < top.size(); ++i) {
        const auto r = sets.find(i);
        if (root_to_component[r] == top.size()) {
            root_to_component[r] = generators.size();
            generators.emplace_back();
        }
        generators[root_to_component[r]].push_back(top[i]);
    }
    for (const auto& [s, anchor] : higher)
        generators[root_to_component[sets.find(anchor)]].push_back(*s);

    std::vector<SimplicialComplex> out;
    out.reserve(generators.size());
    for (const auto& g : generators)
        out.push_back(SimplicialComplex::from_facets(g, k.n_vertices()));
    return out;
}

bool is_pure(const SimplicialComplex& k, int d) {
    if (k.empty() || k.dim() != d)
        return false;
    for (const auto& f : k.facets()) {
        if (f.dim() != d)
            return false;
    }
    return true;
}

bool is_strongly_connected(const SimplicialComplex& k, int d) {
    if (d < 1 || k.dim() < d)
        return false;
    for (const auto& f : k.facets()) {
        if (f.dim() < d)
            return false;
    }
    return strong_components(skeleton(k, d), d).size() == 1;
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto all = a.all_simplices();
    auto more = b.all_simplices();
    all.insert(all.end(), more.begin(), more.end());
    return SimplicialComplex::from_closed(std::move(all), std::max(a.n_vertices(), b.n_vertices()));
}

SimplicialComplex relabel(const SimplicialComplex& k, std::span<const Vertex> map, std::size_t n_vertices) {
    std::vector<Simplex> out;
    out.reserve(k.size());
    for (int d = 0; d <= k.dim(); ++d) {
        for (const auto& s : k.simplices(d)) {
            std::vector<Vertex> image;
            for (Vertex v : s) {
                if (v >= map.size())
                    throw InputError("relabel map does not cover vertex " + std::to_string(v));
                image.push_back(map[v]);
            }
            out.push_back(Simplex::from_unsorted(std::move(image)));
        }
    }
    auto result = SimplicialComplex::from_closed(std::move(out), n_vertices);
    if (result.size() != k.size())
        throw InputError("relabel map is not injective on the vertices of the complex");
    return result;
}

SimplicialComplex full_simplex(std::size_t n) {
    std::vector<Vertex> v(n + 1);
    std::iota(v.begin(), v.end(), Vertex{0});
    const Simplex top(std::move(v));
    return SimplicialComplex::from_facets(std::span(&top, 1), n + 1);
}

SimplicialComplex simplex_boundary(std::size_t n) {
    if (n == 0)
        throw InputError("the boundary of a vertex is empty");
    std::vector<Vertex> v(n + 1);
    std::iota(v.begin(), v.end(), Vertex{0});
    const Simplex top(std::move(v));
    std::vector<Simplex> faces;
    for (std::size_t j = 0; j <= n; ++j)
        faces.push_back(top.face_without(j));
    return SimplicialComplex::from_facets(faces, n + 1);
}

} // namespace rsc
