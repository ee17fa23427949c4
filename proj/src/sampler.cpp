#include "rsc/sampler.hpp"

#include <algorithm>
#include <unordered_set>

#include "rsc/errors.hpp"

namespace rsc {

double face_coin(const SampleSeed& seed, int k, std::uint64_t rank) noexcept {
    const std::uint64_t h = mix64(mix64(mix64(seed.master, seed.trial), static_cast<std::uint64_t>(k)), rank);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double face_coin(const SampleSeed& seed, const Simplex& s) { return face_coin(seed, s.dim(), colex_rank(s)); }

namespace {

void check_n(std::size_t n) {
    if (n < 1)
        throw InputError("a random complex needs at least one vertex");
    if (n > (std::size_t{1} << 31))
        throw ResourceError("vertex count too large");
}

/// Calls fn(vertices, colex rank) for every (k+1)-subset of {0..n-1}, in colex order.
template <typename Fn>
void for_each_face(std::size_t n, int k, Fn&& fn) {
    const std::size_t m = static_cast<std::size_t>(k) + 1;
    if (m > n)
        return;
    std::vector<Vertex> c(m);
    for (std::size_t i = 0; i < m; ++i)
        c[i] = static_cast<Vertex>(i);
    std::uint64_t rank = 0;
    while (true) {
        fn(c, rank++);
        std::size_t i = 0;
        while (i < m && c[i] + 1 == (i + 1 < m ? c[i + 1] : n))
            ++i;
        if (i == m)
            return;
        ++c[i];
        for (std::size_t j = 0; j < i; ++j)
            c[j] = static_cast<Vertex>(j);
    }
}

std::vector<Simplex> all_vertices(std::size_t n) {
    std::vector<Simplex> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(Simplex{static_cast<Vertex>(i)});
    return v;
}

} // namespace

Hypergraph sample_hypergraph(std::size_t n, const ParamVector& params, const SampleSeed& seed) {
    check_n(n);
    std::uint64_t total = 0;
    for (int k = 1; k <= params.dim_cap(); ++k) {
        if (params.probability(k, n) <= 0)
            continue;
        const auto faces = binomial(n, static_cast<std::uint64_t>(k) + 1);
        total += faces;
        if (faces == UINT64_MAX || total > max_enumerated_faces)
            throw ResourceError("sampling would enumerate more than " + std::to_string(max_enumerated_faces) +
                                " faces; lower the dimension cap or n");
    }
    Hypergraph h;
    h.n = n;
    h.marked.resize(static_cast<std::size_t>(params.dim_cap()) + 1);
    for (int k = 1; k <= params.dim_cap(); ++k) {
        const double p = params.probability(k, n);
        if (p <= 0)
            continue;
        for_each_face(n, k, [&](const std::vector<Vertex>& v, std::uint64_t rank) {
            if (face_coin(seed, k, rank) < p)
                h.marked[k].emplace_back(v);
        });
        std::sort(h.marked[k].begin(), h.marked[k].end());
    }
    return h;
}

SimplicialComplex lower_closure(std::size_t n, const ParamVector& params, const SampleSeed& seed) {
    check_n(n);
    std::vector<Simplex> kept = all_vertices(n);
    std::vector<Simplex> level = kept;
    std::unordered_set<Simplex, SimplexHash> present(level.begin(), level.end());
    for (int k = 1; k <= params.dim_cap() && !level.empty(); ++k) {
        const double p = params.probability(k, n);
        if (p <= 0)
            break;
        std::vector<Simplex> next;
        // Each candidate is generated once, from its face without the last vertex.
        for (const auto& s : level) {
            std::vector<Vertex> v(s.begin(), s.end());
            v.push_back(0);
            for (Vertex w = s.back() + 1; w < n; ++w) {
                v.back() = w;
                Simplex t(v);
                bool closed = true;
                for (std::size_t j = 0; j + 1 < t.size(); ++j) {
                    if (!present.count(t.face_without(j))) {
                        closed = false;
                        break;
                    }
                }
                if (closed && face_coin(seed, t) < p)
                    next.push_back(std::move(t));
            }
        }
        for (const auto& t : next) {
            present.insert(t);
            kept.push_back(t);
        }
        level = std::move(next);
    }
    return SimplicialComplex::from_closed(std::move(kept), n);
}

SimplicialComplex upper_closure(std::size_t n, const ParamVector& params, const SampleSeed& seed) {
    const auto h = sample_hypergraph(n, params, seed);
    std::vector<Simplex> facets = all_vertices(n);
    for (const auto& level : h.marked)
        facets.insert(facets.end(), level.begin(), level.end());
    return SimplicialComplex::from_facets(facets, n);
}

Model parse_model(const std::string& text) {
    if (text == "lower")
        return Model::lower;
    if (text == "upper")
        return Model::upper;
    throw InputError("model must be 'lower' or 'upper', got '" + text + "'");
}

std::string to_string(Model m) { return m == Model::lower ? "lower" : "upper"; }

SimplicialComplex sample(Model model, std::size_t n, const ParamVector& params, const SampleSeed& seed) {
    return model == Model::lower ? lower_closure(n, params, seed) : upper_closure(n, params, seed);
}

} // namespace rsc
