#ifndef RSC_TEST_SUPPORT_HPP
#define RSC_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rsc/cochain.hpp"
#include "rsc/complex.hpp"
#include "rsc/complex_io.hpp"

namespace rsc::test {

inline SimplicialComplex corpus(const std::string& name) {
    return load_complex(std::string(RSC_DATA_DIR) + "/" + name + ".cplx");
}

inline ComplexPtr shared_corpus(const std::string& name) { return share(corpus(name)); }

template <typename Scalar>
Scalar random_scalar(std::mt19937_64& rng) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
        std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
        return Rational(num(rng)) / Rational(den(rng));
    } else {
        std::uniform_int_distribution<long long> d(0, Scalar::modulus - 1);
        return Scalar(d(rng));
    }
}

template <typename Scalar>
Cochain<Scalar> random_cochain(const ComplexPtr& k, int degree, std::mt19937_64& rng) {
    Cochain<Scalar> c(k, degree);
    for (Index i = 0; i < c.values().size(); ++i)
        c.values()(i) = random_scalar<Scalar>(rng);
    return c;
}

/// Random complex: each subset of size <= max_dim+1 of {0..n-1} becomes a facet with
/// probability p; the result is its closure.
inline SimplicialComplex random_complex(std::size_t n, int max_dim, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Simplex> facets;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> v;
        for (Vertex i = 0; i < n; ++i)
            if (mask & (1u << i))
                v.push_back(i);
        if (static_cast<int>(v.size()) <= max_dim + 1 && v.size() >= 2 && coin(rng))
            facets.emplace_back(std::move(v));
    }
    for (Vertex i = 0; i < n; ++i)
        facets.push_back(Simplex{i});
    return SimplicialComplex::from_facets(facets, n);
}

/// Rank of an integer matrix modulo a prime, by plain dense elimination.
inline std::size_t rank_mod(std::vector<std::vector<long long>> a, long long p) {
    auto mod = [p](long long x) { return ((x % p) + p) % p; };
    auto power = [&](long long b, long long e) {
        long long r = 1;
        b = mod(b);
        for (; e; e >>= 1, b = b * b % p)
            if (e & 1)
                r = r * b % p;
        return r;
    };
    std::size_t r = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && mod(a[piv][c]) == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        const long long inv = power(a[r][c], p - 2);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || mod(a[i][c]) == 0)
                continue;
            const long long f = mod(a[i][c]) * inv % p;
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = mod(a[i][j] - f * a[r][j]);
        }
        ++r;
    }
    return r;
}

/// Betti numbers from boundary matrices built straight from the facet list, with ranks mod p.
/// A large prime stands in for the rationals on complexes without large torsion.
inline std::vector<int> oracle_betti(const SimplicialComplex& k, long long p) {
    std::vector<std::vector<std::vector<Vertex>>> faces(k.dim() + 1);
    for (int d = 0; d <= k.dim(); ++d)
        for (const auto& s : k.simplices(d))
            faces[d].emplace_back(s.begin(), s.end());
    std::vector<std::size_t> ranks(k.dim() + 2, 0);
    for (int d = 1; d <= k.dim(); ++d) {
        std::vector<std::vector<long long>> m(faces[d - 1].size(), std::vector<long long>(faces[d].size(), 0));
        for (std::size_t c = 0; c < faces[d].size(); ++c) {
            for (std::size_t j = 0; j < faces[d][c].size(); ++j) {
                auto f = faces[d][c];
                f.erase(f.begin() + static_cast<long>(j));
                auto it = std::find(faces[d - 1].begin(), faces[d - 1].end(), f);
                m[static_cast<std::size_t>(it - faces[d - 1].begin())][c] = (j % 2 == 0) ? 1 : -1;
            }
        }
        ranks[d] = rank_mod(m, p);
    }
    std::vector<int> b;
    for (int d = 0; d <= k.dim(); ++d)
        b.push_back(static_cast<int>(faces[d].size() - ranks[d] - ranks[d + 1]));
    return b;
}

} // namespace rsc::test

#endif // RSC_TEST_SUPPORT_HPP
