#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "rsc/cohomology.hpp"
#include "rsc/collapse.hpp"
#include "rsc/subcomplex.hpp"
#include "rsc/suspension.hpp"
#include "support.hpp"

using namespace rsc;
using rsc::test::corpus;

namespace {

std::vector<Simplex> facets_of(std::initializer_list<std::vector<Vertex>> list) {
    std::vector<Simplex> out;
    for (const auto& v : list)
        out.emplace_back(v);
    return out;
}

/// Every non-empty subset of every facet, by bitmask enumeration.
std::set<std::vector<Vertex>> closure_oracle(const std::vector<Simplex>& facets) {
    std::set<std::vector<Vertex>> out;
    for (const auto& f : facets) {
        const auto m = f.size();
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<Vertex> v;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i))
                    v.push_back(f[i]);
            out.insert(v);
        }
    }
    return out;
}

bool downward_closed(const SimplicialComplex& k) {
    for (const auto& s : k.all_simplices())
        if (s.dim() > 0)
            for (std::size_t j = 0; j < s.size(); ++j)
                if (!k.contains(s.face_without(j)))
                    return false;
    return true;
}

/// Free pairs by brute force: sigma, tau with sigma a facet of tau and no other simplex above sigma.
std::set<std::pair<Simplex, Simplex>> free_pairs_oracle(const SimplicialComplex& k) {
    std::set<std::pair<Simplex, Simplex>> out;
    const auto all = k.all_simplices();
    for (const auto& s : all) {
        std::vector<Simplex> above;
        for (const auto& t : all)
            if (t != s && s.is_face_of(t))
                above.push_back(t);
        if (above.size() == 1 && above[0].dim() == s.dim() + 1)
            out.insert({s, above[0]});
    }
    return out;
}

/// Brute-force embedding count over all injective maps.
std::uint64_t embeddings_oracle(const SimplicialComplex& pattern, const SimplicialComplex& host) {
    const auto pv = pattern.vertices();
    const auto hv = host.vertices();
    if (pv.size() > hv.size())
        return 0;
    std::uint64_t count = 0;
    std::vector<std::size_t> pick(hv.size());
    std::iota(pick.begin(), pick.end(), 0);
    // Enumerate injections as permutations of hv restricted to the first |pv| slots, deduplicated.
    std::set<std::vector<Vertex>> seen;
    do {
        std::vector<Vertex> image(pattern.n_vertices(), 0);
        std::vector<Vertex> key;
        for (std::size_t i = 0; i < pv.size(); ++i) {
            image[pv[i]] = hv[pick[i]];
            key.push_back(hv[pick[i]]);
        }
        if (!seen.insert(key).second)
            continue;
        bool ok = true;
        for (const auto& s : pattern.all_simplices()) {
            std::vector<Vertex> v;
            for (auto x : s)
                v.push_back(image[x]);
            if (!host.contains(Simplex::from_unsorted(v))) {
                ok = false;
                break;
            }
        }
        count += ok;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return count;
}

SimplicialComplex two_triangles_at_a_vertex() {
    return SimplicialComplex::from_facets(facets_of({{0, 1, 2}, {2, 3, 4}}), 5);
}

} // namespace

TEST_CASE("simplices are strictly increasing and non-empty") {
    CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), InputError);
    CHECK_THROWS_AS((Simplex{2, 1}), InputError);
    CHECK_THROWS_AS((Simplex{1, 1}), InputError);
    CHECK(Simplex::from_unsorted({3, 0, 2}) == Simplex{0, 2, 3});
    CHECK((Simplex{0, 2, 5}).face_without(1) == Simplex{0, 5});
    CHECK((Simplex{0, 2, 5, 7}).slice(1, 2) == Simplex{2, 5});
}

TEST_CASE("colex rank enumerates each dimension without gaps") {
    std::vector<std::uint64_t> ranks;
    const auto k = full_simplex(5);
    for (const auto& s : k.simplices(2))
        ranks.push_back(colex_rank(s));
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t i = 0; i < ranks.size(); ++i)
        CHECK(ranks[i] == i);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("construction from facets") {
    CHECK(SimplicialComplex::from_facets(facets_of({{0, 1, 2}}), 3).f_vector().counts == std::vector<std::size_t>{3, 3, 1});
    const auto empty = SimplicialComplex::from_facets(std::vector<Simplex>{}, 0);
    CHECK(empty.empty());
    CHECK(empty.f_vector().counts.empty());
    const auto cycle = SimplicialComplex::from_facets(facets_of({{0, 1}, {1, 2}, {0, 2}}), 3);
    CHECK(cycle == simplex_boundary(2));
    CHECK(SimplicialComplex::from_facets(cycle.all_simplices(), 3) == cycle);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(facets_of({{0, 5}}), 5), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_closed(facets_of({{0, 1}}), 2), InputError);
}

TEST_CASE("closure matches subset enumeration") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        const auto k = test::random_complex(8, 4, 0.05, rng);
        const auto oracle = closure_oracle(k.facets());
        CHECK(k.size() == oracle.size());
        for (const auto& v : oracle)
            CHECK(k.contains(Simplex(v)));
        CHECK(downward_closed(k));
    }
}

TEST_CASE("f-vectors") {
    CHECK(simplex_boundary(3).f_vector().counts == std::vector<std::size_t>{4, 6, 4});
    CHECK(full_simplex(3).f_vector().counts == std::vector<std::size_t>{4, 6, 4, 1});
    const auto torus = corpus("torus7");
    auto oracle = closure_oracle(torus.facets());
    std::vector<std::size_t> counts(3, 0);
    for (const auto& v : oracle)
        ++counts[v.size() - 1];
    CHECK(counts == std::vector<std::size_t>{7, 21, 14});
    CHECK(torus.f_vector().counts == counts);
    CHECK(corpus("cp2_9").f_vector().counts == std::vector<std::size_t>{9, 36, 84, 90, 36});
    CHECK(corpus("rp2_6").f_vector().counts == std::vector<std::size_t>{6, 15, 10});
    CHECK(corpus("dunce_hat8").f_vector().counts == std::vector<std::size_t>{8, 24, 17});
}

TEST_CASE("skeleta") {
    const auto k4 = skeleton(full_simplex(3), 1);
    CHECK(k4.f_vector().counts == std::vector<std::size_t>{4, 6});
    const auto torus = corpus("torus7");
    CHECK(skeleton(torus, torus.dim()) == torus);
    CHECK(skeleton(torus, 10) == torus);
    CHECK(skeleton(simplex_boundary(3), 0).f_vector().counts == std::vector<std::size_t>{4});
    CHECK_THROWS_AS(skeleton(torus, -1), InputError);
}

TEST_CASE("links") {
    const auto l = link(simplex_boundary(3), Simplex{0});
    CHECK(l.f_vector().counts == std::vector<std::size_t>{3, 3});
    CHECK(l.contains(Simplex{1, 2}));
    CHECK(!l.contains(Simplex{1, 2, 3}));
    const auto e = link(full_simplex(3), Simplex{0, 1});
    CHECK(e.facets() == facets_of({{2, 3}}));
    // The apex of a cone links to the base.
    const auto base = simplex_boundary(2);
    std::vector<Simplex> cone;
    for (const auto& f : base.facets()) {
        std::vector<Vertex> v(f.begin(), f.end());
        v.push_back(3);
        cone.emplace_back(v);
    }
    const auto c = SimplicialComplex::from_facets(cone, 4);
    CHECK(link(c, Simplex{3}).facets() == base.facets());
    CHECK_THROWS_AS(link(base, Simplex{0, 1, 2}), InputError);
}

TEST_CASE("strong connectivity components") {
    CHECK(strong_components(simplex_boundary(3), 2).size() == 1);
    CHECK(strong_components(two_triangles_at_a_vertex(), 2).size() == 2);
    const auto sharing_edge = SimplicialComplex::from_facets(facets_of({{0, 1, 2}, {1, 2, 3}}), 4);
    CHECK(strong_components(sharing_edge, 2).size() == 1);
    CHECK_THROWS_AS(strong_components(sharing_edge, 0), InputError);

    // A tetrahedron joins triangles that would otherwise share only a vertex.
    const auto bridged = SimplicialComplex::from_facets(facets_of({{0, 1, 2, 3}, {3, 4, 5}}), 6);
    CHECK(strong_components(bridged, 2).size() == 2);
    CHECK(strong_components(bridged, 1).size() == 1);
}

TEST_CASE("strong components partition the top simplices of a pure complex") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        const auto k = test::random_complex(9, 2, 0.04, rng);
        if (k.dim() < 2)
            continue;
        const auto pure = SimplicialComplex::from_facets(k.simplices(2), k.n_vertices());
        std::vector<Simplex> seen;
        for (const auto& c : strong_components(pure, 2)) {
            CHECK(is_strongly_connected(c, 2));
            for (const auto& s : c.simplices(2))
                seen.push_back(s);
        }
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        CHECK(seen == pure.simplices(2));
    }
}

TEST_CASE("purity and strong connectivity predicates") {
    CHECK(is_pure(simplex_boundary(3), 2));
    CHECK(is_strongly_connected(simplex_boundary(3), 2));
    const auto pendant = SimplicialComplex::from_facets(facets_of({{0, 1, 2}, {2, 3}}), 4);
    CHECK(!is_pure(pendant, 2));
    CHECK(!is_strongly_connected(two_triangles_at_a_vertex(), 2));
    CHECK(is_pure(corpus("cp2_9"), 4));
    CHECK(is_strongly_connected(corpus("cp2_9"), 4));
}

TEST_CASE("free faces") {
    const auto tri = full_simplex(2);
    const auto pairs = free_faces(tri);
    const std::set<FreePair> got(pairs.begin(), pairs.end());
    CHECK(got == free_pairs_oracle(tri));
    CHECK(got.size() == 3);
    CHECK(free_faces(simplex_boundary(3)).empty());
    CHECK(free_faces(corpus("dunce_hat8")).empty());

    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        const auto k = test::random_complex(7, 3, 0.1, rng);
        const auto f = free_faces(k);
        CHECK(std::set<FreePair>(f.begin(), f.end()) == free_pairs_oracle(k));
    }
}

TEST_CASE("collapses") {
    for (std::size_t n = 0; n <= 5; ++n) {
        const auto r = collapse_to_dim(full_simplex(n), 0, 1);
        CHECK(r.success);
        CHECK(r.complex.size() == 1);
    }
    const auto sphere = collapse_to_dim(simplex_boundary(3), 1, 1);
    CHECK(!sphere.success);
    CHECK(sphere.steps.empty());
    const auto dunce = collapse_to_dim(corpus("dunce_hat8"), 1, 5, 16);
    CHECK(!dunce.success);
    CHECK(dunce.restarts_used == 16);
    CHECK_THROWS_AS(collapse_to_dim(full_simplex(2), -1, 0), InputError);
    CHECK_THROWS_AS(collapse_to_dim(full_simplex(2), 0, 0, 0), InputError);
}

TEST_CASE("every elementary collapse preserves Euler characteristic and Betti numbers") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 15; ++t) {
        const auto k = test::random_complex(8, 3, 0.07, rng);
        const auto r = collapse_to_dim(k, 0, 100 + t, 2);
        auto simplices = k.all_simplices();
        const auto b0 = betti<F2>(k);
        const auto chi = k.f_vector().euler_characteristic();
        for (const auto& [sigma, tau] : r.steps) {
            std::erase(simplices, sigma);
            std::erase(simplices, tau);
            const auto cur = SimplicialComplex::from_closed(simplices, k.n_vertices());
            CHECK(cur.f_vector().euler_characteristic() == chi);
            auto b = betti<F2>(cur);
            b.resize(b0.size(), 0);
            CHECK(b == b0);
        }
        auto last = betti<Rational>(r.complex);
        auto first = betti<Rational>(k);
        last.resize(first.size(), 0);
        CHECK(last == first);
    }
}

TEST_CASE("collapse is reproducible from its seed") {
    const auto k = corpus("cp2_9");
    const auto a = collapse_to_dim(k, 2, 77, 3);
    const auto b = collapse_to_dim(k, 2, 77, 3);
    CHECK(a.complex == b.complex);
    CHECK(a.steps == b.steps);
}

TEST_CASE("prime suspension") {
    const auto s = prime_suspension(simplex_boundary(2));
    CHECK(isomorphic(s, simplex_boundary(3)));
    CHECK(s.n_vertices() == 4);
    for (int r = 1; r <= 3; ++r) {
        const auto it = prime_suspension(simplex_boundary(2), r);
        CHECK(it.vertices().size() == 3u + r);
        CHECK(it.dim() == 1 + r);
        // Pure, complete 1-skeleton, and equal to the boundary of the simplex on 3 + r vertices.
        CHECK(it.f_vector() == simplex_boundary(2 + r).f_vector());
    }
    CHECK_THROWS_AS(prime_suspension(SimplicialComplex{}), InputError);
    CHECK_THROWS_AS(prime_suspension(full_simplex(0)), InputError);
}

TEST_CASE("prime suspension keeps purity and strong connectivity and fills the 1-skeleton") {
    for (auto name : {"torus7", "rp2_6", "klein_bottle9", "sphere2", "dunce_hat8", "empty_triangle"}) {
        const auto k = corpus(name);
        const auto s = prime_suspension(k);
        const auto v = k.vertices().size() + 1;
        CHECK(s.vertices().size() == v);
        CHECK(s.count(1) == v * (v - 1) / 2);
        CHECK(s.dim() == k.dim() + 1);
        if (is_pure(k, k.dim()))
            CHECK(is_pure(s, s.dim()));
        if (is_strongly_connected(k, k.dim()))
            CHECK(is_strongly_connected(s, s.dim()));
    }
}

TEST_CASE("subcomplex copies") {
    const auto point = full_simplex(0);
    CHECK(count_subcomplex_copies(point, corpus("torus7")).copies == 7);
    CHECK(count_subcomplex_copies(full_simplex(1), simplex_boundary(3)).copies == 6);
    const auto c = count_subcomplex_copies(simplex_boundary(2), full_simplex(3));
    CHECK(c.embeddings == 24);
    CHECK(c.automorphisms == 6);
    CHECK(c.copies == 4);
    for (auto name : {"torus7", "rp2_6", "empty_triangle"})
        CHECK(count_subcomplex_copies(corpus(name), corpus(name)).copies == 1);
    CHECK_THROWS_AS(count_subcomplex_copies(SimplicialComplex{}, point), InputError);
}

TEST_CASE("embedding counts agree with brute force") {
    std::mt19937_64 rng(4);
    const SimplicialComplex patterns[] = {simplex_boundary(2), full_simplex(2), simplex_boundary(3),
                                          two_triangles_at_a_vertex()};
    for (int t = 0; t < 8; ++t) {
        const auto host = test::random_complex(7, 3, 0.12, rng);
        for (const auto& p : patterns)
            CHECK(count_embeddings(p, host) == embeddings_oracle(p, host));
    }
}

TEST_CASE("complex files round-trip") {
    for (auto name : {"torus7", "cp2_9", "klein_bottle9"}) {
        const auto k = corpus(name);
        std::stringstream buf;
        write_complex(buf, k, "round trip\nsecond line");
        CHECK(read_complex(buf) == k);
    }
}

TEST_CASE("malformed complex files report the line") {
    auto parse_line = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_complex(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(parse_line("# c\nn 4\n0 1\n2 1\n") == 4);
    CHECK(parse_line("n 3\n0 x\n") == 2);
    CHECK(parse_line("0 1 2\n") == 1);
    CHECK(parse_line("n 3\n0 3\n") == 2);
    CHECK(parse_line("# only comments\n") == 1);
}
