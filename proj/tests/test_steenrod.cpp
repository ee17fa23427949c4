#include "doctest.h"

#include "rsc/steenrod.hpp"
#include "rsc/suspension.hpp"
#include "support.hpp"

using namespace rsc;
using rsc::test::corpus;

namespace {

const char* const mod2_corpus[] = {"torus7", "rp2_6", "klein_bottle9", "cp2_9", "wedge_s2_s1_s1"};

template <typename Fn>
void for_each_basis_class(const Cohomology<F2>& h, Fn&& fn) {
    for (int d = 0; d <= h.complex().dim(); ++d)
        for (int j = 0; j < h.betti(d); ++j)
            fn(h.basis_class(d, j));
}

} // namespace

TEST_CASE("Sq0 is the identity") {
    for (auto name : mod2_corpus) {
        Cohomology<F2> h(share(corpus(name)));
        for_each_basis_class(h, [&](const auto& x) { CHECK(sq(h, 0, x).coordinates == x.coordinates); });
    }
}

TEST_CASE("Sq^i vanishes above the degree and squares at the degree") {
    for (auto name : mod2_corpus) {
        Cohomology<F2> h(share(corpus(name)));
        for_each_basis_class(h, [&](const auto& x) {
            const int k = x.degree();
            for (int i = k + 1; i <= k + 3; ++i)
                CHECK(sq(h, i, x).is_zero());
            CHECK(sq(h, k, x).coordinates == h.product(x, x).coordinates);
        });
    }
}

TEST_CASE("Sq1 on the projective plane") {
    Cohomology<F2> h(share(corpus("rp2_6")));
    REQUIRE(h.betti(1) == 1);
    REQUIRE(h.betti(2) == 1);
    const auto y = sq(h, 1, h.basis_class(1, 0));
    CHECK(y.coordinates == h.basis_class(2, 0).coordinates);
    CHECK(y.coordinates == h.product(h.basis_class(1, 0), h.basis_class(1, 0)).coordinates);
}

TEST_CASE("Sq does not depend on the representative") {
    std::mt19937_64 rng(17);
    for (auto name : mod2_corpus) {
        auto k = share(corpus(name));
        Cohomology<F2> h(k);
        for_each_basis_class(h, [&](const auto& x) {
            if (x.degree() == 0)
                return;
            for (int t = 0; t < 3; ++t) {
                auto z = x.representative + coboundary(test::random_cochain<F2>(k, x.degree() - 1, rng));
                auto moved = h.class_of(z);
                for (int i = 0; i <= x.degree(); ++i)
                    CHECK(sq(h, i, moved).coordinates == sq(h, i, x).coordinates);
            }
        });
    }
}

TEST_CASE("Cartan formula") {
    for (auto name : {"torus7", "rp2_6", "klein_bottle9"}) {
        Cohomology<F2> h(share(corpus(name)));
        const int top = h.complex().dim();
        for (int p = 0; p <= top; ++p)
            for (int q = 0; p + q <= top; ++q)
                for (int a = 0; a < h.betti(p); ++a)
                    for (int b = 0; b < h.betti(q); ++b) {
                        const auto x = h.basis_class(p, a), y = h.basis_class(q, b);
                        const auto xy = h.product(x, y);
                        for (int k = 0; k <= p + q; ++k) {
                            Vector<F2> sum = Vector<F2>::Zero(h.betti(p + q + k));
                            for (int i = 0; i <= k; ++i) {
                                const auto term = h.product(sq(h, i, x), sq(h, k - i, y));
                                sum += term.coordinates;
                            }
                            CHECK(sq(h, k, xy).coordinates == sum);
                        }
                    }
    }
}

TEST_CASE("the square of the degree-two generator of CP2 generates H4") {
    Cohomology<F2> h(share(corpus("cp2_9")));
    REQUIRE(h.betti(2) == 1);
    REQUIRE(h.betti(4) == 1);
    const auto x = h.basis_class(2, 0);
    CHECK(!h.product(x, x).is_zero());
    CHECK(!sq(h, 2, x).is_zero());
}

TEST_CASE("Sq matrix") {
    Cohomology<F2> h(share(corpus("rp2_6")));
    CHECK(rank(sq_matrix(h, 1, 1)) == 1);
    CHECK(rank(sq_matrix(h, 1, 0)) == 0);
    Cohomology<F2> t(share(corpus("torus7")));
    CHECK(rank(sq_matrix(t, 1, 1)) == 0);
}

TEST_CASE("Steenrod detection on strong components") {
    const auto rp2 = corpus("rp2_6");
    CHECK(steenrod_nontrivial_on_components(rp2, 1, 2));
    CHECK(!steenrod_nontrivial_on_components(corpus("torus7"), 1, 2));

    std::vector<Vertex> shift{4, 5, 6, 7};
    const auto spheres = unite(simplex_boundary(3), relabel(simplex_boundary(3), shift, 8));
    for (int i = 1; i <= 2; ++i)
        for (int d = i; d <= 2; ++d)
            CHECK(!steenrod_nontrivial_on_components(spheres, i, d));

    const auto s_rp2 = prime_suspension(rp2);
    CHECK(steenrod_nontrivial_on_components(s_rp2, 1, 3));
    CHECK(steenrod_nontrivial_on_components(corpus("cp2_9"), 2, 4));
}

TEST_CASE("Sq2 survives the prime suspension of CP2") {
    const auto s = prime_suspension(corpus("cp2_9"));
    CHECK(steenrod_nontrivial_on_components(s, 2, 5));
    CHECK(steenrod_nontrivial(s, 2, 5));
}

TEST_CASE("component filter agrees with the direct computation") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        const auto k = test::random_complex(8, 3, 0.09, rng);
        for (int d = 1; d <= k.dim(); ++d)
            for (int i = 0; i <= d; ++i)
                CHECK(steenrod_nontrivial_on_components(k, i, d) == steenrod_nontrivial(k, i, d));
    }
    // Planted projective planes inside noise.
    const auto rp2 = corpus("rp2_6");
    for (int t = 0; t < 10; ++t) {
        const auto noise = test::random_complex(10, 2, 0.01, rng);
        std::vector<Vertex> map{2, 3, 5, 7, 8, 9};
        const auto k = unite(noise, relabel(rp2, map, 10));
        CHECK(steenrod_nontrivial_on_components(k, 1, 2) == steenrod_nontrivial(k, 1, 2));
    }
}

TEST_CASE("Steenrod squares need the field F2") {
    CHECK_THROWS_AS(require_f2(Field::rationals()), InputError);
    CHECK_THROWS_AS(require_f2(Field::prime(3)), InputError);
    CHECK_NOTHROW(require_f2(Field::prime(2)));
}
