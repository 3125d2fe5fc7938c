#include <doctest.h>

#include "fixtures.hpp"
#include "tightcx/generators.hpp"
#include "tightcx/homology.hpp"
#include "tightcx/invariants.hpp"

using namespace tightcx;
using namespace tightcx::testing;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
} // namespace

TEST_SUITE("generators") {

TEST_CASE("simplex balls and their boundaries") {
    CHECK(fv(simplex_ball(0)) == std::vector<long>{1});
    CHECK(fv(simplex_ball(3)) == std::vector<long>{4, 6, 4, 1});
    CHECK(boundary_complex(simplex_ball(3)) == boundary_simplex(2));
    CHECK(fv(boundary_simplex(1)) == std::vector<long>{3, 3});
    CHECK(fv(boundary_simplex(2)) == std::vector<long>{4, 6, 4});
    CHECK_THROWS_AS(simplex_ball(-1), InvalidInput);
    CHECK_THROWS_AS(boundary_simplex(0), InvalidInput);
}

TEST_CASE("handle bodies") {
    const SimplicialComplex h2 = kuehnel_handle(2);
    CHECK(fv(h2) == std::vector<long>{5, 10, 5});
    CHECK(h2.facetMasks().size() == 5);
    CHECK(h2.containsFace(mask_of(std::vector<int>{0, 1, 2})));
    CHECK(h2.containsFace(mask_of(std::vector<int>{0, 3, 4})));

    const SimplicialComplex h3 = kuehnel_handle(3);
    CHECK(h3.vertexCount() == 7);
    CHECK(h3.facetMasks().size() == 7);
    CHECK(h3.faceCount(1) == 21); // 2-neighbourly

    for (int d = 2; d <= 4; ++d) {
        const SimplicialComplex h = kuehnel_handle(d);
        CHECK(is_stacked_with_boundary(h, 1).holds);
        CHECK(neighbourliness(h) >= 2);
        CHECK(manifold_status(h, kF2) == ManifoldStatus::HomologyManifoldWithBoundary);
        const auto beta = betti_vector(h, kF2).values;
        CHECK(beta[0] == 1);
        CHECK(beta[1] == 1);
        for (int i = 2; i <= h.dim(); ++i) CHECK(beta[i] == 0);
    }
    CHECK_THROWS_AS(kuehnel_handle(1), InvalidInput);
}

TEST_CASE("boundaries of handle bodies") {
    // dim >= 3 handles have 2-neighbourly 1-stacked closed boundaries
    const SimplicialComplex bd3 = boundary_complex(kuehnel_handle(3));
    CHECK(fv(bd3) == std::vector<long>{7, 21, 14});
    CHECK(neighbourliness(bd3) >= 2);
    CHECK(manifold_status(bd3, kQ) == ManifoldStatus::ClosedHomologyManifold);
    CHECK(is_orientable(bd3, kQ)); // the 7-vertex torus
    CHECK(betti_vector(bd3, kQ).values == std::vector<long>{1, 2, 1});

    const SimplicialComplex bd4 = boundary_complex(kuehnel_handle(4));
    CHECK(neighbourliness(bd4) >= 2);
    CHECK_FALSE(is_orientable(bd4, kQ)); // twisted sphere bundle
    CHECK(is_orientable(bd4, kF2));
}

TEST_CASE("stacked balls") {
    CHECK(stacked_ball(3, 1, 99) == simplex_ball(3));

    const SimplicialComplex two = stacked_ball(2, 2, 5);
    CHECK(fv(two) == std::vector<long>{4, 5, 2});
    CHECK(fv(boundary_complex(two)) == std::vector<long>{4, 4});

    // determinism and seed sensitivity
    CHECK(stacked_ball(3, 7, 42) == stacked_ball(3, 7, 42));
    bool anyDifferent = false;
    for (std::uint64_t s = 1; s <= 5 && !anyDifferent; ++s)
        anyDifferent = !(stacked_ball(3, 7, s) == stacked_ball(3, 7, s + 100));
    CHECK(anyDifferent);

    for (std::uint64_t seed : {41, 42, 43}) {
        const SimplicialComplex b = stacked_ball(3, 6, seed);
        CHECK(b.vertexCount() == 9);
        CHECK(verify_stacked_pair(b, 1, std::nullopt).holds());
        const auto rb = betti_vector(b, kF2, /*reduced=*/true).values;
        for (long v : rb) CHECK(v == 0); // balls are acyclic
        CHECK(manifold_status(boundary_complex(b), kF2) == ManifoldStatus::HomologySphere);
    }
    CHECK_THROWS_AS(stacked_ball(1, 3, 0), InvalidInput);
    CHECK_THROWS_AS(stacked_ball(3, 0, 0), InvalidInput);
}

TEST_CASE("join balls") {
    const SimplicialComplex jb22 = join_ball(2, 2);
    CHECK(jb22.dim() == 4);
    CHECK(fv(boundary_complex(jb22)) == std::vector<long>{6, 15, 18, 9});

    const SimplicialComplex jb42 = join_ball(4, 2);
    CHECK(jb42.dim() == 6);
    const SimplicialComplex bd = boundary_complex(jb42);
    CHECK(bd.vertexCount() == 8);
    CHECK(bd.dim() == 5);
    CHECK(neighbourliness(bd) == 2);

    CHECK(verify_stacked_pair(join_ball(2, 2), 2, std::nullopt).holds());
    CHECK(verify_stacked_pair(join_ball(4, 2), 2, std::nullopt).holds());
    CHECK(verify_stacked_pair(join_ball(3, 3), 3, std::nullopt).holds());
    // interior faces all contain the simplex core, so k = b is exact
    CHECK_FALSE(is_stacked_with_boundary(join_ball(2, 2), 1).holds);

    CHECK_THROWS_AS(join_ball(0, 2), InvalidInput);
    CHECK_THROWS_AS(join_ball(2, 1), InvalidInput);
}

TEST_CASE("cyclic spheres") {
    const SimplicialComplex c63 = cyclic_sphere(6, 3);
    CHECK(fv(c63) == std::vector<long>{6, 15, 18, 9});
    long euler = 0;
    for (int i = 0; i <= c63.dim(); ++i) euler += (i % 2 == 0 ? 1 : -1) * c63.faceCount(i);
    CHECK(euler == 0);

    for (int n = 5; n <= 10; ++n)
        CHECK(cyclic_sphere(n, 3).faceCount(1) == binomial(n, 2));

    for (int D = 1; D <= 4; ++D) CHECK(cyclic_sphere(D + 2, D) == boundary_simplex(D));

    for (int n = 6; n <= 9; ++n)
        CHECK(manifold_status(cyclic_sphere(n, 3), kQ) == ManifoldStatus::HomologySphere);
    CHECK(manifold_status(cyclic_sphere(9, 4), kQ) == ManifoldStatus::HomologySphere);

    CHECK_THROWS_AS(cyclic_sphere(4, 3), InvalidInput);
}

TEST_CASE("random complexes") {
    const SimplicialComplex all = random_complex(6, 2, Rational(1), 3);
    CHECK(all == skeleton(simplex_ball(5), 2));
    CHECK(random_complex(6, 2, Rational(0), 3).isEmpty());
    CHECK(random_complex(8, 2, Rational(1, 2), 9) == random_complex(8, 2, Rational(1, 2), 9));
    CHECK_FALSE(random_complex(8, 2, Rational(1, 2), 9) ==
                random_complex(8, 2, Rational(1, 2), 10));
    CHECK_THROWS_AS(random_complex(17, 2, Rational(1, 2), 0), InvalidInput);
    CHECK_THROWS_AS(random_complex(8, 2, Rational(3, 2), 0), InvalidInput);
}

TEST_CASE("seeded rng is stable across runs") {
    SeededRng a(12345);
    CHECK(a.next() == SeededRng(12345).next());
    SeededRng b(1);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t v = b.below(7);
        CHECK(v < 7);
    }
}

TEST_CASE("bundled torus validates at load") {
    const SimplicialComplex torus = load_fixture("csaszar_torus.cplx");
    CHECK(fv(torus) == std::vector<long>{7, 21, 14});
    CHECK(manifold_status(torus, kQ) == ManifoldStatus::ClosedHomologyManifold);
    CHECK(betti_vector(torus, kQ).values == std::vector<long>{1, 2, 1});
    CHECK(neighbourliness(torus) == 2);
}

} // TEST_SUITE
