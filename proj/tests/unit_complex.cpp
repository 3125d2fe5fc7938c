#include <doctest.h>

#include <algorithm>
#include <bit>

#include "fixtures.hpp"
#include "tightcx/generators.hpp"
#include "tightcx/simplicial_complex.hpp"

using namespace tightcx;
using namespace tightcx::testing;

TEST_SUITE("complex_core") {

TEST_CASE("face order is lexicographic on vertex sequences") {
    CHECK(face_lex_less(mask_of(std::vector<int>{0, 3}), mask_of(std::vector<int>{1, 2})));
    CHECK_FALSE(face_lex_less(mask_of(std::vector<int>{1, 2}), mask_of(std::vector<int>{0, 3})));
    CHECK(face_lex_less(mask_of(std::vector<int>{0, 1}), mask_of(std::vector<int>{0, 1, 2})));
    CHECK(face_lex_less(mask_of(std::vector<int>{1, 2, 3, 4}), mask_of(std::vector<int>{1, 3})));
}

TEST_CASE("from_facets") {
    const SimplicialComplex h2 = cx({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
    CHECK(fv(h2) == std::vector<long>{5, 10, 5});
    CHECK(h2.dim() == 2);

    const SimplicialComplex edge = cx({{0, 1}});
    CHECK(fv(edge) == std::vector<long>{2, 1});
    CHECK(edge.containsFace(mask_of(std::vector<int>{0, 1})));

    const SimplicialComplex nothing = cx({});
    CHECK(nothing.dim() == -1);
    CHECK(nothing.isEmpty());

    CHECK_THROWS_AS(cx({{0, 64}}), InvalidInput);
    CHECK_THROWS_AS(cx({{}}), InvalidInput);
    CHECK_THROWS_AS(cx({{-1}}), InvalidInput);
}

TEST_CASE("from_facets is idempotent on facet lists") {
    const SimplicialComplex samples[] = {
        kuehnel_handle(2), boundary_simplex(2), fan_disc(), cycle(6),
        cx({{0}, {1, 2}, {3, 4, 5}}),
    };
    for (const auto& x : samples) {
        CHECK(SimplicialComplex::fromFacets(x.facetVertexLists()) == x);
    }
}

TEST_CASE("simplex type") {
    CHECK(Simplex({0, 5}).dimension() == 1);
    CHECK(Simplex({3}).vertices() == std::vector<int>{3});
    CHECK_THROWS_AS(Simplex({0, 0}), InvalidInput);
    CHECK_THROWS_AS(Simplex(std::vector<int>{}), InvalidInput);
    CHECK(Simplex({2, 4, 6}).str() == "{2 4 6}");
}

TEST_CASE("induced subcomplex") {
    const SimplicialComplex h2 = kuehnel_handle(2);
    CHECK(induced_subcomplex(h2, h2.vertexMask()) == h2);
    CHECK(induced_subcomplex(h2, std::uint64_t{0}).isEmpty());

    const SimplicialComplex pair = induced_subcomplex(h2, std::vector<int>{0, 2});
    CHECK(fv(pair) == std::vector<long>{2, 1}); // edge 02 sits inside facet 012

    CHECK_THROWS_AS(induced_subcomplex(h2, mask_of(std::vector<int>{0, 7})), InvalidInput);

    // X[A][B] = X[B] for B inside A
    const SimplicialComplex inner = induced_subcomplex(h2, std::vector<int>{0, 1, 2, 3});
    CHECK(induced_subcomplex(inner, std::vector<int>{0, 2, 3}) ==
          induced_subcomplex(h2, std::vector<int>{0, 2, 3}));
}

TEST_CASE("link") {
    const SimplicialComplex h2 = kuehnel_handle(2);
    const SimplicialComplex lk0 = link(h2, Simplex({0}));
    CHECK(fv(lk0) == std::vector<long>{4, 3}); // the path 2-1-4-3
    CHECK(lk0.containsFace(mask_of(std::vector<int>{1, 2})));
    CHECK(lk0.containsFace(mask_of(std::vector<int>{1, 4})));
    CHECK(lk0.containsFace(mask_of(std::vector<int>{3, 4})));

    const SimplicialComplex lkEdge = link(h2, Simplex({0, 1}));
    CHECK(fv(lkEdge) == std::vector<long>{2}); // vertices {2}, {4}
    CHECK(lkEdge.containsVertex(2));
    CHECK(lkEdge.containsVertex(4));

    const SimplicialComplex s2 = boundary_simplex(2);
    for (int v : s2.vertices()) CHECK(fv(link(s2, Simplex({v}))) == std::vector<long>{3, 3});

    CHECK(fv(link(h2, Simplex({0, 2}))) == std::vector<long>{1}); // only facet 012 holds 02
    CHECK_THROWS_AS(link(h2, Simplex({0, 2, 4})), InvalidInput);  // not a face

    // lk(x, X)[A \ {x}] = lk(x, X[A])
    for (std::uint64_t A = h2.vertexMask();; A = (A - 1) & h2.vertexMask()) {
        if ((A & 1) != 0) { // vertex 0 inside A
            const SimplicialComplex left =
                induced_subcomplex(link(h2, Simplex({0})), A & link(h2, Simplex({0})).vertexMask() & ~std::uint64_t{1});
            const SimplicialComplex right = link(induced_subcomplex(h2, A), Simplex({0}));
            CHECK(left == right);
        }
        if (A == 0) break;
    }
}

TEST_CASE("skeleton") {
    const SimplicialComplex h2 = kuehnel_handle(2);
    CHECK(fv(skeleton(h2, 0)) == std::vector<long>{5});
    CHECK(fv(skeleton(h2, 1)) == std::vector<long>{5, 10}); // K5
    CHECK(fv(skeleton(boundary_simplex(2), 1)) == std::vector<long>{4, 6}); // K4
    CHECK(skeleton(h2, -1).isEmpty());
    CHECK(skeleton(h2, 5) == h2);
    CHECK_THROWS_AS(skeleton(h2, -2), InvalidInput);

    // skeleton(skeleton(X, j), k) = skeleton(X, min(j, k))
    for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 2; ++k)
            CHECK(skeleton(skeleton(h2, j), k) == skeleton(h2, std::min(j, k)));
}

TEST_CASE("boundary complex") {
    CHECK(boundary_complex(simplex_ball(3)) == boundary_simplex(2));

    const SimplicialComplex bd = boundary_complex(kuehnel_handle(2));
    CHECK(fv(bd) == std::vector<long>{5, 5}); // the pentagon 0-2-4-1-3-0
    for (auto e : {std::vector<int>{0, 2}, {2, 4}, {1, 4}, {1, 3}, {0, 3}})
        CHECK(bd.containsFace(mask_of(e)));

    const SimplicialComplex strip = boundary_complex(cx({{0, 1, 2}, {1, 2, 3}}));
    CHECK(fv(strip) == std::vector<long>{4, 4}); // 4-cycle 0-1-3-2-0
    CHECK_FALSE(strip.containsFace(mask_of(std::vector<int>{1, 2})));

    CHECK_THROWS_AS(boundary_complex(cx({{0, 1, 2}, {3, 4}})), InvalidInput); // not pure
    CHECK_THROWS_AS(boundary_complex(cx({{0}})), InvalidInput);               // dim 0

    // closed complexes have empty boundary
    CHECK(boundary_complex(boundary_simplex(3)).isEmpty());

    // every facet of the boundary has dimension dim(X) - 1
    for (const auto& x : {kuehnel_handle(2), kuehnel_handle(3), simplex_ball(4), fan_disc()}) {
        const SimplicialComplex b = boundary_complex(x);
        for (auto f : b.facetMasks()) CHECK(std::popcount(f) == x.dim());
    }
}

TEST_CASE("cone") {
    CHECK(fv(cone(SimplicialComplex(), 7)) == std::vector<long>{1});
    CHECK(fv(cone(boundary_simplex(1), 9)) == std::vector<long>{4, 6, 3});
    CHECK(fv(cone(boundary_simplex(2), 9)) == std::vector<long>{5, 10, 10, 4});
    CHECK_THROWS_AS(cone(boundary_simplex(1), 0), InvalidInput);
}

TEST_CASE("join") {
    const SimplicialComplex point = cx({{9}});
    const SimplicialComplex c3 = boundary_simplex(1);
    CHECK(join(c3, point) == cone(c3, 9));

    // two triangle boundaries on disjoint labels join to the 3-sphere
    const SimplicialComplex a = cx({{0, 1}, {1, 2}, {0, 2}});
    const SimplicialComplex b = cx({{3, 4}, {4, 5}, {3, 5}});
    const SimplicialComplex s3 = join(a, b);
    CHECK(fv(s3) == std::vector<long>{6, 15, 18, 9});
    CHECK(s3.vertexCount() == a.vertexCount() + b.vertexCount());

    CHECK_THROWS_AS(join(a, a), InvalidInput);
    CHECK(join(SimplicialComplex(), a) == a);
}

TEST_CASE("connected components") {
    CHECK(connected_components(kuehnel_handle(2)) == 1);
    CHECK(connected_components(cx({{0, 1, 2}, {4, 5, 6}})) == 2);
    CHECK(connected_components(SimplicialComplex()) == 0);
    CHECK(connected_components(cx({{0}, {1}, {2}})) == 3);
    CHECK(component_masks(cx({{0, 1}, {4, 5}})) ==
          std::vector<std::uint64_t>{mask_of(std::vector<int>{0, 1}),
                                     mask_of(std::vector<int>{4, 5})});
}

TEST_CASE("neighbourliness") {
    CHECK(neighbourliness(kuehnel_handle(2)) == 2); // f_1 = C(5,2), f_2 = 5
    CHECK(neighbourliness(cycle(5)) == 1);
    for (int d = 1; d <= 4; ++d) CHECK(neighbourliness(boundary_simplex(d)) == d + 1);
    CHECK(neighbourliness(simplex_ball(3)) == 4); // full simplex convention
    CHECK_THROWS_AS(neighbourliness(SimplicialComplex()), InvalidInput);

    // boundary of a join ball: min side governs
    CHECK(neighbourliness(boundary_complex(join_ball(2, 2))) == 2);
    CHECK(neighbourliness(boundary_complex(join_ball(4, 2))) == 2);
}

TEST_CASE("join balls expose the expected boundary") {
    // boundary(Δ^a ∗ ∂Δ^b) = ∂Δ^a ∗ ∂Δ^b on the same labels
    for (auto [a, b] : {std::pair{2, 2}, std::pair{3, 3}}) {
        std::vector<std::vector<int>> aFacets, bFacets;
        std::vector<int> av, bv;
        for (int v = 0; v <= a; ++v) av.push_back(v);
        for (int v = a + 1; v <= a + b + 1; ++v) bv.push_back(v);
        for (int skip = 0; skip <= a; ++skip) {
            std::vector<int> f;
            for (int v : av)
                if (v != av[static_cast<std::size_t>(skip)]) f.push_back(v);
            aFacets.push_back(f);
        }
        for (int skip = 0; skip <= b; ++skip) {
            std::vector<int> f;
            for (int v : bv)
                if (v != bv[static_cast<std::size_t>(skip)]) f.push_back(v);
            bFacets.push_back(f);
        }
        const SimplicialComplex expected = join(cx(aFacets), cx(bFacets));
        CHECK(boundary_complex(join_ball(a, b)) == expected);
    }
}

} // TEST_SUITE
