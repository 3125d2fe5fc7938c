#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tightcx/generators.hpp"
#include "tightcx/invariants.hpp"

using namespace tightcx;
using namespace tightcx::testing;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);

std::vector<Rational> sig(const SimplicialComplex& x, const FieldSpec& f = kQ) {
    return sigma_vector(x, f).values;
}

std::vector<Rational> rat(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

} // namespace

TEST_SUITE("invariants") {

TEST_CASE("sigma on the small fixtures") {
    CHECK(sig(boundary_simplex(1)) == rat({Rational(0), Rational(1)}));
    // the 4-vertex path 2-1-4-3
    CHECK(sig(cx({{1, 2}, {1, 4}, {3, 4}})) == rat({Rational(1), Rational(0)}));
    CHECK(sig(boundary_simplex(2)) == rat({Rational(0), Rational(0), Rational(1)}));
    CHECK(sigma_vector(cycle(6), kQ)[0] == Rational(2));
    CHECK(sig(fan_disc()) == rat({Rational(1, 5), Rational(1, 5), Rational(0)}));
    CHECK(sigma_vector(SimplicialComplex(), kQ).values.empty());
}

TEST_CASE("sigma degree zero agrees with the union-find oracle") {
    for (std::uint64_t seed : {11, 12, 13, 14, 15}) {
        const SimplicialComplex x = random_complex(7, 2, Rational(2, 5), seed);
        if (x.isEmpty()) continue;
        CHECK(sigma_vector(x, kF2)[0] == oracle_sigma0(x));
        CHECK(sigma_vector(x, kQ)[0] == oracle_sigma0(x));
    }
}

TEST_CASE("sigma respects the sweep limit") {
    SweepLimits tiny;
    tiny.sigma_vertices = 4;
    CHECK_THROWS_AS(sigma_vector(kuehnel_handle(2), kQ, tiny), SweepLimitExceeded);
    CHECK_NOTHROW(sigma_vector(kuehnel_handle(2), kQ, tiny.withOverride(5)));
}

TEST_CASE("mu on the small fixtures") {
    CHECK(mu_vector(kuehnel_handle(2), kQ).values == rat({Rational(1), Rational(1), Rational(0)}));
    CHECK(mu_vector(kuehnel_handle(2), kF2).values ==
          rat({Rational(1), Rational(1), Rational(0)}));
    CHECK(mu_vector(boundary_simplex(2), kQ).values ==
          rat({Rational(1), Rational(0), Rational(1)}));
    CHECK(mu_vector(fan_disc(), kQ).values ==
          rat({Rational(6, 5), Rational(2, 5), Rational(1, 5)}));
    CHECK(mu_vector(cycle(5), kQ).values == rat({Rational(5, 3), Rational(5, 3)}));
}

TEST_CASE("raw printed convention differs exactly by mu_0 in degree one") {
    for (const auto& x : {boundary_simplex(2), kuehnel_handle(2), fan_disc()}) {
        const MuVector fixed = mu_vector(x, kQ, MuConvention::Corrected);
        const MuVector raw = mu_vector(x, kQ, MuConvention::RawPrinted);
        CHECK(raw[0] == fixed[0]);
        CHECK(raw[1] == fixed[1] + fixed[0]);
        for (int i = 2; i <= x.dim(); ++i) CHECK(raw[i] == fixed[i]);
    }
    // the discriminating instance: the tetrahedron boundary
    const MuVector raw = mu_vector(boundary_simplex(2), kQ, MuConvention::RawPrinted);
    CHECK(raw[1] == Rational(1));
    CHECK(betti_vector(boundary_simplex(2), kQ)[1] == 0);
}

TEST_CASE("mu_0 is one exactly for 2-neighbourly complexes") {
    const std::vector<SimplicialComplex> samples = {
        kuehnel_handle(2), kuehnel_handle(3), boundary_simplex(2), fan_disc(), cycle(5),
        load_fixture("csaszar_torus.cplx")};
    for (const auto& x : samples) {
        const bool twoNeighbourly = neighbourliness(x) >= 2;
        CHECK((mu_vector(x, kQ)[0] == Rational(1)) == twoNeighbourly);
        CHECK(mu_vector(x, kQ)[0] >= Rational(1));
    }
}

TEST_CASE("stackedness with boundary") {
    const StackedReport h2k1 = is_stacked_with_boundary(kuehnel_handle(2), 1);
    CHECK(h2k1.holds);

    const StackedReport fank1 = is_stacked_with_boundary(fan_disc(), 1);
    CHECK_FALSE(fank1.holds);
    REQUIRE(fank1.offending_face.has_value());
    CHECK(*fank1.offending_face == Simplex({0})); // the apex is interior

    CHECK(is_stacked_with_boundary(fan_disc(), 2).holds);
    CHECK(is_stacked_with_boundary(simplex_ball(3), 1).holds);

    CHECK_THROWS_AS(is_stacked_with_boundary(boundary_simplex(2), 1), InvalidInput); // closed
    CHECK_THROWS_AS(is_stacked_with_boundary(kuehnel_handle(2), 0), InvalidInput);
    CHECK_THROWS_AS(is_stacked_with_boundary(cx({{0, 1, 2}, {3, 4}}), 1), InvalidInput);
}

TEST_CASE("stacked pair verification") {
    CHECK(verify_stacked_pair(simplex_ball(3), 1, boundary_simplex(2)).holds());

    const auto jb = verify_stacked_pair(join_ball(2, 2), 2, std::nullopt);
    CHECK(jb.stacked.holds);
    CHECK_FALSE(jb.boundary_checked);

    // mismatched labels are reported apart from stackedness
    const auto mismatch = verify_stacked_pair(simplex_ball(3), 1, boundary_simplex(3));
    CHECK(mismatch.stacked.holds);
    CHECK(mismatch.boundary_checked);
    CHECK_FALSE(mismatch.boundary_matches);
    CHECK_FALSE(mismatch.holds());

    const SimplicialComplex tree = stacked_ball(3, 5, 77);
    CHECK(verify_stacked_pair(tree, 1, std::nullopt).holds());
}

TEST_CASE("manifold status") {
    CHECK(manifold_status(boundary_simplex(2), kQ) == ManifoldStatus::HomologySphere);
    CHECK(manifold_status(kuehnel_handle(2), kQ) ==
          ManifoldStatus::HomologyManifoldWithBoundary);
    CHECK(manifold_status(cx({{0, 1, 2}, {2, 3, 4}}), kQ) ==
          ManifoldStatus::NotHomologyManifold);
    CHECK(manifold_status(simplex_ball(3), kQ) == ManifoldStatus::HomologyBall);
    CHECK(manifold_status(load_fixture("csaszar_torus.cplx"), kQ) ==
          ManifoldStatus::ClosedHomologyManifold);
    CHECK(manifold_status(fan_disc(), kQ) == ManifoldStatus::HomologyBall);
    CHECK(manifold_status(cx({{0, 1, 2}, {3, 4}}), kQ) == ManifoldStatus::NotHomologyManifold);
    CHECK(manifold_status(SimplicialComplex(), kQ) == ManifoldStatus::NotHomologyManifold);
    CHECK(manifold_status(cx({{0}, {1}}), kQ) == ManifoldStatus::HomologySphere); // S^0
    CHECK(manifold_status(cx({{0}}), kQ) == ManifoldStatus::ClosedHomologyManifold);

    for (std::uint64_t seed : {21, 22, 23}) {
        CHECK(manifold_status(stacked_ball(3, 6, seed), kF2) == ManifoldStatus::HomologyBall);
        CHECK(manifold_status(boundary_complex(stacked_ball(3, 6, seed)), kF2) ==
              ManifoldStatus::HomologySphere);
    }
    CHECK(manifold_status(cyclic_sphere(7, 3), kQ) == ManifoldStatus::HomologySphere);
    CHECK(manifold_status(cyclic_sphere(8, 4), kQ) == ManifoldStatus::HomologySphere);
}

TEST_CASE("orientability") {
    CHECK(is_orientable(boundary_simplex(2), kQ));
    CHECK(is_orientable(load_fixture("csaszar_torus.cplx"), kQ));
    CHECK(is_orientable(load_fixture("csaszar_torus.cplx"), kF2));

    // the projective plane flips with the field
    const SimplicialComplex rp2 = load_fixture("rp2_6.cplx");
    CHECK_FALSE(is_orientable(rp2, kQ));
    CHECK(is_orientable(rp2, kF2));

    CHECK_THROWS_AS(is_orientable(kuehnel_handle(2), kQ), InvalidInput); // has boundary
    CHECK_THROWS_AS(is_orientable(SimplicialComplex(), kQ), InvalidInput);

    // disconnected but uniform components are fine
    const SimplicialComplex two = cx({{0, 1}, {1, 2}, {0, 2}, {4, 5}, {5, 6}, {4, 6}});
    CHECK(is_orientable(two, kQ));
}

} // TEST_SUITE
