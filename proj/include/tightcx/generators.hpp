#pragma once

#include <cstdint>
#include <string>

#include "tightcx/rational.hpp"
#include "tightcx/simplicial_complex.hpp"

namespace tightcx {

/// Name of the pseudo-random algorithm behind every seeded generator;
/// recorded in reports so corpora are reproducible across platforms.
inline constexpr const char* kRngAlgorithm = "splitmix64";

/// splitmix64 with rejection-sampled bounded draws.  Deterministic and
/// platform-independent by construction.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, n), n ≥ 1; unbiased via rejection.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

/// Full d-simplex on {0..d}.
SimplicialComplex simplex_ball(int d);

/// Boundary of the (d+1)-simplex: the standard d-sphere on d+2 vertices.
SimplicialComplex boundary_simplex(int d);

/// Kühnel handle body H(d), d ≥ 2: vertices 0..2d, facets the (d+1)-vertex
/// paths {i, i+1, ..., i+d} mod (2d+1).
SimplicialComplex kuehnel_handle(int d);

/// Tree of D-simplices: start from one D-simplex and repeatedly glue a
/// fresh vertex onto a uniformly chosen free (D-1)-face.
SimplicialComplex stacked_ball(int D, int n_facets, std::uint64_t seed);

/// Δ^a ∗ ∂Δ^b on disjoint labels (a ≥ 1, b ≥ 2): an (a+b)-ball whose
/// interior faces all have dimension ≥ a.
SimplicialComplex join_ball(int a, int b);

/// Boundary complex of the cyclic polytope C(n, D+1): facets are the
/// (D+1)-subsets S of {0..n-1} such that any two elements outside S have
/// an even number of S-elements strictly between them.
SimplicialComplex cyclic_sphere(int n, int D);

/// Closure of a seeded random subset of the (D+1)-subsets of {0..n-1},
/// each kept with the given probability (exact rational in [0,1]).
SimplicialComplex random_complex(int n, int D, const Rational& density,
                                 std::uint64_t seed);

} // namespace tightcx
