#include "tightcx/invariants.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tightcx {

namespace {

void check_sweep(int vertices, int limit, const char* what) {
    if (vertices > limit)
        throw SweepLimitExceeded(std::string(what) + ": " + std::to_string(vertices) +
                                     " vertices exceed the sweep limit " +
                                     std::to_string(limit) +
                                     " (raise it explicitly to proceed)",
                                 vertices, limit);
}

} // namespace

SigmaVector sigma_vector(const SimplicialComplex& x, const FieldSpec& field,
                         const SweepLimits& limits) {
    SigmaVector out;
    out.field = field;
    if (x.isEmpty()) return out;
    const int n = x.vertexCount();
    check_sweep(n, limits.sigma_vertices, "sigma sweep");

    const int d = x.dim();
    engine::ChainContext ctx(x);

    // Integer tallies per (degree, subset size); the rational division by
    // C(n, s) happens once at the end.
    std::vector<std::vector<long long>> tally(
        static_cast<std::size_t>(d) + 1,
        std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    const std::uint64_t full = x.vertexMask();
    for (std::uint64_t A = full;; A = (A - 1) & full) {
        if (A != 0) {
            const std::vector<long> rb = engine::reduced_betti_of_induced(ctx, A, field);
            const int s = std::popcount(A);
            for (std::size_t i = 0; i < rb.size(); ++i)
                tally[i][static_cast<std::size_t>(s)] += rb[i];
        }
        if (A == 0) break;
    }

    out.values.assign(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int i = 0; i <= d; ++i) {
        Rational sum(0);
        for (int s = 1; s <= n; ++s) {
            const long long t = tally[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
            if (t != 0) sum += Rational(mpz_class(static_cast<long>(t)), binomial(n, s));
        }
        out.values[static_cast<std::size_t>(i)] = sum;
    }
    return out;
}

MuVector mu_vector(const SimplicialComplex& x, const FieldSpec& field,
                   MuConvention convention, const SweepLimits& limits) {
    MuVector out;
    out.field = field;
    out.convention = convention;
    if (x.isEmpty()) return out;

    const int d = x.dim();
    out.values.assign(static_cast<std::size_t>(d) + 1, Rational(0));

    SweepLimits linkLimits = limits;
    linkLimits.sigma_vertices = limits.mu_link_vertices;

    for (int v : x.vertices()) {
        const SimplicialComplex lk = link(x, Simplex({v}));
        check_sweep(lk.vertexCount(), limits.mu_link_vertices, "mu link sweep");
        const SigmaVector sl = sigma_vector(lk, field, linkLimits);
        const Rational w(1, 1 + static_cast<long>(lk.vertexCount()));
        out.values[0] += w;
        for (int i = 1; i <= d; ++i) {
            Rational numer = sl[i - 1];
            if (convention == MuConvention::RawPrinted && i == 1) numer += Rational(1);
            if (!numer.isZero()) out.values[static_cast<std::size_t>(i)] += numer * w;
        }
    }
    return out;
}

StackedReport is_stacked_with_boundary(const SimplicialComplex& delta, int k) {
    if (k < 1) throw InvalidInput("stackedness requires k >= 1");
    if (delta.dim() < 1 || !delta.isPure())
        throw InvalidInput("stackedness check requires a pure complex of dimension >= 1");
    const SimplicialComplex bd = boundary_complex(delta);
    if (bd.isEmpty())
        throw InvalidInput("complex is closed (empty boundary); use the witness-pair check");

    StackedReport report;
    report.k = k;
    const int top = delta.dim() - 1 - k; // all faces up to here must be boundary faces
    for (int j = 0; j <= top; ++j) {
        for (std::uint64_t f : delta.facesOfDim(j)) {
            if (!bd.containsFace(f)) {
                report.holds = false;
                report.offending_face = Simplex::fromMask(f);
                return report;
            }
        }
    }
    report.holds = true;
    return report;
}

StackedPairReport verify_stacked_pair(const SimplicialComplex& ball, int k,
                                      const std::optional<SimplicialComplex>& expected_boundary) {
    StackedPairReport out;
    out.stacked = is_stacked_with_boundary(ball, k);
    if (expected_boundary) {
        out.boundary_checked = true;
        out.boundary_matches = (boundary_complex(ball) == *expected_boundary);
    }
    return out;
}

const char* to_string(ManifoldStatus s) {
    switch (s) {
        case ManifoldStatus::HomologySphere: return "homology-sphere";
        case ManifoldStatus::HomologyBall: return "homology-ball";
        case ManifoldStatus::ClosedHomologyManifold: return "closed-homology-manifold";
        case ManifoldStatus::HomologyManifoldWithBoundary:
            return "homology-manifold-with-boundary";
        case ManifoldStatus::NotHomologyManifold: return "not-homology-manifold";
    }
    return "?";
}

bool is_closed_manifold_status(ManifoldStatus s) {
    return s == ManifoldStatus::HomologySphere || s == ManifoldStatus::ClosedHomologyManifold;
}

bool is_manifold_status(ManifoldStatus s) { return s != ManifoldStatus::NotHomologyManifold; }

namespace {

// reduced Betti vector of a sphere of dimension m (m >= 0)
bool sphere_like(const std::vector<long>& rb, int dimL, int m) {
    if (m < 0) return dimL < 0;
    if (dimL != m) return false;
    for (std::size_t j = 0; j < rb.size(); ++j) {
        const long want = (static_cast<int>(j) == m) ? 1 : 0;
        if (rb[j] != want) return false;
    }
    return static_cast<int>(rb.size()) == m + 1;
}

bool all_zero(const std::vector<long>& rb) {
    return std::all_of(rb.begin(), rb.end(), [](long v) { return v == 0; });
}

} // namespace

ManifoldStatus manifold_status(const SimplicialComplex& x, const FieldSpec& field) {
    if (x.isEmpty() || !x.isPure()) return ManifoldStatus::NotHomologyManifold;
    const int D = x.dim();
    const SimplicialComplex bd = D >= 1 ? boundary_complex(x) : SimplicialComplex();
    const bool closed = bd.isEmpty();

    for (int i = 0; i <= D; ++i) {
        for (std::uint64_t f : x.facesOfDim(i)) {
            const SimplicialComplex lk = link(x, Simplex::fromMask(f));
            const std::vector<long> rb = betti_vector(lk, field, /*reduced=*/true).values;
            const int m = D - (i + 1);
            if (closed || !bd.containsFace(f)) {
                // interior face: link must look like S^m
                if (!sphere_like(rb, lk.dim(), m)) return ManifoldStatus::NotHomologyManifold;
            } else {
                // boundary face: link must be acyclic (ball-like)
                if (!all_zero(rb)) return ManifoldStatus::NotHomologyManifold;
            }
        }
    }

    const std::vector<long> rbX = betti_vector(x, field, /*reduced=*/true).values;
    if (closed) {
        return sphere_like(rbX, D, D) ? ManifoldStatus::HomologySphere
                                      : ManifoldStatus::ClosedHomologyManifold;
    }
    const ManifoldStatus bdStatus = manifold_status(bd, field);
    if (!is_closed_manifold_status(bdStatus)) return ManifoldStatus::NotHomologyManifold;
    if (all_zero(rbX) && bdStatus == ManifoldStatus::HomologySphere)
        return ManifoldStatus::HomologyBall;
    return ManifoldStatus::HomologyManifoldWithBoundary;
}

bool is_orientable(const SimplicialComplex& m, const FieldSpec& field) {
    if (m.isEmpty()) throw InvalidInput("orientability of the empty complex");
    const int D = m.dim();
    const std::vector<std::uint64_t> comps = component_masks(m);

    bool sawTrue = false, sawFalse = false;
    for (std::uint64_t cm : comps) {
        const SimplicialComplex c = comps.size() == 1 ? m : induced_subcomplex(m, cm);
        if (c.dim() != D || !is_closed_manifold_status(manifold_status(c, field)))
            throw InvalidInput("orientability requires closed homology-manifold components "
                               "of equal dimension");
        const bool top = betti_vector(c, field)[D] == 1;
        (top ? sawTrue : sawFalse) = true;
    }
    if (sawTrue && sawFalse)
        throw InvalidInput("components disagree on orientability");
    return sawTrue;
}

} // namespace tightcx
