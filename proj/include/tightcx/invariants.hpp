#pragma once

#include <optional>
#include <vector>

#include "tightcx/homology.hpp"
#include "tightcx/rational.hpp"
#include "tightcx/simplicial_complex.hpp"

namespace tightcx {

/// Vertex budgets for the exponential subset sweeps.  Exceeding a budget
/// raises SweepLimitExceeded; there is no silent truncation.
struct SweepLimits {
    int sigma_vertices = 20; // direct sigma sweep over 2^n subsets
    int mu_link_vertices = 19; // per-link sigma sweeps inside mu
    int direct_vertices = 16; // definitional tightness sweep

    SweepLimits withOverride(int n) const {
        SweepLimits l = *this;
        l.sigma_vertices = n;
        l.mu_link_vertices = n;
        l.direct_vertices = n;
        return l;
    }
};

struct SigmaVector {
    std::vector<Rational> values; // σ_0 .. σ_d
    FieldSpec field = FieldSpec::rationals();

    int dim() const { return static_cast<int>(values.size()) - 1; }
    Rational operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(values.size())) ? values[i] : Rational(0);
    }
};

/// σ_i(X) = Σ_{A ⊆ V(X)} reduced β_i(X[A]) / C(f_0, #A).
SigmaVector sigma_vector(const SimplicialComplex& x, const FieldSpec& field,
                         const SweepLimits& limits = {});

enum class MuConvention {
    Corrected, // numerator σ_{i-1}(lk x); the engine default
    RawPrinted // adds the Kronecker δ_{i1} term to the numerator
};

struct MuVector {
    std::vector<Rational> values; // μ_0 .. μ_d
    FieldSpec field = FieldSpec::rationals();
    MuConvention convention = MuConvention::Corrected;

    int dim() const { return static_cast<int>(values.size()) - 1; }
    Rational operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(values.size())) ? values[i] : Rational(0);
    }
};

/// μ_0 = Σ_x 1/(1+f_0(lk x)); μ_i = Σ_x σ_{i-1}(lk x)/(1+f_0(lk x)).
/// The raw-printed convention adds δ_{i1}/(1+f_0(lk x)) per vertex.
MuVector mu_vector(const SimplicialComplex& x, const FieldSpec& field,
                   MuConvention convention = MuConvention::Corrected,
                   const SweepLimits& limits = {});

struct StackedReport {
    int k = 0;
    bool holds = false;
    /// First face (dimension order, then canonical order) of the low
    /// skeleton missing from the boundary, when the check fails.
    std::optional<Simplex> offending_face;
};

/// Skel_{dim-1-k}(Δ) = Skel_{dim-1-k}(∂Δ)?  Δ must be pure of dimension
/// ≥ 1 with nonempty boundary; a closed complex throws InvalidInput
/// (use verify_stacked_pair with the witness ball instead).
StackedReport is_stacked_with_boundary(const SimplicialComplex& delta, int k);

struct StackedPairReport {
    StackedReport stacked;
    bool boundary_checked = false; // an expected boundary was supplied
    bool boundary_matches = false; // labeled equality of ∂B with it
    bool holds() const { return stacked.holds && (!boundary_checked || boundary_matches); }
};

/// Stackedness of the ball plus, optionally, ∂B = expected as labeled
/// complexes.  A label mismatch is reported separately from a
/// stackedness failure.
StackedPairReport verify_stacked_pair(const SimplicialComplex& ball, int k,
                                      const std::optional<SimplicialComplex>& expected_boundary);

enum class ManifoldStatus {
    HomologySphere,
    HomologyBall,
    ClosedHomologyManifold,        // closed but not a sphere
    HomologyManifoldWithBoundary,  // nonempty boundary, not a ball
    NotHomologyManifold
};

const char* to_string(ManifoldStatus s);
bool is_closed_manifold_status(ManifoldStatus s);
bool is_manifold_status(ManifoldStatus s);

/// Classifies X over the field by the homology of every face link (and,
/// with boundary, the recursive status of the boundary complex).  Returns
/// the most specific applicable status; non-pure or empty input is
/// NotHomologyManifold.
ManifoldStatus manifold_status(const SimplicialComplex& x, const FieldSpec& field);

/// For a closed homology manifold: top Betti number equals one (checked
/// componentwise; mixed components throw).  Always true over F_2.
bool is_orientable(const SimplicialComplex& m, const FieldSpec& field);

} // namespace tightcx
