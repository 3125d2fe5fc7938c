#pragma once

#include <optional>
#include <vector>

#include "tightcx/homology.hpp"
#include "tightcx/invariants.hpp"

namespace tightcx {

enum class TightnessMethod { Mu, Direct };

struct TightnessWitness {
    std::uint64_t subset_mask = 0;
    int degree = 0;
};

struct TightnessReport {
    bool tight = false;
    bool connected = false;
    TightnessMethod method = TightnessMethod::Mu;
    FieldSpec field = FieldSpec::rationals();
    std::optional<MuVector> mu;
    std::optional<BettiVector> beta;
    /// Present when the direct sweep found a failing pair: the
    /// lexicographically first subset (as a sorted vertex sequence), then
    /// the smallest failing degree.
    std::optional<TightnessWitness> witness;
};

/// Tight iff connected and μ_i = β_i for 0 ≤ i ≤ d (exact equality).
TightnessReport tight_by_mu(const SimplicialComplex& x, const FieldSpec& field,
                            const SweepLimits& limits = {});

/// Tight iff connected and every inclusion-induced map on homology is
/// injective; sweeps all 2^n subsets and all degrees.
TightnessReport tight_by_definition(const SimplicialComplex& x, const FieldSpec& field,
                                    const SweepLimits& limits = {});

struct MorseRow {
    int ell = 0;
    Rational mu_alternating;   // Σ_{i≤ℓ} (-1)^{ℓ-i} μ_i
    Rational beta_alternating; // Σ_{i≤ℓ} (-1)^{ℓ-i} β_i
    Rational mu_value;
    long beta_value = 0;
    bool alternating_equal = false; // equality in the partial-sum bound
    bool degree_equal = false;      // μ_ℓ = β_ℓ
    /// Set when the cross-check ran: injectivity of H_ℓ (resp. H_{ℓ-1}
    /// and H_ℓ) maps confirmed for every induced subcomplex.
    std::optional<bool> injectivity_verified_b;
    std::optional<bool> injectivity_verified_d;
};

struct MorseReport {
    FieldSpec field = FieldSpec::rationals();
    MuVector mu;
    BettiVector beta;
    std::vector<MorseRow> rows;
    bool crosschecked = false;
};

/// Alternating-sum and per-degree comparison table of μ against β.  A
/// violated inequality is an arithmetic bug and throws
/// InternalCheckFailure.  With crosscheck enabled, every equality row is
/// verified against the direct injectivity oracle (also throwing on
/// disagreement, since the equivalence is proven).
MorseReport morse_report(const SimplicialComplex& x, const FieldSpec& field,
                         const SweepLimits& limits = {}, bool crosscheck = false);

struct ConjectureBReport {
    int k = 0;
    long m = 0; // f_0
    FieldSpec field = FieldSpec::rationals();

    // Re-verification of what the caller asserts (never trusted blindly).
    bool dimension_matches = false; // dim = 2k for the sigma comparison
    bool neighbourly_enough = false;
    ManifoldStatus status = ManifoldStatus::NotHomologyManifold;

    std::optional<Rational> sigma_km1;
    Rational formula;     // C(m-k-2, k+1) / C(2k+3, k+1)
    Rational formula_raw; // the same minus δ_{k,1}
    bool sigma_matches_formula = false;
    bool sigma_matches_raw = false;

    /// Filled when the input is instead a closed (2k+1)-manifold: μ_k
    /// against C(m-k-3, k+1)/C(2k+3, k+1).
    std::optional<Rational> mu_k;
    std::optional<Rational> mu_formula;
    std::optional<bool> mu_matches;
};

/// Exploration only: compares σ_{k-1}(S) (dimension 2k) or μ_k (closed
/// dimension 2k+1) against the closed-form candidates.  Reports values
/// and match flags; asserts nothing.
ConjectureBReport conjecture_b_compare(const SimplicialComplex& s, int k,
                                       const FieldSpec& field,
                                       const SweepLimits& limits = {});

} // namespace tightcx
