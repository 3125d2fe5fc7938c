#include "tightcx/tightness.hpp"

#include <algorithm>
#include <functional>
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

TightnessReport tight_by_mu(const SimplicialComplex& x, const FieldSpec& field,
                            const SweepLimits& limits) {
    TightnessReport report;
    report.method = TightnessMethod::Mu;
    report.field = field;
    report.connected = connected_components(x) == 1;
    report.mu = mu_vector(x, field, MuConvention::Corrected, limits);
    report.beta = betti_vector(x, field, /*reduced=*/false);
    bool equal = true;
    for (int i = 0; i <= x.dim(); ++i) {
        if ((*report.mu)[i] != Rational((*report.beta)[i])) {
            equal = false;
            break;
        }
    }
    report.tight = report.connected && equal && !x.isEmpty();
    return report;
}

TightnessReport tight_by_definition(const SimplicialComplex& x, const FieldSpec& field,
                                    const SweepLimits& limits) {
    TightnessReport report;
    report.method = TightnessMethod::Direct;
    report.field = field;
    report.connected = connected_components(x) == 1;
    if (x.isEmpty() || !report.connected) {
        report.tight = false;
        return report;
    }
    check_sweep(x.vertexCount(), limits.direct_vertices, "definitional tightness sweep");

    engine::ChainContext ctx(x);
    const std::vector<int> verts = x.vertices();
    const int d = x.dim();

    // Depth-first extension by increasing labels visits the subsets in
    // lexicographic order of their sorted vertex sequences, so the first
    // failure found is the canonical witness.
    std::optional<TightnessWitness> witness;
    std::function<bool(std::uint64_t, std::size_t)> visit =
        [&](std::uint64_t mask, std::size_t firstIdx) -> bool {
        if (mask != 0) {
            for (int i = 0; i <= d; ++i) {
                if (!engine::inclusion_injective(ctx, mask, i, field)) {
                    witness = TightnessWitness{mask, i};
                    return false;
                }
            }
        }
        for (std::size_t j = firstIdx; j < verts.size(); ++j) {
            if (!visit(mask | (std::uint64_t{1} << verts[j]), j + 1)) return false;
        }
        return true;
    };
    visit(0, 0);

    report.witness = witness;
    report.tight = !witness.has_value();
    return report;
}

MorseReport morse_report(const SimplicialComplex& x, const FieldSpec& field,
                         const SweepLimits& limits, bool crosscheck) {
    MorseReport report;
    report.field = field;
    report.mu = mu_vector(x, field, MuConvention::Corrected, limits);
    report.beta = betti_vector(x, field, /*reduced=*/false);
    report.crosschecked = crosscheck;

    const int d = x.dim();
    Rational muAlt(0), betaAlt(0);
    for (int ell = 0; ell <= d; ++ell) {
        muAlt = report.mu[ell] - muAlt;
        betaAlt = Rational(report.beta[ell]) - betaAlt;

        MorseRow row;
        row.ell = ell;
        row.mu_alternating = muAlt;
        row.beta_alternating = betaAlt;
        row.mu_value = report.mu[ell];
        row.beta_value = report.beta[ell];
        row.alternating_equal = (muAlt == betaAlt);
        row.degree_equal = (row.mu_value == Rational(row.beta_value));

        if (muAlt < betaAlt)
            throw InternalCheckFailure(
                "alternating mu sum fell below the beta sum at degree " + std::to_string(ell) +
                " (" + muAlt.str() + " < " + betaAlt.str() + "); this is an engine bug");
        if (row.mu_value < Rational(row.beta_value))
            throw InternalCheckFailure("mu_" + std::to_string(ell) + " = " + row.mu_value.str() +
                                       " fell below beta, an engine bug");
        report.rows.push_back(std::move(row));
    }

    if (crosscheck && d >= 0) {
        const bool anyEquality =
            std::any_of(report.rows.begin(), report.rows.end(), [](const MorseRow& r) {
                return r.alternating_equal || r.degree_equal;
            });
        if (anyEquality) {
            check_sweep(x.vertexCount(), limits.direct_vertices, "morse cross-check sweep");
            engine::ChainContext ctx(x);
            const std::uint64_t full = x.vertexMask();
            const auto allInjective = [&](int degree) {
                for (std::uint64_t A = full;; A = (A - 1) & full) {
                    if (A != 0 && !engine::inclusion_injective(ctx, A, degree, field))
                        return false;
                    if (A == 0) break;
                }
                return true;
            };
            std::vector<std::optional<bool>> memo(static_cast<std::size_t>(d) + 1);
            const auto checkDegree = [&](int degree) {
                if (degree < 0) return true; // maps on H_{-1} are trivially injective
                auto& slot = memo[static_cast<std::size_t>(degree)];
                if (!slot) slot = allInjective(degree);
                return *slot;
            };
            for (MorseRow& row : report.rows) {
                if (row.alternating_equal) {
                    row.injectivity_verified_b = checkDegree(row.ell);
                    if (!*row.injectivity_verified_b)
                        throw InternalCheckFailure(
                            "equality at degree " + std::to_string(row.ell) +
                            " but an induced map fails injectivity; engine bug");
                }
                if (row.degree_equal) {
                    row.injectivity_verified_d =
                        checkDegree(row.ell - 1) && checkDegree(row.ell);
                    if (!*row.injectivity_verified_d)
                        throw InternalCheckFailure(
                            "mu/beta equality at degree " + std::to_string(row.ell) +
                            " but an induced map fails injectivity; engine bug");
                }
            }
        }
    }
    return report;
}

ConjectureBReport conjecture_b_compare(const SimplicialComplex& s, int k,
                                       const FieldSpec& field, const SweepLimits& limits) {
    if (k < 1) throw InvalidInput("conjecture comparison requires k >= 1");
    if (s.isEmpty()) throw InvalidInput("conjecture comparison of the empty complex");

    ConjectureBReport report;
    report.k = k;
    report.m = s.vertexCount();
    report.field = field;
    report.status = manifold_status(s, field);
    report.neighbourly_enough = neighbourliness(s) >= k;

    const long m = report.m;
    const mpz_class denom = binomial(2 * k + 3, k + 1);
    report.formula = Rational(binomial(m - k - 2, k + 1), denom);
    report.formula_raw = report.formula - Rational(k == 1 ? 1 : 0);

    const int d = s.dim();
    report.dimension_matches = (d == 2 * k);
    if (report.dimension_matches) {
        const SigmaVector sigma = sigma_vector(s, field, limits);
        report.sigma_km1 = sigma[k - 1];
        report.sigma_matches_formula = (*report.sigma_km1 == report.formula);
        report.sigma_matches_raw = (*report.sigma_km1 == report.formula_raw);
    } else if (d == 2 * k + 1 && is_closed_manifold_status(report.status)) {
        const MuVector mu = mu_vector(s, field, MuConvention::Corrected, limits);
        report.mu_k = mu[k];
        report.mu_formula = Rational(binomial(m - k - 3, k + 1), denom);
        report.mu_matches = (*report.mu_k == *report.mu_formula);
    }
    return report;
}

} // namespace tightcx
