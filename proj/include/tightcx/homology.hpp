#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tightcx/field.hpp"
#include "tightcx/matrix.hpp"
#include "tightcx/simplicial_complex.hpp"

namespace tightcx {

/// Betti numbers β_0..β_d of one complex over one field.
struct BettiVector {
    std::vector<long> values;
    bool reduced = false;
    FieldSpec field = FieldSpec::rationals();

    int dim() const { return static_cast<int>(values.size()) - 1; }
    long operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(values.size())) ? values[i] : 0;
    }
    friend bool operator==(const BettiVector& a, const BettiVector& b) {
        return a.values == b.values && a.reduced == b.reduced && a.field == b.field;
    }
};

/// Matrix of ∂_i from i-chains to (i-1)-chains in canonical bases.  For a
/// sorted face [v_0..v_i] the face omitting v_j gets coefficient (-1)^j;
/// over F_p entries are canonical residues.  ∂_0 is the 0 × f_0 matrix.
Matrix boundary_matrix(const SimplicialComplex& x, int i, const FieldSpec& field);

BettiVector betti_vector(const SimplicialComplex& x, const FieldSpec& field,
                         bool reduced = false);

/// Whether H_i(X[A]) → H_i(X) (inclusion-induced, unreduced) is injective.
/// Degree 0 therefore asks that distinct components of X[A] land in
/// distinct components of X.  A ⊆ V(X) required; the empty subset is
/// injective in every degree.
bool inclusion_injective(const SimplicialComplex& x, std::uint64_t subset_mask,
                         int i, const FieldSpec& field);

namespace engine {

/// Knobs for internal paths; defaults are the production configuration.
/// Tests use these to force the generic F_p route over F_2 and to bypass
/// the memo table.
struct Options {
    bool gf2_packed = true;
    bool use_cache = true;
};

/// Per-complex chain data: sparse boundary operators plus memoized
/// full-complex ranks.  Cheap to build, reused across a subset sweep.
class ChainContext {
public:
    explicit ChainContext(SimplicialComplex x);
    ~ChainContext();
    ChainContext(ChainContext&&) noexcept;
    ChainContext& operator=(ChainContext&&) noexcept;

    const SimplicialComplex& complex() const;

    /// rank of ∂_i(X) over the field (0 when i is outside [1, dim]).
    std::size_t fullBoundaryRank(int i, const FieldSpec& field,
                                 const Options& opt = {});

    struct Impl;
    Impl& impl() { return *impl_; }

private:
    std::unique_ptr<Impl> impl_;
};

/// Reduced Betti vector of X[A], indexed 0..dim(X[A]).  Memoized
/// process-wide by (complex content, subset, characteristic).
std::vector<long> reduced_betti_of_induced(ChainContext& ctx, std::uint64_t subset_mask,
                                           const FieldSpec& field, const Options& opt = {});

/// Same contract as inclusion_injective, sharing the context.
bool inclusion_injective(ChainContext& ctx, std::uint64_t subset_mask, int i,
                         const FieldSpec& field, const Options& opt = {});

/// Process-wide memo statistics / reset (mainly for tests and long runs).
std::size_t betti_cache_size();
void betti_cache_clear();

} // namespace engine

} // namespace tightcx
