#include "tightcx/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_map>

#include "tightcx/elimination.hpp"
#include "tightcx/errors.hpp"

namespace tightcx {

namespace {

// ∂_i in compressed-column form over the canonical bases of X.
struct BoundaryOp {
    std::uint32_t nrows = 0, ncols = 0;
    std::vector<std::uint32_t> colPtr;
    std::vector<std::uint32_t> rowIndex;
    std::vector<std::int8_t> coeff;
};

BoundaryOp build_boundary_op(const SimplicialComplex& x, int i) {
    const auto& cols = x.facesOfDim(i);
    const auto& rows = x.facesOfDim(i - 1);
    BoundaryOp op;
    op.nrows = static_cast<std::uint32_t>(rows.size());
    op.ncols = static_cast<std::uint32_t>(cols.size());
    op.colPtr.reserve(cols.size() + 1);
    op.colPtr.push_back(0);
    if (i >= 1) {
        for (std::uint64_t f : cols) {
            std::uint64_t rest = f;
            int j = 0;
            while (rest) {
                const std::uint64_t bit = rest & (~rest + 1);
                const std::uint64_t sub = f ^ bit;
                const auto it = std::lower_bound(rows.begin(), rows.end(), sub, face_lex_less);
                op.rowIndex.push_back(static_cast<std::uint32_t>(it - rows.begin()));
                op.coeff.push_back((j % 2 == 0) ? 1 : -1);
                rest &= rest - 1;
                ++j;
            }
            op.colPtr.push_back(static_cast<std::uint32_t>(op.rowIndex.size()));
        }
    }
    return op;
}

enum class RowFilter { All, InsideA, OutsideA };

// Rank of ∂_i with columns optionally restricted to faces inside A and
// rows selected by the filter.  Dispatches to the field kernels; the
// matrix is built transposed when that makes it squatter.
std::size_t filtered_rank(const BoundaryOp& op, const std::vector<std::uint64_t>& colFaces,
                          const std::vector<std::uint64_t>& rowFaces, std::uint64_t A,
                          bool colsInsideA, RowFilter rf, const FieldSpec& field,
                          const engine::Options& opt) {
    if (op.ncols == 0 || op.nrows == 0) return 0;

    std::vector<std::uint32_t> selCols;
    selCols.reserve(op.ncols);
    for (std::uint32_t c = 0; c < op.ncols; ++c) {
        if (!colsInsideA || (colFaces[c] & ~A) == 0) selCols.push_back(c);
    }
    if (selCols.empty()) return 0;

    std::vector<std::int32_t> rowPos(op.nrows, -1);
    std::int32_t nsel = 0;
    for (std::uint32_t r = 0; r < op.nrows; ++r) {
        const bool inside = (rowFaces[r] & ~A) == 0;
        const bool keep = rf == RowFilter::All || (rf == RowFilter::InsideA ? inside : !inside);
        if (keep) rowPos[r] = nsel++;
    }
    if (nsel == 0) return 0;

    const std::size_t R = static_cast<std::size_t>(nsel);
    const std::size_t C = selCols.size();
    const bool transpose = R > C; // rank is orientation-independent

    const auto forEachEntry = [&](auto&& emit) {
        for (std::size_t cc = 0; cc < C; ++cc) {
            const std::uint32_t c = selCols[cc];
            for (std::uint32_t k = op.colPtr[c]; k < op.colPtr[c + 1]; ++k) {
                const std::int32_t rr = rowPos[op.rowIndex[k]];
                if (rr < 0) continue;
                if (transpose)
                    emit(cc, static_cast<std::size_t>(rr), op.coeff[k]);
                else
                    emit(static_cast<std::size_t>(rr), cc, op.coeff[k]);
            }
        }
    };
    const std::size_t MR = transpose ? C : R;
    const std::size_t MC = transpose ? R : C;

    const std::uint32_t p = field.characteristic();
    if (p == 2 && opt.gf2_packed) {
        const std::size_t words = (MC + 63) / 64;
        std::vector<std::uint64_t> bits(MR * words, 0);
        forEachEntry([&](std::size_t r, std::size_t c, std::int8_t) {
            bits[r * words + (c >> 6)] ^= (1ull << (c & 63));
        });
        return elim::rank_gf2(bits, MR, words);
    }
    if (p == 0) {
        std::vector<std::int64_t> a(MR * MC, 0);
        forEachEntry([&](std::size_t r, std::size_t c, std::int8_t v) { a[r * MC + c] = v; });
        return elim::rank_int64_over_q(std::move(a), MR, MC);
    }
    std::vector<std::int64_t> a(MR * MC, 0);
    forEachEntry([&](std::size_t r, std::size_t c, std::int8_t v) {
        a[r * MC + c] = v > 0 ? 1 : static_cast<std::int64_t>(p) - 1;
    });
    return elim::rank_modp(a, MR, MC, p);
}

struct CacheKey {
    std::shared_ptr<const std::vector<std::uint64_t>> facets;
    std::size_t cxHash = 0;
    std::uint64_t subset = 0;
    std::uint32_t characteristic = 0;

    bool operator==(const CacheKey& o) const {
        return cxHash == o.cxHash && subset == o.subset &&
               characteristic == o.characteristic &&
               (facets == o.facets || *facets == *o.facets);
    }
};

struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const {
        std::uint64_t h = k.cxHash;
        h ^= k.subset + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h ^= k.characteristic + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Process-wide memo of reduced Betti vectors of induced subcomplexes.
// Behaves as a single atomic map; values are deterministic so replays
// are idempotent.
class BettiCache {
public:
    static BettiCache& instance() {
        static BettiCache c;
        return c;
    }

    std::optional<std::vector<long>> lookup(const CacheKey& k) {
        std::lock_guard<std::mutex> lock(mu_);
        const auto it = map_.find(k);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void store(CacheKey k, std::vector<long> v) {
        std::lock_guard<std::mutex> lock(mu_);
        if (map_.size() >= kMaxEntries) return;
        map_.emplace(std::move(k), std::move(v));
    }

    std::size_t size() {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
    }

private:
    static constexpr std::size_t kMaxEntries = std::size_t{1} << 23;
    std::mutex mu_;
    std::unordered_map<CacheKey, std::vector<long>, CacheKeyHash> map_;
};

} // namespace

namespace engine {

struct ChainContext::Impl {
    SimplicialComplex x;
    std::vector<BoundaryOp> ops; // ops[i] = ∂_i, valid for 1 <= i <= dim
    std::map<std::uint32_t, std::vector<std::optional<std::size_t>>> fullRanks;

    explicit Impl(SimplicialComplex cx) : x(std::move(cx)) {
        ops.resize(static_cast<std::size_t>(std::max(0, x.dim())) + 1);
        for (int i = 1; i <= x.dim(); ++i)
            ops[static_cast<std::size_t>(i)] = build_boundary_op(x, i);
    }
};

ChainContext::ChainContext(SimplicialComplex x) : impl_(std::make_unique<Impl>(std::move(x))) {}
ChainContext::~ChainContext() = default;
ChainContext::ChainContext(ChainContext&&) noexcept = default;
ChainContext& ChainContext::operator=(ChainContext&&) noexcept = default;

const SimplicialComplex& ChainContext::complex() const { return impl_->x; }

std::size_t ChainContext::fullBoundaryRank(int i, const FieldSpec& field, const Options& opt) {
    const SimplicialComplex& x = impl_->x;
    if (i < 1 || i > x.dim()) return 0;
    auto& slot = impl_->fullRanks[field.characteristic()];
    if (slot.empty()) slot.resize(static_cast<std::size_t>(x.dim()) + 1);
    auto& entry = slot[static_cast<std::size_t>(i)];
    if (!entry) {
        entry = filtered_rank(impl_->ops[static_cast<std::size_t>(i)], x.facesOfDim(i),
                              x.facesOfDim(i - 1), ~std::uint64_t{0}, false, RowFilter::All,
                              field, opt);
    }
    return *entry;
}

std::vector<long> reduced_betti_of_induced(ChainContext& ctx, std::uint64_t subset_mask,
                                           const FieldSpec& field, const Options& opt) {
    const SimplicialComplex& x = ctx.complex();
    if ((subset_mask & ~x.vertexMask()) != 0)
        throw InvalidInput("induced subcomplex: subset contains non-vertices");

    CacheKey key{x.sharedFacetList(), x.contentHash(), subset_mask, field.characteristic()};
    if (opt.use_cache) {
        if (auto hit = BettiCache::instance().lookup(key)) return *hit;
    }

    // count faces inside the subset per dimension
    std::vector<long> count(static_cast<std::size_t>(x.dim()) + 1, 0);
    int dimY = -1;
    for (int i = 0; i <= x.dim(); ++i) {
        long c = 0;
        for (std::uint64_t f : x.facesOfDim(i))
            if ((f & ~subset_mask) == 0) ++c;
        count[static_cast<std::size_t>(i)] = c;
        if (c == 0) break; // closure: nothing above either
        dimY = i;
    }

    std::vector<long> out;
    if (dimY >= 0) {
        out.resize(static_cast<std::size_t>(dimY) + 1);
        std::vector<std::size_t> rank(static_cast<std::size_t>(dimY) + 2, 0);
        for (int i = 1; i <= dimY; ++i) {
            rank[static_cast<std::size_t>(i)] =
                filtered_rank(ctx.impl().ops[static_cast<std::size_t>(i)], x.facesOfDim(i),
                              x.facesOfDim(i - 1), subset_mask, true, RowFilter::InsideA,
                              field, opt);
        }
        for (int i = 0; i <= dimY; ++i) {
            out[static_cast<std::size_t>(i)] =
                count[static_cast<std::size_t>(i)] -
                static_cast<long>(rank[static_cast<std::size_t>(i)]) -
                static_cast<long>(rank[static_cast<std::size_t>(i) + 1]);
        }
        out[0] -= 1; // reduced in degree 0; the complex is nonempty here
    }

    if (opt.use_cache) BettiCache::instance().store(std::move(key), out);
    return out;
}

bool inclusion_injective(ChainContext& ctx, std::uint64_t subset_mask, int i,
                         const FieldSpec& field, const Options& opt) {
    const SimplicialComplex& x = ctx.complex();
    if ((subset_mask & ~x.vertexMask()) != 0)
        throw InvalidInput("inclusion_injective: subset contains non-vertices");
    if (i < 0) throw InvalidInput("inclusion_injective: negative degree");
    if (i >= x.dim()) return true; // no (i+1)-chains: boundaries vanish in X

    // ker(H_i(Y) -> H_i(X)) = (C_i(Y) ∩ B_i(X)) / B_i(Y), and
    // dim(C_i(Y) ∩ B_i(X)) = rank ∂_{i+1}(X) − rank(rows outside Y of ∂_{i+1}(X)).
    const auto& op = ctx.impl().ops[static_cast<std::size_t>(i + 1)];
    const std::size_t rankFull = ctx.fullBoundaryRank(i + 1, field, opt);
    const std::size_t rankOutside =
        filtered_rank(op, x.facesOfDim(i + 1), x.facesOfDim(i), subset_mask, false,
                      RowFilter::OutsideA, field, opt);
    const std::size_t rankInY =
        filtered_rank(op, x.facesOfDim(i + 1), x.facesOfDim(i), subset_mask, true,
                      RowFilter::InsideA, field, opt);
    return rankFull - rankOutside == rankInY;
}

std::size_t betti_cache_size() { return BettiCache::instance().size(); }
void betti_cache_clear() { BettiCache::instance().clear(); }

} // namespace engine

Matrix boundary_matrix(const SimplicialComplex& x, int i, const FieldSpec& field) {
    if (i < 0 || i > x.dim())
        throw InvalidInput("boundary matrix degree out of range");
    const auto& cols = x.facesOfDim(i);
    if (i == 0) return Matrix(0, cols.size());
    const auto& rows = x.facesOfDim(i - 1);
    Matrix m(rows.size(), cols.size());
    const Rational minusOne = field.isRationals()
                                  ? Rational(-1)
                                  : Rational(static_cast<long>(field.characteristic()) - 1);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::uint64_t f = cols[c];
        std::uint64_t rest = f;
        int j = 0;
        while (rest) {
            const std::uint64_t bit = rest & (~rest + 1);
            const std::uint64_t sub = f ^ bit;
            const auto it = std::lower_bound(rows.begin(), rows.end(), sub, face_lex_less);
            m.set(static_cast<std::size_t>(it - rows.begin()), c,
                  (j % 2 == 0) ? Rational(1) : minusOne);
            rest &= rest - 1;
            ++j;
        }
    }
    return m;
}

BettiVector betti_vector(const SimplicialComplex& x, const FieldSpec& field, bool reduced) {
    BettiVector out;
    out.field = field;
    out.reduced = reduced;
    if (x.isEmpty()) return out;
    engine::ChainContext ctx(x);
    std::vector<long> rb = engine::reduced_betti_of_induced(ctx, x.vertexMask(), field);
    rb.resize(static_cast<std::size_t>(x.dim()) + 1, 0);
    if (!reduced) rb[0] += 1;
    out.values = std::move(rb);
    return out;
}

bool inclusion_injective(const SimplicialComplex& x, std::uint64_t subset_mask, int i,
                         const FieldSpec& field) {
    engine::ChainContext ctx(x);
    return engine::inclusion_injective(ctx, subset_mask, i, field);
}

} // namespace tightcx
