#include "tightcx/matrix.hpp"

#include <string>

#include "tightcx/elimination.hpp"
#include "tightcx/errors.hpp"

namespace tightcx {

std::size_t Matrix::idx(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw InvalidInput("matrix access (" + std::to_string(r) + "," + std::to_string(c) +
                           ") out of range for " + std::to_string(rows_) + "x" +
                           std::to_string(cols_));
    return r * cols_ + c;
}

const Rational& Matrix::at(std::size_t r, std::size_t c) const { return a_[idx(r, c)]; }

void Matrix::set(std::size_t r, std::size_t c, Rational v) { a_[idx(r, c)] = std::move(v); }

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

namespace {

std::size_t rank_over_q(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<mpz_class> a(R * C);
    for (std::size_t r = 0; r < R; ++r) {
        // scale the row to integers; row scaling preserves rank
        mpz_class l = 1;
        for (std::size_t c = 0; c < C; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den().get_mpz_t());
        for (std::size_t c = 0; c < C; ++c) {
            const Rational& v = m.at(r, c);
            a[r * C + c] = v.num() * (l / v.den());
        }
    }
    return elim::rank_mpz(a, R, C);
}

std::int64_t residue_mod_p(const mpz_class& z, std::int64_t p) {
    mpz_class r = z % p; // truncated division, sign follows z
    std::int64_t v = r.get_si();
    return v < 0 ? v + p : v;
}

std::size_t rank_over_p(const Matrix& m, std::int64_t p) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::int64_t> a(R * C);
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t c = 0; c < C; ++c) {
            const Rational& v = m.at(r, c);
            const std::int64_t den = residue_mod_p(v.den(), p);
            if (den == 0)
                throw InvalidInput("matrix entry has denominator divisible by the field characteristic");
            const std::int64_t num = residue_mod_p(v.num(), p);
            a[r * C + c] = (num * elim::modinv(den, p)) % p;
        }
    }
    return elim::rank_modp(a, R, C, p);
}

} // namespace

std::size_t matrix_rank(const Matrix& m, const FieldSpec& field) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (field.isRationals()) return rank_over_q(m);
    return rank_over_p(m, field.characteristic());
}

std::size_t subspace_intersection_dim(const std::vector<std::vector<Rational>>& U,
                                      const std::vector<std::vector<Rational>>& W,
                                      const FieldSpec& field) {
    std::size_t len = 0;
    bool have = false;
    for (const auto* basis : {&U, &W}) {
        for (const auto& v : *basis) {
            if (!have) {
                len = v.size();
                have = true;
            } else if (v.size() != len) {
                throw InvalidInput("subspace basis vectors of mismatched length");
            }
        }
    }
    if (!have || len == 0) return 0;

    const auto asMatrix = [&](const std::vector<std::vector<Rational>>& basis) {
        Matrix m(len, basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c)
            for (std::size_t r = 0; r < len; ++r) m.set(r, c, basis[c][r]);
        return m;
    };
    Matrix all(len, U.size() + W.size());
    for (std::size_t c = 0; c < U.size(); ++c)
        for (std::size_t r = 0; r < len; ++r) all.set(r, c, U[c][r]);
    for (std::size_t c = 0; c < W.size(); ++c)
        for (std::size_t r = 0; r < len; ++r) all.set(r, U.size() + c, W[c][r]);

    const std::size_t ru = U.empty() ? 0 : matrix_rank(asMatrix(U), field);
    const std::size_t rw = W.empty() ? 0 : matrix_rank(asMatrix(W), field);
    const std::size_t rall = matrix_rank(all, field);
    return ru + rw - rall;
}

} // namespace tightcx
