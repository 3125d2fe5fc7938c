#include "tightcx/elimination.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "tightcx/errors.hpp"

namespace tightcx::elim {

namespace {

struct BareissOverflow {};

// One-step fraction-free elimination (Bareiss).  After step r every entry
// is an (r+1)x(r+1) minor of the input, so the divisions are exact; the
// 64-bit variant throws BareissOverflow when a minor leaves the int64
// range and the caller redoes the computation with GMP integers.
std::size_t bareiss_int64(std::vector<std::int64_t>& m, std::size_t R, std::size_t C) {
    std::size_t rank = 0;
    std::int64_t prev = 1;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t p = rank;
        while (p < R && m[p * C + c] == 0) ++p;
        if (p == R) continue;
        if (p != rank) {
            for (std::size_t k = c; k < C; ++k)
                std::swap(m[p * C + k], m[rank * C + k]);
        }
        const std::int64_t piv = m[rank * C + c];
        for (std::size_t j = rank + 1; j < R; ++j) {
            const std::int64_t mj = m[j * C + c];
            for (std::size_t k = c + 1; k < C; ++k) {
                const __int128 t = static_cast<__int128>(piv) * m[j * C + k] -
                                   static_cast<__int128>(mj) * m[rank * C + k];
                const __int128 q = t / prev;
                if (t % prev != 0)
                    throw InternalCheckFailure("fraction-free elimination: inexact division");
                if (q > std::numeric_limits<std::int64_t>::max() ||
                    q < std::numeric_limits<std::int64_t>::min())
                    throw BareissOverflow{};
                m[j * C + k] = static_cast<std::int64_t>(q);
            }
            m[j * C + c] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t rank_gf2(std::vector<std::uint64_t>& rows, std::size_t nrows,
                     std::size_t words) {
    std::size_t rank = 0;
    const std::size_t ncols = words * 64;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t bit = 1ull << (c & 63);
        std::size_t p = rank;
        while (p < nrows && !(rows[p * words + w] & bit)) ++p;
        if (p == nrows) continue;
        if (p != rank) {
            for (std::size_t k = w; k < words; ++k)
                std::swap(rows[p * words + k], rows[rank * words + k]);
        }
        for (std::size_t j = rank + 1; j < nrows; ++j) {
            if (rows[j * words + w] & bit) {
                for (std::size_t k = w; k < words; ++k)
                    rows[j * words + k] ^= rows[rank * words + k];
            }
        }
        ++rank;
    }
    return rank;
}

std::int64_t modinv(std::int64_t a, std::int64_t p) {
    // extended Euclid; a must be nonzero mod p
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        const std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw InvalidInput("element not invertible in F_p");
    return t < 0 ? t + p : t;
}

std::size_t rank_modp(std::vector<std::int64_t>& a, std::size_t nrows,
                      std::size_t ncols, std::int64_t p) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        std::size_t piv = rank;
        while (piv < nrows && a[piv * ncols + c] == 0) ++piv;
        if (piv == nrows) continue;
        if (piv != rank) {
            for (std::size_t k = c; k < ncols; ++k)
                std::swap(a[piv * ncols + k], a[rank * ncols + k]);
        }
        const std::int64_t inv = modinv(a[rank * ncols + c], p);
        for (std::size_t j = rank + 1; j < nrows; ++j) {
            const std::int64_t f = a[j * ncols + c] % p;
            if (f == 0) continue;
            const std::int64_t scale = (f * inv) % p;
            for (std::size_t k = c; k < ncols; ++k) {
                const std::int64_t v =
                    (a[j * ncols + k] - scale * a[rank * ncols + k]) % p;
                a[j * ncols + k] = v < 0 ? v + p : v;
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_mpz(std::vector<mpz_class>& m, std::size_t R, std::size_t C) {
    std::size_t rank = 0;
    mpz_class prev = 1;
    mpz_class t;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t p = rank;
        while (p < R && m[p * C + c] == 0) ++p;
        if (p == R) continue;
        if (p != rank) {
            for (std::size_t k = c; k < C; ++k)
                std::swap(m[p * C + k], m[rank * C + k]);
        }
        const mpz_class piv = m[rank * C + c];
        for (std::size_t j = rank + 1; j < R; ++j) {
            const mpz_class mj = m[j * C + c];
            for (std::size_t k = c + 1; k < C; ++k) {
                t = piv * m[j * C + k] - mj * m[rank * C + k];
                mpz_divexact(m[j * C + k].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[j * C + c] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

std::size_t rank_int64_over_q(std::vector<std::int64_t> a, std::size_t nrows,
                              std::size_t ncols) {
    std::vector<std::int64_t> scratch = a;
    try {
        return bareiss_int64(scratch, nrows, ncols);
    } catch (const BareissOverflow&) {
        std::vector<mpz_class> big(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) big[i] = static_cast<long>(a[i]);
        return rank_mpz(big, nrows, ncols);
    }
}

} // namespace tightcx::elim
