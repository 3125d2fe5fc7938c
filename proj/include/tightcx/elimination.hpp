#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstddef>
#include <vector>

namespace tightcx::elim {

// Dense elimination kernels.  All pivoting is "first nonzero in column
// order", so every routine is deterministic.  These are the only places
// in the engine that perform row reduction.

/// Rank over GF(2).  `rows` holds nrows bit-packed rows of `words` 64-bit
/// words each (column j lives in word j/64, bit j%64).  Destroys `rows`.
std::size_t rank_gf2(std::vector<std::uint64_t>& rows, std::size_t nrows,
                     std::size_t words);

/// Rank over F_p (p an odd or even prime < 2^31).  Row-major dense,
/// entries reduced mod p.  Destroys `a`.
std::size_t rank_modp(std::vector<std::int64_t>& a, std::size_t nrows,
                      std::size_t ncols, std::int64_t p);

/// Rank over Q of an integer matrix.  Tries fraction-free (Bareiss)
/// elimination in 64-bit arithmetic and transparently redoes the
/// computation with GMP integers if any intermediate minor overflows.
/// `a` is row-major dense and is left unspecified on return.
std::size_t rank_int64_over_q(std::vector<std::int64_t> a, std::size_t nrows,
                              std::size_t ncols);

/// Rank over Q of an integer matrix with arbitrary-precision entries.
/// Fraction-free elimination; exact for any input.  Destroys `a`.
std::size_t rank_mpz(std::vector<mpz_class>& a, std::size_t nrows,
                     std::size_t ncols);

std::int64_t modinv(std::int64_t a, std::int64_t p);

} // namespace tightcx::elim
