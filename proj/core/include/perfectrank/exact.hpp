#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "perfectrank/matrix.hpp"

namespace perfectrank {

using Integer = mpz_class;
using Rational = mpq_class;

/// Arbitrary-precision integer matrix, the carrier for all exact rank
/// certification.
using IntMatrix = DenseMatrix<Integer>;

/// Fixed modular prescreen primes. A rank mod p equal to min(rows, cols)
/// already certifies full rational rank, so rank_exact can skip the
/// fraction-free elimination on the (common) full-rank inputs. 31-bit
/// primes keep all modular products inside 64 bits.
inline constexpr std::array<std::uint64_t, 3> kPrescreenPrimes = {
    2147483647ULL, 2147483629ULL, 2147483587ULL};

/// Deterministic Miller-Rabin, valid for the whole 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Rank of m over GF(p). Throws std::invalid_argument if p is not prime.
/// Always a lower bound on the rational rank.
std::int64_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Exact rank over the rationals. Runs the modular prescreen first; if
/// some prime already reaches min(rows, cols) that value is returned,
/// otherwise fraction-free (Bareiss) elimination with magnitude partial
/// pivoting decides the rank. Every intermediate division is checked to
/// be exact.
std::int64_t rank_exact(const IntMatrix& m);

/// Basis of the right null space of m over the rationals, via rational
/// Gauss-Jordan. Empty iff rank(m) == cols. Basis vectors are emitted in
/// increasing free-column order with a unit entry at their free column.
std::vector<std::vector<Rational>> kernel_basis(const IntMatrix& m);

/// Clears denominators row by row (multiplying each row by the lcm of its
/// denominators), which preserves rank.
IntMatrix scale_rows_to_integers(const DenseMatrix<Rational>& m);

}  // namespace perfectrank
