#include "perfectrank/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace perfectrank {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases decide primality for every n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::int64_t rank_mod_p(const IntMatrix& m, u64 p) {
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("rank_mod_p: modulus is not prime");
  }
  const std::int64_t rows = m.rows, cols = m.cols;
  std::vector<u64> a(static_cast<std::size_t>(rows * cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = mpz_fdiv_ui(m.entries[i].get_mpz_t(), p);  // nonnegative remainder
  }
  auto at = [&](std::int64_t i, std::int64_t j) -> u64& {
    return a[static_cast<std::size_t>(i * cols + j)];
  };

  std::int64_t rank = 0;
  for (std::int64_t col = 0; col < cols && rank < rows; ++col) {
    std::int64_t pivot = -1;
    for (std::int64_t i = rank; i < rows; ++i) {
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (std::int64_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const u64 inv = powmod(at(rank, col), p - 2, p);
    for (std::int64_t j = col; j < cols; ++j) at(rank, j) = mulmod(at(rank, j), inv, p);
    for (std::int64_t i = rank + 1; i < rows; ++i) {
      const u64 factor = at(i, col);
      if (factor == 0) continue;
      for (std::int64_t j = col; j < cols; ++j) {
        const u64 sub = mulmod(factor, at(rank, j), p);
        at(i, j) = (at(i, j) + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::int64_t rank_exact(const IntMatrix& m) {
  const std::int64_t rows = m.rows, cols = m.cols;
  if (rows == 0 || cols == 0) return 0;
  const std::int64_t bound = std::min(rows, cols);

  for (u64 p : kPrescreenPrimes) {
    if (rank_mod_p(m, p) == bound) return bound;  // mod-p rank <= rational rank
  }

  // Fraction-free elimination. After each step the active entries are
  // minors of the original matrix, and division by the previous pivot is
  // exact; the division below is checked rather than assumed.
  std::vector<Integer> a = m.entries;
  auto at = [&](std::int64_t i, std::int64_t j) -> Integer& {
    return a[static_cast<std::size_t>(i * cols + j)];
  };

  Integer prev = 1;
  Integer num, quotient, remainder;
  std::int64_t rank = 0;
  for (std::int64_t col = 0; col < cols && rank < rows; ++col) {
    std::int64_t pivot = -1;
    for (std::int64_t i = rank; i < rows; ++i) {
      if (at(i, col) != 0 &&
          (pivot < 0 || mpz_cmpabs(at(i, col).get_mpz_t(),
                                   at(pivot, col).get_mpz_t()) > 0)) {
        pivot = i;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (std::int64_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    for (std::int64_t i = rank + 1; i < rows; ++i) {
      for (std::int64_t j = col + 1; j < cols; ++j) {
        num = at(rank, col) * at(i, j) - at(i, col) * at(rank, j);
        mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
                    num.get_mpz_t(), prev.get_mpz_t());
        if (remainder != 0) {
          throw std::logic_error("rank_exact: fraction-free division not exact");
        }
        at(i, j) = quotient;
      }
      at(i, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> kernel_basis(const IntMatrix& m) {
  const std::int64_t rows = m.rows, cols = m.cols;
  std::vector<Rational> a(static_cast<std::size_t>(rows * cols));
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = Rational(m.entries[i]);
  auto at = [&](std::int64_t i, std::int64_t j) -> Rational& {
    return a[static_cast<std::size_t>(i * cols + j)];
  };

  std::vector<std::int64_t> pivot_cols;
  std::int64_t rank = 0;
  for (std::int64_t col = 0; col < cols && rank < rows; ++col) {
    std::int64_t pivot = -1;
    for (std::int64_t i = rank; i < rows; ++i) {
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (std::int64_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const Rational inv = 1 / at(rank, col);
    for (std::int64_t j = col; j < cols; ++j) at(rank, j) *= inv;
    for (std::int64_t i = 0; i < rows; ++i) {
      if (i == rank || at(i, col) == 0) continue;
      const Rational factor = at(i, col);
      for (std::int64_t j = col; j < cols; ++j) at(i, j) -= factor * at(rank, j);
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<std::vector<Rational>> basis;
  std::size_t next_pivot = 0;
  for (std::int64_t col = 0; col < cols; ++col) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    std::vector<Rational> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(col)] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[static_cast<std::size_t>(pivot_cols[i])] =
          -at(static_cast<std::int64_t>(i), col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix scale_rows_to_integers(const DenseMatrix<Rational>& m) {
  IntMatrix out(m.rows, m.cols);
  Integer lcm = 1;
  for (std::int64_t i = 0; i < m.rows; ++i) {
    lcm = 1;
    for (std::int64_t j = 0; j < m.cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    }
    for (std::int64_t j = 0; j < m.cols; ++j) {
      const Rational scaled = m.at(i, j) * Rational(lcm);
      out.at(i, j) = scaled.get_num();  // denominator is 1 after scaling
    }
  }
  return out;
}

}  // namespace perfectrank
