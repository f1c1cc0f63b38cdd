#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace perfectrank {

/// Dense row-major matrix. Used with exact scalars (mpz_class, mpq_class)
/// for certification and with double for the numerical probes.
template <typename Scalar>
struct DenseMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<Scalar> entries;  // rows*cols, row-major

  DenseMatrix() = default;
  DenseMatrix(std::int64_t r, std::int64_t c)
      : rows(r), cols(c), entries(static_cast<std::size_t>(r * c)) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix shape");
  }

  Scalar& at(std::int64_t i, std::int64_t j) {
    return entries[static_cast<std::size_t>(i * cols + j)];
  }
  const Scalar& at(std::int64_t i, std::int64_t j) const {
    return entries[static_cast<std::size_t>(i * cols + j)];
  }

  bool operator==(const DenseMatrix&) const = default;
};

template <typename Scalar>
DenseMatrix<Scalar> transpose(const DenseMatrix<Scalar>& m) {
  DenseMatrix<Scalar> t(m.cols, m.rows);
  for (std::int64_t i = 0; i < m.rows; ++i)
    for (std::int64_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

/// Stacks b below a. Column counts must match.
template <typename Scalar>
DenseMatrix<Scalar> vstack(const DenseMatrix<Scalar>& a,
                           const DenseMatrix<Scalar>& b) {
  if (a.cols != b.cols && a.rows != 0 && b.rows != 0)
    throw std::invalid_argument("vstack: column counts differ");
  DenseMatrix<Scalar> out(a.rows + b.rows, a.rows == 0 ? b.cols : a.cols);
  std::copy(a.entries.begin(), a.entries.end(), out.entries.begin());
  std::copy(b.entries.begin(), b.entries.end(),
            out.entries.begin() + static_cast<std::ptrdiff_t>(a.entries.size()));
  return out;
}

}  // namespace perfectrank
