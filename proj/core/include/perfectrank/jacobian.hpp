#pragma once

#include <cstdint>
#include <vector>

#include "perfectrank/exact.hpp"
#include "perfectrank/matrix.hpp"
#include "perfectrank/tensor.hpp"
#include "perfectrank/witness.hpp"

namespace perfectrank {

/// Jacobian block of the rank-one map at one factor group: a
/// (sum p_j) x (prod p_j) matrix. Row (j, i) is the rank-one tensor with
/// the mode-j factor replaced by the i-th basis vector, linearized by the
/// shared row-major convention. Within the block rows run mode-major,
/// coordinate-minor.
template <typename Scalar>
DenseMatrix<Scalar> phi1_jacobian_block(const FactorGroup<Scalar>& vectors) {
  std::vector<std::int64_t> dims;
  dims.reserve(vectors.size());
  std::int64_t row_count = 0;
  for (const auto& v : vectors) {
    if (v.empty()) throw std::invalid_argument("empty factor vector");
    dims.push_back(static_cast<std::int64_t>(v.size()));
    row_count += static_cast<std::int64_t>(v.size());
  }
  const std::int64_t cols = DenseTensor<Scalar>::total_size(dims);
  DenseMatrix<Scalar> block(row_count, cols);

  std::int64_t row = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    for (std::int64_t i = 1; i <= dims[j]; ++i, ++row) {
      std::vector<std::int64_t> idx(dims.size(), 1);
      std::int64_t col = 0;
      do {
        if (idx[j] == i) {
          Scalar prod(1);
          for (std::size_t l = 0; l < dims.size(); ++l) {
            if (l == j) continue;
            prod *= vectors[l][static_cast<std::size_t>(idx[l] - 1)];
          }
          block.at(row, col) = prod;
        }
        ++col;
      } while (detail::advance_index(idx, dims));
    }
  }
  return block;
}

/// Jacobian of the summed evaluation map at a term list: the per-term
/// blocks stacked in term order, r*(sum p_j) rows by prod p_j columns.
template <typename Scalar>
DenseMatrix<Scalar> assemble_jacobian(const TermList<Scalar>& terms,
                                      const std::vector<std::int64_t>& dims) {
  std::int64_t sum = 0;
  for (std::int64_t d : dims) sum += d;
  const std::int64_t cols = DenseTensor<Scalar>::total_size(dims);
  DenseMatrix<Scalar> jac(static_cast<std::int64_t>(terms.size()) * sum, cols);
  std::int64_t row0 = 0;
  for (const auto& group : terms) {
    detail::check_group_shape(group, dims);
    const DenseMatrix<Scalar> block = phi1_jacobian_block(group);
    std::copy(block.entries.begin(), block.entries.end(),
              jac.entries.begin() + static_cast<std::ptrdiff_t>(row0 * cols));
    row0 += block.rows;
  }
  return jac;
}

/// Exact integer Jacobian of a witness point.
IntMatrix witness_jacobian(const WitnessPoint& w);

/// Validates the closed-form Jacobian against central finite differences
/// of the evaluation map. Returns the maximum deviation of any entry,
/// relative to the largest Jacobian magnitude (at least 1).
double fd_check(const TermList<double>& terms,
                const std::vector<std::int64_t>& dims, double step = 1e-4);

}  // namespace perfectrank
