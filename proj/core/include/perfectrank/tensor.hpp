#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "perfectrank/matrix.hpp"

namespace perfectrank {

template <typename Scalar>
using FactorGroup = std::vector<std::vector<Scalar>>;  // N factor vectors

template <typename Scalar>
using TermList = std::vector<FactorGroup<Scalar>>;  // r rank-one terms

/// Dense tensor in row-major order (last index fastest). The same
/// linearization is shared by unfoldings and Jacobian columns so the
/// Kronecker-style blocks line up entry for entry.
template <typename Scalar>
class DenseTensor {
 public:
  DenseTensor() = default;

  explicit DenseTensor(std::vector<std::int64_t> dims)
      : dims_(std::move(dims)),
        values_(static_cast<std::size_t>(total_size(dims_))) {}

  DenseTensor(std::vector<std::int64_t> dims, std::vector<Scalar> values)
      : dims_(std::move(dims)), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != total_size(dims_)) {
      throw std::invalid_argument("tensor value count does not match dims");
    }
  }

  static std::int64_t total_size(const std::vector<std::int64_t>& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::int64_t{1},
                           std::multiplies<>{});
  }

  /// Linear offset of a 1-based multi-index.
  std::int64_t offset(std::span<const std::int64_t> index) const {
    std::int64_t off = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      off = off * dims_[j] + (index[j] - 1);
    }
    return off;
  }

  Scalar& at(std::span<const std::int64_t> index) {
    return values_[static_cast<std::size_t>(offset(index))];
  }
  const Scalar& at(std::span<const std::int64_t> index) const {
    return values_[static_cast<std::size_t>(offset(index))];
  }

  const std::vector<std::int64_t>& dims() const { return dims_; }
  std::vector<Scalar>& values() { return values_; }
  const std::vector<Scalar>& values() const { return values_; }
  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

  bool operator==(const DenseTensor&) const = default;

 private:
  std::vector<std::int64_t> dims_;
  std::vector<Scalar> values_;
};

namespace detail {

inline bool advance_index(std::vector<std::int64_t>& idx,
                          const std::vector<std::int64_t>& dims) {
  for (std::size_t j = idx.size(); j-- > 0;) {
    if (idx[j] < dims[j]) {
      ++idx[j];
      std::fill(idx.begin() + static_cast<std::ptrdiff_t>(j) + 1, idx.end(), 1);
      return true;
    }
  }
  return false;
}

template <typename Scalar>
void check_group_shape(const FactorGroup<Scalar>& vectors,
                       const std::vector<std::int64_t>& dims) {
  if (vectors.size() != dims.size()) {
    throw std::invalid_argument("factor group has wrong number of modes");
  }
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (static_cast<std::int64_t>(vectors[j].size()) != dims[j]) {
      throw std::invalid_argument("factor vector length does not match mode");
    }
  }
}

}  // namespace detail

/// Outer product of N factor vectors: entry (k_1..k_N) = prod_j v_j[k_j].
template <typename Scalar>
DenseTensor<Scalar> rank_one(const FactorGroup<Scalar>& vectors) {
  std::vector<std::int64_t> dims;
  dims.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.empty()) throw std::invalid_argument("empty factor vector");
    dims.push_back(static_cast<std::int64_t>(v.size()));
  }
  DenseTensor<Scalar> t(dims);
  std::vector<std::int64_t> idx(dims.size(), 1);
  std::size_t off = 0;
  do {
    Scalar prod = vectors[0][static_cast<std::size_t>(idx[0] - 1)];
    for (std::size_t j = 1; j < dims.size(); ++j) {
      prod *= vectors[j][static_cast<std::size_t>(idx[j] - 1)];
    }
    t.values()[off++] = prod;
  } while (detail::advance_index(idx, dims));
  return t;
}

/// The evaluation map: sum of the rank-one tensors of all terms. An empty
/// list yields the zero tensor of the given dims.
template <typename Scalar>
DenseTensor<Scalar> eval_phi(const TermList<Scalar>& terms,
                             const std::vector<std::int64_t>& dims) {
  DenseTensor<Scalar> acc(dims);
  for (const auto& group : terms) {
    detail::check_group_shape(group, dims);
    const DenseTensor<Scalar> t = rank_one(group);
    for (std::int64_t i = 0; i < acc.size(); ++i) {
      acc.values()[static_cast<std::size_t>(i)] +=
          t.values()[static_cast<std::size_t>(i)];
    }
  }
  return acc;
}

/// Mode-j unfolding (1-based j): p_j rows; row k_j holds every entry whose
/// j-th index is k_j, remaining indices in row-major order.
template <typename Scalar>
DenseMatrix<Scalar> unfold(const DenseTensor<Scalar>& t, int mode_j) {
  const auto& dims = t.dims();
  if (mode_j < 1 || mode_j > static_cast<int>(dims.size())) {
    throw std::invalid_argument("unfold: mode out of range");
  }
  const std::size_t j = static_cast<std::size_t>(mode_j - 1);
  const std::int64_t rows = dims[j];
  const std::int64_t cols = t.size() / rows;
  DenseMatrix<Scalar> m(rows, cols);
  std::vector<std::int64_t> idx(dims.size(), 1);
  std::size_t off = 0;
  do {
    std::int64_t col = 0;
    for (std::size_t l = 0; l < dims.size(); ++l) {
      if (l == j) continue;
      col = col * dims[l] + (idx[l] - 1);
    }
    m.at(idx[j] - 1, col) = t.values()[off++];
  } while (detail::advance_index(idx, dims));
  return m;
}

/// Inverse of unfold: rebuilds the tensor from its mode-j unfolding.
template <typename Scalar>
DenseTensor<Scalar> fold(const DenseMatrix<Scalar>& m,
                         const std::vector<std::int64_t>& dims, int mode_j) {
  DenseTensor<Scalar> t(dims);
  const std::size_t j = static_cast<std::size_t>(mode_j - 1);
  std::vector<std::int64_t> idx(dims.size(), 1);
  std::size_t off = 0;
  do {
    std::int64_t col = 0;
    for (std::size_t l = 0; l < dims.size(); ++l) {
      if (l == j) continue;
      col = col * dims[l] + (idx[l] - 1);
    }
    t.values()[off++] = m.at(idx[j] - 1, col);
  } while (detail::advance_index(idx, dims));
  return t;
}

/// The generic full decomposition: one term e_{i_1} x ... x e_{i_{N-1}} x
/// (last-mode fiber) per multi-index over the first N-1 modes. Exactly
/// prod_{j<N} p_j terms; evaluating them reproduces the tensor exactly.
template <typename Scalar>
TermList<Scalar> trivial_decomposition(const DenseTensor<Scalar>& t) {
  const auto& dims = t.dims();
  const std::size_t n = dims.size() - 1;
  std::vector<std::int64_t> head(dims.begin(), dims.end() - 1);
  TermList<Scalar> terms;
  std::vector<std::int64_t> idx(n, 1);
  do {
    FactorGroup<Scalar> group;
    group.reserve(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> basis(static_cast<std::size_t>(head[j]), Scalar(0));
      basis[static_cast<std::size_t>(idx[j] - 1)] = Scalar(1);
      group.push_back(std::move(basis));
    }
    std::vector<Scalar> fiber(static_cast<std::size_t>(dims.back()));
    std::vector<std::int64_t> full(dims.size());
    std::copy(idx.begin(), idx.end(), full.begin());
    for (std::int64_t k = 1; k <= dims.back(); ++k) {
      full.back() = k;
      fiber[static_cast<std::size_t>(k - 1)] = t.at(full);
    }
    group.push_back(std::move(fiber));
    terms.push_back(std::move(group));
  } while (detail::advance_index(idx, head));
  return terms;
}

using Rational = mpq_class;

/// Max over modes of the exact rank of the mode unfolding; a lower bound
/// on the tensor rank.
std::int64_t flattening_rank_bound(const DenseTensor<Rational>& t);

/// Explicit scalar-kind conversions.
DenseTensor<double> to_double(const DenseTensor<Rational>& t);
DenseTensor<Rational> to_rational(const DenseTensor<double>& t);

}  // namespace perfectrank
