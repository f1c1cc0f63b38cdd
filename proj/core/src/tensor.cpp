#include "perfectrank/tensor.hpp"

#include "perfectrank/exact.hpp"

namespace perfectrank {

std::int64_t flattening_rank_bound(const DenseTensor<Rational>& t) {
  std::int64_t best = 0;
  for (int j = 1; j <= static_cast<int>(t.dims().size()); ++j) {
    const IntMatrix m = scale_rows_to_integers(unfold(t, j));
    best = std::max(best, rank_exact(m));
  }
  return best;
}

DenseTensor<double> to_double(const DenseTensor<Rational>& t) {
  std::vector<double> values(t.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = t.values()[i].get_d();
  }
  return DenseTensor<double>(t.dims(), std::move(values));
}

DenseTensor<Rational> to_rational(const DenseTensor<double>& t) {
  std::vector<Rational> values(t.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = Rational(t.values()[i]);  // exact binary64 -> rational
  }
  return DenseTensor<Rational>(t.dims(), std::move(values));
}

}  // namespace perfectrank
