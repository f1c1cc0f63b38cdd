#include "perfectrank/jacobian.hpp"

#include <algorithm>
#include <cmath>

namespace perfectrank {

IntMatrix witness_jacobian(const WitnessPoint& w) {
  return assemble_jacobian(witness_terms<Integer>(w), w.format.dims);
}

double fd_check(const TermList<double>& terms,
                const std::vector<std::int64_t>& dims, double step) {
  const DenseMatrix<double> jac = assemble_jacobian(terms, dims);
  double scale = 1.0;
  for (double e : jac.entries) scale = std::max(scale, std::abs(e));

  double worst = 0.0;
  std::int64_t row = 0;
  for (std::size_t h = 0; h < terms.size(); ++h) {
    for (std::size_t j = 0; j < dims.size(); ++j) {
      for (std::size_t i = 0; i < terms[h][j].size(); ++i, ++row) {
        TermList<double> plus = terms;
        TermList<double> minus = terms;
        plus[h][j][i] += step;
        minus[h][j][i] -= step;
        const DenseTensor<double> tp = eval_phi(plus, dims);
        const DenseTensor<double> tm = eval_phi(minus, dims);
        for (std::int64_t c = 0; c < jac.cols; ++c) {
          const double fd = (tp.values()[static_cast<std::size_t>(c)] -
                             tm.values()[static_cast<std::size_t>(c)]) /
                            (2.0 * step);
          worst = std::max(worst, std::abs(fd - jac.at(row, c)) / scale);
        }
      }
    }
  }
  return worst;
}

}  // namespace perfectrank
