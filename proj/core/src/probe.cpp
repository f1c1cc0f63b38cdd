#include "perfectrank/probe.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "perfectrank/exact.hpp"
#include "perfectrank/jacobian.hpp"

namespace perfectrank {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform nonzero integer in [-9, 9]. Drawn by hand (not via
// std::uniform_int_distribution) so that a given seed produces the same
// stream on every standard library.
std::int64_t nonzero_digit(std::mt19937_64& eng) {
  const std::uint64_t v = eng() % 18;
  return v < 9 ? static_cast<std::int64_t>(v) - 9
               : static_cast<std::int64_t>(v) - 8;
}

// Standard normal via Box-Muller, same portability rationale.
double gaussian(std::mt19937_64& eng) {
  const double u1 = (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

using EigenRowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

double l2_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

TermList<double> columns_to_terms(const std::vector<Eigen::MatrixXd>& factors,
                                  std::int64_t r) {
  TermList<double> terms(static_cast<std::size_t>(r));
  for (std::int64_t h = 0; h < r; ++h) {
    FactorGroup<double>& group = terms[static_cast<std::size_t>(h)];
    group.resize(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const auto col = factors[j].col(h);
      group[j].assign(col.data(), col.data() + col.size());
    }
  }
  return terms;
}

// Khatri-Rao product of all factors but mode j, with column multi-indices
// in the same row-major order as unfold(t, j+1) columns.
Eigen::MatrixXd khatri_rao_skip(const std::vector<Eigen::MatrixXd>& factors,
                                const std::vector<std::int64_t>& dims,
                                std::size_t j, std::int64_t r) {
  std::int64_t rows = 1;
  for (std::size_t l = 0; l < dims.size(); ++l) {
    if (l != j) rows *= dims[l];
  }
  Eigen::MatrixXd k(rows, r);
  std::vector<std::int64_t> idx(dims.size(), 1);
  std::int64_t row = 0;
  do {
    if (idx[j] != 1) continue;  // one pass over the complementary indices
    for (std::int64_t h = 0; h < r; ++h) {
      double prod = 1.0;
      for (std::size_t l = 0; l < dims.size(); ++l) {
        if (l == j) continue;
        prod *= factors[l](idx[l] - 1, h);
      }
      k(row, h) = prod;
    }
    ++row;
  } while (detail::advance_index(idx, dims));
  return k;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = seed;
  std::uint64_t out = splitmix64(state);
  for (std::uint64_t step : path) {
    state = out ^ (step + 0x9e3779b97f4a7c15ULL);
    out = splitmix64(state);
  }
  return out;
}

ProbeReport generic_rank_probe(const Format& f, std::int64_t max_r,
                               std::int64_t trials, std::uint64_t seed) {
  require_canonical(f);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (max_r < typical_rank_bounds(f).lower) {
    throw std::invalid_argument(
        "max_r is below the closed-form generic rank lower bound");
  }
  const std::int64_t cols = DenseTensor<Integer>::total_size(f.dims);

  ProbeReport report;
  report.format = f;
  report.seed = seed;
  for (std::int64_t r = 1; r <= max_r; ++r) {
    RankRecord rec;
    rec.r = r;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
      std::mt19937_64 eng(derive_seed(
          seed, {static_cast<std::uint64_t>(r),
                 static_cast<std::uint64_t>(trial)}));
      TermList<Integer> terms(static_cast<std::size_t>(r));
      for (auto& group : terms) {
        group.resize(f.dims.size());
        for (std::size_t jj = 0; jj < f.dims.size(); ++jj) {
          group[jj].resize(static_cast<std::size_t>(f.dims[jj]));
          for (auto& entry : group[jj]) entry = Integer(nonzero_digit(eng));
        }
      }
      const std::int64_t rank = rank_exact(assemble_jacobian(terms, f.dims));
      ++rec.trials;
      if (rank > rec.best_rank) rec.best_rank = rank;
      if (rank == cols) {
        rec.full = true;
        break;
      }
    }
    report.records.push_back(rec);
    if (rec.full) {
      report.estimated_generic_rank = r;
      break;
    }
  }
  return report;
}

AlsFit als_fit(const DenseTensor<double>& t, std::int64_t r,
               std::int64_t max_iters, double tol, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  const std::vector<std::int64_t>& dims = t.dims();
  const std::size_t order = dims.size();

  AlsFit fit;
  const double t_norm = l2_norm(t.values());
  if (t_norm == 0.0) {
    // Zero target: fit exactly with zero factors; residual 0 by convention.
    std::vector<Eigen::MatrixXd> zeros(order);
    for (std::size_t j = 0; j < order; ++j) {
      zeros[j] = Eigen::MatrixXd::Zero(dims[j], r);
    }
    fit.factors = columns_to_terms(zeros, r);
    return fit;
  }

  std::mt19937_64 eng(seed);
  std::vector<Eigen::MatrixXd> factors(order);
  for (std::size_t j = 0; j < order; ++j) {
    factors[j].resize(dims[j], r);
    for (std::int64_t i = 0; i < dims[j]; ++i) {
      for (std::int64_t h = 0; h < r; ++h) factors[j](i, h) = gaussian(eng);
    }
  }

  std::vector<EigenRowMajor> unfoldings(order);
  for (std::size_t j = 0; j < order; ++j) {
    const DenseMatrix<double> m = unfold(t, static_cast<int>(j) + 1);
    unfoldings[j] = Eigen::Map<const EigenRowMajor>(m.entries.data(), m.rows,
                                                    m.cols);
  }

  const auto objective = [&]() {
    const DenseTensor<double> model =
        eval_phi(columns_to_terms(factors, r), dims);
    double s = 0.0;
    for (std::int64_t i = 0; i < t.size(); ++i) {
      const double d = t.values()[static_cast<std::size_t>(i)] -
                       model.values()[static_cast<std::size_t>(i)];
      s += d * d;
    }
    return std::sqrt(s);
  };

  double prev = objective();
  for (std::int64_t sweep = 1; sweep <= max_iters; ++sweep) {
    for (std::size_t j = 0; j < order; ++j) {
      Eigen::MatrixXd gram = Eigen::MatrixXd::Ones(r, r);
      for (std::size_t l = 0; l < order; ++l) {
        if (l == j) continue;
        gram.array() *=
            (factors[l].transpose() * factors[l]).array();
      }
      const Eigen::MatrixXd kr = khatri_rao_skip(factors, dims, j, r);
      const Eigen::MatrixXd rhs = unfoldings[j] * kr;  // p_j x r
      Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
      if (!lu.isInvertible()) {
        gram += 1e-12 * Eigen::MatrixXd::Identity(r, r);
      }
      factors[j] =
          gram.ldlt().solve(rhs.transpose()).transpose();
    }
    const double cur = objective();
    fit.sweeps = sweep;
    if (cur > prev + 1e-9 * std::max(1.0, prev)) {
      throw std::logic_error("ALS objective increased across a sweep");
    }
    const double decrease = (prev - cur) / std::max(prev, 1e-300);
    prev = cur;
    if (decrease < tol) break;
  }

  fit.residual = prev / t_norm;
  fit.factors = columns_to_terms(factors, r);
  return fit;
}

AlsReport typical_rank_sample(const Format& f, std::int64_t r,
                              std::int64_t samples, std::int64_t restarts,
                              std::int64_t max_iters, double tol,
                              std::uint64_t seed) {
  require_canonical(f);
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");

  AlsReport report;
  report.format = f;
  report.r = r;
  report.samples = samples;
  report.restarts = restarts;
  report.max_iters = max_iters;
  report.tol = tol;
  report.seed = seed;
  report.residuals.reserve(static_cast<std::size_t>(samples));

  const double stop_tol = tol * 1e-3;
  for (std::int64_t s = 0; s < samples; ++s) {
    std::mt19937_64 eng(derive_seed(seed, {1, static_cast<std::uint64_t>(s)}));
    DenseTensor<double> t(f.dims);
    for (double& v : t.values()) v = gaussian(eng);

    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t restart = 0; restart < restarts; ++restart) {
      const AlsFit fit =
          als_fit(t, r, max_iters, stop_tol,
                  derive_seed(seed, {2, static_cast<std::uint64_t>(s),
                                     static_cast<std::uint64_t>(restart)}));
      if (fit.residual < best) best = fit.residual;
    }
    report.residuals.push_back(best);
    if (best < tol) ++report.success_count;
  }
  return report;
}

}  // namespace perfectrank
