#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "perfectrank/format.hpp"
#include "perfectrank/tensor.hpp"

namespace perfectrank {

/// Outcome of the Jacobian probe at one candidate rank.
struct RankRecord {
  std::int64_t r = 0;
  std::int64_t best_rank = 0;  // largest exact rank seen over the trials
  bool full = false;           // best_rank == prod(dims)
  std::int64_t trials = 0;     // trials actually run (stops early on full)
};

/// Generic-rank estimate with the per-r evidence. A `full` record is a
/// rigorous upper bound (the Jacobian of the rank-r parameterization has
/// full column rank at an explicit rational point); the lower-bound
/// direction is only probabilistic.
struct ProbeReport {
  Format format;
  std::vector<RankRecord> records;  // r = 1, 2, ... in order
  std::int64_t estimated_generic_rank = 0;  // 0 iff max_r was too small
  std::uint64_t seed = 0;
};

/// One alternating-least-squares fit.
struct AlsFit {
  double residual = 0.0;  // ||t - fit|| / ||t||, 0 for the zero tensor
  TermList<double> factors;
  std::int64_t sweeps = 0;
};

/// Monte-Carlo estimate of the measure of rank-<=r tensors of a format.
struct AlsReport {
  Format format;
  std::int64_t r = 0;
  std::int64_t samples = 0;
  std::int64_t restarts = 0;
  std::int64_t max_iters = 0;
  double tol = 0.0;               // success threshold on the residual
  std::vector<double> residuals;  // best per sample, in sample order
  std::int64_t success_count = 0;
  std::uint64_t seed = 0;
};

/// Splitmix-style mixing of a root seed with an index path. Distinct paths
/// give independent-looking streams; identical input gives identical
/// output, which is what makes every probe reproducible and allows
/// per-task parallelism without changing results.
std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> path);

/// Estimates the generic rank: for r = 1..max_r draws `trials` random
/// integer parameter points (entries uniform nonzero in [-9,9]), assembles
/// the exact Jacobian and computes its rank; the first r reaching full
/// column rank is reported and iteration stops there. Throws
/// std::invalid_argument if max_r is below the closed-form lower bound
/// of typical_rank_bounds.
ProbeReport generic_rank_probe(const Format& f, std::int64_t max_r,
                               std::int64_t trials, std::uint64_t seed);

/// Alternating least squares over the N factor blocks minimizing
/// ||t - eval_phi(factors)||. The objective is nonincreasing per sweep
/// (violations beyond roundoff slack throw std::logic_error); stops after
/// max_iters sweeps or when the relative objective decrease drops below
/// tol. Singular normal equations are ridge-regularized (1e-12) and the
/// sweep continues.
AlsFit als_fit(const DenseTensor<double>& t, std::int64_t r,
               std::int64_t max_iters, double tol, std::uint64_t seed);

/// Draws `samples` tensors with independent standard Gaussian entries;
/// fits each with `restarts` ALS runs (stopping tolerance 1e-3 * tol) and
/// keeps the best residual; success iff that residual < tol.
AlsReport typical_rank_sample(const Format& f, std::int64_t r,
                              std::int64_t samples, std::int64_t restarts,
                              std::int64_t max_iters, double tol,
                              std::uint64_t seed);

}  // namespace perfectrank
