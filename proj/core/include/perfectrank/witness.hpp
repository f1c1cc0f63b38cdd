#pragma once

#include <cstdint>
#include <vector>

#include "perfectrank/format.hpp"

namespace perfectrank {

/// 1-based multi-index over the first n = N-1 modes of a format.
using IndexTuple = std::vector<std::int64_t>;

/// The index support of the witness: an ordered set of tuples over the
/// first n modes. The position of a tuple in `tuples` is its group number,
/// i.e. the ordering realizes the bijection between support tuples and
/// rank-one terms.
struct SupportSet {
  std::vector<IndexTuple> tuples;
  std::vector<std::int64_t> dims;  // sizes of the first n modes
};

/// The explicit rank-one parameter point: r groups of N integer factor
/// vectors. Group h (1-based) corresponds to support tuple h; its last-mode
/// vector is the h-th basis vector.
struct WitnessPoint {
  Format format;  // canonical
  SupportSet support;
  std::vector<std::vector<std::vector<std::int64_t>>> groups;  // r x N x p_j
};

/// The mandatory support core: all tuples whose number of maximal
/// coordinates (k_j == p_j) differs from n-1, in lexicographic order.
/// Its cardinality is prod(dims) - sum(dims) + n, the threshold q.
/// Requires n >= 2 and every dim >= 2.
std::vector<IndexTuple> build_s0(const std::vector<std::int64_t>& dims);

/// Extends s0 to cardinality `target`: the s0 block first, then the
/// lexicographically smallest excluded tuples. Throws if target is outside
/// [|s0|, prod(dims)].
SupportSet extend_support(std::vector<IndexTuple> s0, std::int64_t target,
                          const std::vector<std::int64_t>& dims);

/// Coefficient of the extra basis-vector summand in factor j at tuple t.
/// Cases, tested in order: 0 if t_j is maximal; 1 if exactly one other
/// coordinate is maximal; t_j + 1 if two or more other coordinates are
/// maximal (extension tuples of heads with n >= 3, where a coefficient of
/// 1 loses one Jacobian column per tuple); otherwise — all coordinates
/// below maximum — t_other + 1 for n = 2 (the full-rank argument pivots on
/// differences of u across the complementary coordinate) and t_j + 1 for
/// n >= 3. mode_j is 1-based.
std::int64_t u_coeff(int mode_j, const IndexTuple& t,
                     const std::vector<std::int64_t>& dims);

/// Assembles the full witness point for a canonical perfect format:
/// r = p_N groups, group h built from support tuple k as
///   factor j = e_{k_j} + u_j(k) * e_{p_j}   (j <= n)
///   factor N = e_h.
/// Throws std::invalid_argument if the format is not canonical or not
/// perfect (p_N outside [q, prod of the first n modes]).
WitnessPoint build_witness(const Format& f);

/// Factor groups of the witness converted to another scalar type, for
/// tensor evaluation and Jacobian assembly.
template <typename Scalar>
std::vector<std::vector<std::vector<Scalar>>> witness_terms(
    const WitnessPoint& w) {
  std::vector<std::vector<std::vector<Scalar>>> terms;
  terms.reserve(w.groups.size());
  for (const auto& group : w.groups) {
    std::vector<std::vector<Scalar>> g;
    g.reserve(group.size());
    for (const auto& vec : group) {
      g.emplace_back(vec.begin(), vec.end());
    }
    terms.push_back(std::move(g));
  }
  return terms;
}

}  // namespace perfectrank
