#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "perfectrank/exact.hpp"
#include "perfectrank/format.hpp"
#include "perfectrank/witness.hpp"

namespace perfectrank {

enum class Verdict {
  kPerfectCertified,  // witness Jacobian has full column rank
  kFullRankFailed,    // witness built, rank short of full
  kNotApplicable,     // format outside the closed-form interval
};

std::string_view to_string(Verdict v);

/// Machine-readable record tying a format to its witness, the exact
/// Jacobian rank, and the verdict. A kPerfectCertified record is a
/// rigorous proof (over the rationals, hence over the reals) that the
/// largest mode size is the smallest typical rank.
struct Certificate {
  Format format;  // canonical dims
  std::int64_t r = 0;
  std::int64_t q = 0;
  SupportSet support;  // empty when not applicable
  std::int64_t jacobian_rows = 0;
  std::int64_t jacobian_cols = 0;
  std::int64_t certified_rank = 0;
  Verdict verdict = Verdict::kNotApplicable;
  std::string digest;  // sha256 of the canonical matrix serialization
  std::vector<std::uint64_t> primes;  // modular prescreen primes
  std::string version;
};

/// SHA-256 over "rows,cols,e_1,e_2,..." with decimal entries in row-major
/// order; lowercase hex. Bit-exact across implementations by construction.
std::string matrix_digest(const IntMatrix& m);

/// Decides and certifies perfectness of a canonical format. Never throws
/// on mathematical outcomes: formats outside the interval yield
/// kNotApplicable, a rank-deficient witness yields kFullRankFailed.
Certificate certify_perfect(const Format& f);

/// Exact confidence check for the codimension-one span identity behind
/// the witness construction: for the span of the rank-one tensors
/// (e_{k_1}+e_{p_1}) x ... x (e_{k_n}+e_{p_n}) over the mandatory support
/// minus its all-maximal tuple, every target
///   e(k) - (-1)^{n-1} (sum_j e(p_1,..,k_j,..,p_n) + (n-1) e(p_1,..,p_n))
/// with all k_j below maximum must lie in the span. Membership over the
/// rationals is decided by rank comparison.
bool lemma_codim1_oracle(const std::vector<std::int64_t>& dims);

/// Exact confidence check for the expansion identity: rows are
/// (e_{i_1}+v_1 e_{p_1}) x ... x (e_{i_n}+v_n e_{p_n}) over every tuple
/// except the all-maximal one; every kernel functional x of that span must
/// satisfy
///   x((e_{k_1}+u_1 e_{p_1}) x ... x (e_{k_n}+u_n e_{p_n}))
///     = (u_1-1)...(u_n-1) * x(p_1,...,p_n).
/// Returns false on any counterexample instead of asserting.
bool lemma_expand_oracle(const std::vector<std::int64_t>& dims,
                         const IndexTuple& k,
                         const std::vector<std::int64_t>& u,
                         const std::vector<std::int64_t>& v);

}  // namespace perfectrank
