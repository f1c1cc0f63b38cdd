#include "perfectrank/certify.hpp"

#include <openssl/evp.h>

#include <cstddef>
#include <stdexcept>

#include "perfectrank/jacobian.hpp"
#include "perfectrank/tensor.hpp"
#include "perfectrank/version.hpp"

namespace perfectrank {
namespace {

// Rank-one row ⊗_j (e_{t_j} + c_j e_{p_j}) written into `row` (length
// prod(dims)), using the shared row-major linearization.
void write_coeff_row(const std::vector<std::int64_t>& dims,
                     const IndexTuple& t, const std::vector<std::int64_t>& c,
                     Integer* row) {
  FactorGroup<Integer> vectors(dims.size());
  for (std::size_t j = 0; j < dims.size(); ++j) {
    vectors[j].assign(static_cast<std::size_t>(dims[j]), Integer(0));
    vectors[j][static_cast<std::size_t>(t[j] - 1)] += 1;
    vectors[j].back() += c[j];
  }
  const DenseTensor<Integer> tens = rank_one(vectors);
  for (std::int64_t i = 0; i < tens.size(); ++i) {
    row[i] = tens.values()[static_cast<std::size_t>(i)];
  }
}

std::int64_t linear_offset(const std::vector<std::int64_t>& dims,
                           const IndexTuple& t) {
  std::int64_t off = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    off = off * dims[j] + (t[j] - 1);
  }
  return off;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPerfectCertified:
      return "PERFECT_CERTIFIED";
    case Verdict::kFullRankFailed:
      return "FULL_RANK_FAILED";
    case Verdict::kNotApplicable:
      return "NOT_APPLICABLE";
  }
  throw std::logic_error("unknown verdict");
}

std::string matrix_digest(const IntMatrix& m) {
  std::string payload = std::to_string(m.rows);
  payload += ',';
  payload += std::to_string(m.cols);
  for (const Integer& e : m.entries) {
    payload += ',';
    payload += e.get_str();
  }

  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int hash_len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr ||
      EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, payload.data(), payload.size()) != 1 ||
      EVP_DigestFinal_ex(ctx, hash, &hash_len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256 digest failed");
  }
  EVP_MD_CTX_free(ctx);

  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * hash_len);
  for (unsigned int i = 0; i < hash_len; ++i) {
    hex += kHex[hash[i] >> 4];
    hex += kHex[hash[i] & 0xf];
  }
  return hex;
}

Certificate certify_perfect(const Format& f) {
  require_canonical(f);
  const PerfectReport report = is_perfect(f);

  Certificate cert;
  cert.format = f;
  cert.r = f.dims.back();
  cert.q = report.q;
  cert.version = kVersion;
  if (!report.perfect) {
    cert.verdict = Verdict::kNotApplicable;
    return cert;
  }

  const WitnessPoint w = build_witness(f);
  const IntMatrix jac = witness_jacobian(w);
  cert.support = w.support;
  cert.jacobian_rows = jac.rows;
  cert.jacobian_cols = jac.cols;
  cert.certified_rank = rank_exact(jac);
  cert.verdict = cert.certified_rank == jac.cols ? Verdict::kPerfectCertified
                                                 : Verdict::kFullRankFailed;
  cert.digest = matrix_digest(jac);
  cert.primes.assign(kPrescreenPrimes.begin(), kPrescreenPrimes.end());
  return cert;
}

bool lemma_codim1_oracle(const std::vector<std::int64_t>& dims) {
  const std::size_t n = dims.size();
  if (n < 2) throw std::invalid_argument("need at least two modes");
  for (std::int64_t d : dims) {
    if (d < 2) throw std::invalid_argument("mode sizes must be >= 2");
  }
  const std::int64_t cols = DenseTensor<Integer>::total_size(dims);
  const std::vector<std::int64_t> ones(n, 1);

  // Span rows: S0 minus its all-maximal tuple, coefficients all 1.
  std::vector<IndexTuple> span_tuples;
  for (const IndexTuple& t : build_s0(dims)) {
    if (t != IndexTuple(dims)) span_tuples.push_back(t);
  }
  IntMatrix span(static_cast<std::int64_t>(span_tuples.size()), cols);
  for (std::size_t i = 0; i < span_tuples.size(); ++i) {
    write_coeff_row(dims, span_tuples[i], ones,
                    span.entries.data() + static_cast<std::ptrdiff_t>(
                                              i * static_cast<std::size_t>(cols)));
  }

  // Targets: e(k) - (-1)^(n-1) (W_n + (n-1) e(p)) for every all-below-max k.
  // All memberships hold iff stacking every target leaves the rank unchanged.
  std::vector<IndexTuple> below;
  {
    std::vector<std::int64_t> shrunk(dims);
    for (auto& d : shrunk) --d;
    IndexTuple k(n, 1);
    do {
      below.push_back(k);
    } while (detail::advance_index(k, shrunk));
  }
  const Integer sign = (n % 2 == 1) ? Integer(1) : Integer(-1);
  IntMatrix stacked(span.rows + static_cast<std::int64_t>(below.size()), cols);
  std::copy(span.entries.begin(), span.entries.end(), stacked.entries.begin());
  for (std::size_t i = 0; i < below.size(); ++i) {
    const IndexTuple& k = below[i];
    Integer* row = stacked.entries.data() +
                   static_cast<std::ptrdiff_t>(
                       (static_cast<std::size_t>(span.rows) + i) *
                       static_cast<std::size_t>(cols));
    row[linear_offset(dims, k)] += 1;
    IndexTuple mixed(dims);
    for (std::size_t j = 0; j < n; ++j) {
      mixed[j] = k[j];
      row[linear_offset(dims, mixed)] -= sign;
      mixed[j] = dims[j];
    }
    row[linear_offset(dims, mixed)] -=
        sign * Integer(static_cast<long>(n) - 1);
  }
  return rank_exact(stacked) == rank_exact(span);
}

bool lemma_expand_oracle(const std::vector<std::int64_t>& dims,
                         const IndexTuple& k,
                         const std::vector<std::int64_t>& u,
                         const std::vector<std::int64_t>& v) {
  const std::size_t n = dims.size();
  if (n < 2) throw std::invalid_argument("need at least two modes");
  if (k.size() != n || u.size() != n || v.size() != n) {
    throw std::invalid_argument("tuple arity mismatch");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (k[j] < 1 || k[j] > dims[j]) {
      throw std::invalid_argument("index tuple out of range");
    }
  }
  const std::int64_t cols = DenseTensor<Integer>::total_size(dims);

  // Rows: ⊗(e_{i_j} + v_j e_{p_j}) over every tuple except the all-maximal.
  IntMatrix span(cols - 1, cols);
  std::int64_t row = 0;
  IndexTuple i(n, 1);
  do {
    if (i == IndexTuple(dims)) continue;
    write_coeff_row(dims, i, v,
                    span.entries.data() + static_cast<std::ptrdiff_t>(
                                              row++ * cols));
  } while (detail::advance_index(i, dims));

  // Test tensor ⊗(e_{k_j} + u_j e_{p_j}) and the predicted value
  // prod_j (u_j - 1) at the all-maximal coordinate.
  std::vector<Integer> test(static_cast<std::size_t>(cols));
  write_coeff_row(dims, k, u, test.data());
  Integer coeff(1);
  for (std::size_t j = 0; j < n; ++j) coeff *= Integer(u[j]) - 1;
  const std::int64_t top = linear_offset(dims, IndexTuple(dims));

  for (const std::vector<Rational>& x : kernel_basis(span)) {
    Rational lhs(0);
    for (std::int64_t c = 0; c < cols; ++c) {
      if (test[static_cast<std::size_t>(c)] != 0) {
        lhs += Rational(test[static_cast<std::size_t>(c)]) *
               x[static_cast<std::size_t>(c)];
      }
    }
    const Rational rhs = Rational(coeff) * x[static_cast<std::size_t>(top)];
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace perfectrank
