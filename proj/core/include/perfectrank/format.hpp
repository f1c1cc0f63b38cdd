#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace perfectrank {

/// A tensor format: an ordered list of mode sizes.
///
/// A freshly parsed format keeps the modes in input order and may contain
/// singleton modes. All analysis routines require the canonical form
/// (singletons dropped, modes sorted nondecreasing, at least three modes,
/// every mode size >= 2); call canonicalize() first.
struct Format {
  std::vector<std::int64_t> dims;

  int order() const { return static_cast<int>(dims.size()); }

  bool operator==(const Format&) const = default;
};

/// Closed-form bracket for the typical ranks of a canonical format.
struct BoundsReport {
  std::int64_t lower = 0;         // smallest possible typical rank
  std::int64_t upper = 0;         // largest possible typical rank
  std::int64_t q = 0;             // perfectness threshold
  std::int64_t max_dim = 0;       // largest mode size
  std::int64_t product_rest = 0;  // product of all mode sizes but the largest
};

/// Verdict of the closed-form perfectness test.
struct PerfectReport {
  bool perfect = false;
  std::int64_t q = 0;
  // Perfectness holds iff max_dim lies in [interval_lo, interval_hi].
  std::int64_t interval_lo = 0;
  std::int64_t interval_hi = 0;
};

/// Parses "AxBxC..." (decimal integers joined by lowercase 'x', no
/// whitespace, at least two fields). Returns the modes in input order,
/// not yet canonicalized. Throws std::invalid_argument on malformed
/// input or a mode size < 1.
Format parse_format(std::string_view text);

/// Drops singleton modes and sorts the rest nondecreasing. Throws
/// std::invalid_argument if fewer than three modes remain (the matrix
/// and vector cases are out of scope) or any mode size is < 1.
Format canonicalize(const Format& f);

/// True iff f already satisfies the canonical-form invariants.
bool is_canonical(const Format& f);

/// Throws std::invalid_argument unless f is canonical.
void require_canonical(const Format& f);

/// The threshold q = p_1*...*p_{N-1} - (p_1+...+p_{N-1}) + (N-1), computed
/// over all modes except the largest. Requires f canonical.
std::int64_t perfect_threshold_q(const Format& f);

/// Bracket [lower, upper] containing every typical rank of the format:
/// lower = max(min(p_N, upper), ceil(prod(dims) / (sum(dims) - N + 1))),
/// upper = product of all modes but the largest. The min caps the
/// largest-mode bound for degenerate formats with p_N above the
/// flattening limit, keeping the bracket nonempty and valid. Requires f
/// canonical.
BoundsReport typical_rank_bounds(const Format& f);

/// Decides perfectness in closed form: the largest mode size p_N is the
/// smallest typical rank iff q <= p_N <= product of the remaining modes.
/// Requires f canonical.
PerfectReport is_perfect(const Format& f);

/// "AxBxC" rendering of the dims, for messages and reports.
std::string to_string(const Format& f);

}  // namespace perfectrank
