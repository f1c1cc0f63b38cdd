#include "perfectrank/format.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace perfectrank {

namespace {

std::int64_t checked_product(const std::vector<std::int64_t>& xs) {
  std::int64_t acc = 1;
  for (std::int64_t x : xs) {
    if (__builtin_mul_overflow(acc, x, &acc)) {
      throw std::overflow_error("mode-size product overflows 64 bits");
    }
  }
  return acc;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return (num + den - 1) / den;
}

}  // namespace

Format parse_format(std::string_view text) {
  std::vector<std::int64_t> dims;
  const char* p = text.data();
  const char* end = p + text.size();
  while (true) {
    std::int64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p) {
      throw std::invalid_argument("malformed format string: '" +
                                  std::string(text) + "'");
    }
    if (value < 1) {
      throw std::invalid_argument("mode size must be >= 1 in '" +
                                  std::string(text) + "'");
    }
    dims.push_back(value);
    p = next;
    if (p == end) break;
    if (*p != 'x') {
      throw std::invalid_argument("malformed format string: '" +
                                  std::string(text) + "'");
    }
    ++p;
    if (p == end) {
      throw std::invalid_argument("malformed format string: '" +
                                  std::string(text) + "'");
    }
  }
  if (dims.size() < 2) {
    throw std::invalid_argument("format needs at least two modes: '" +
                                std::string(text) + "'");
  }
  return Format{std::move(dims)};
}

Format canonicalize(const Format& f) {
  std::vector<std::int64_t> dims;
  dims.reserve(f.dims.size());
  for (std::int64_t d : f.dims) {
    if (d < 1) throw std::invalid_argument("mode size must be >= 1");
    if (d > 1) dims.push_back(d);
  }
  std::sort(dims.begin(), dims.end());
  if (dims.size() < 3) {
    throw std::invalid_argument(
        "format has fewer than three non-singleton modes; the matrix and "
        "vector cases have classical closed-form ranks and are not handled");
  }
  return Format{std::move(dims)};
}

bool is_canonical(const Format& f) {
  if (f.dims.size() < 3) return false;
  if (!std::is_sorted(f.dims.begin(), f.dims.end())) return false;
  return f.dims.front() >= 2;
}

void require_canonical(const Format& f) {
  if (!is_canonical(f)) {
    throw std::invalid_argument("format " + to_string(f) +
                                " is not canonical (call canonicalize)");
  }
}

std::int64_t perfect_threshold_q(const Format& f) {
  require_canonical(f);
  std::vector<std::int64_t> rest(f.dims.begin(), f.dims.end() - 1);
  std::int64_t prod = checked_product(rest);
  std::int64_t sum = std::accumulate(rest.begin(), rest.end(), std::int64_t{0});
  return prod - sum + static_cast<std::int64_t>(rest.size());
}

BoundsReport typical_rank_bounds(const Format& f) {
  require_canonical(f);
  BoundsReport report;
  report.q = perfect_threshold_q(f);
  report.max_dim = f.dims.back();
  report.product_rest =
      checked_product({f.dims.begin(), f.dims.end() - 1});
  std::int64_t product_all = checked_product(f.dims);
  std::int64_t sum_all =
      std::accumulate(f.dims.begin(), f.dims.end(), std::int64_t{0});
  // Ranks are integers, so the dimension-count lower bound rounds up.
  std::int64_t cone_bound =
      ceil_div(product_all, sum_all - f.order() + 1);
  // The largest-mode lower bound holds only while p_N fits under the
  // flattening cap; beyond it the generic slices already span the whole
  // product-of-the-rest space and the typical rank sticks at the cap.
  report.lower =
      std::max(std::min(report.max_dim, report.product_rest), cone_bound);
  report.upper = report.product_rest;
  return report;
}

PerfectReport is_perfect(const Format& f) {
  BoundsReport b = typical_rank_bounds(f);
  PerfectReport report;
  report.q = b.q;
  report.interval_lo = b.q;
  report.interval_hi = b.product_rest;
  report.perfect = b.q <= b.max_dim && b.max_dim <= b.product_rest;
  return report;
}

std::string to_string(const Format& f) {
  std::string s;
  for (std::size_t i = 0; i < f.dims.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(f.dims[i]);
  }
  return s;
}

}  // namespace perfectrank
