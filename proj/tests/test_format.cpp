#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "perfectrank/format.hpp"

using namespace perfectrank;

namespace {

/// Every nondecreasing dims tuple with entries in [2, max_entry] and the
/// given order, for enumeration-style invariants.
std::vector<std::vector<std::int64_t>> sorted_tuples(int order,
                                                     std::int64_t max_entry) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> t(static_cast<std::size_t>(order), 2);
  while (true) {
    out.push_back(t);
    int j = order;
    while (j > 0 && t[static_cast<std::size_t>(j - 1)] == max_entry) --j;
    if (j == 0) break;
    ++t[static_cast<std::size_t>(j - 1)];
    for (int l = j; l < order; ++l)
      t[static_cast<std::size_t>(l)] = t[static_cast<std::size_t>(j - 1)];
  }
  return out;
}

}  // namespace

TEST_CASE("parse_format reads x-joined mode lists") {
  CHECK(parse_format("2x2x3").dims == std::vector<std::int64_t>{2, 2, 3});
  CHECK(parse_format("3x1x4x2").dims == std::vector<std::int64_t>{3, 1, 4, 2});
  CHECK(parse_format("10x12").dims == std::vector<std::int64_t>{10, 12});
}

TEST_CASE("parse_format rejects malformed input") {
  CHECK_THROWS_AS(parse_format("2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("x2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("2x0x3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("2xx3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("2x-1x3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("2 x 3 x 4"), std::invalid_argument);
}

TEST_CASE("canonicalize drops singletons and sorts") {
  CHECK(canonicalize(Format{{3, 1, 4, 2}}).dims ==
        std::vector<std::int64_t>{2, 3, 4});
  CHECK(canonicalize(Format{{2, 2, 3}}).dims ==
        std::vector<std::int64_t>{2, 2, 3});
  CHECK(canonicalize(Format{{5, 1, 1, 2, 2}}).dims ==
        std::vector<std::int64_t>{2, 2, 5});
  CHECK_THROWS_AS(canonicalize(Format{{1, 5, 7}}), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize(Format{{4, 4}}), std::invalid_argument);
}

TEST_CASE("is_canonical matches canonicalize's fixed points") {
  CHECK(is_canonical(Format{{2, 2, 3}}));
  CHECK(is_canonical(Format{{2, 3, 12}}));
  CHECK_FALSE(is_canonical(Format{{3, 2, 2}}));
  CHECK_FALSE(is_canonical(Format{{1, 2, 2, 3}}));
  CHECK_FALSE(is_canonical(Format{{2, 2}}));
  CHECK_NOTHROW(require_canonical(Format{{2, 2, 3}}));
  CHECK_THROWS_AS(require_canonical(Format{{3, 2, 2}}), std::invalid_argument);
}

TEST_CASE("perfect_threshold_q on the closed form") {
  CHECK(perfect_threshold_q(Format{{2, 2, 3}}) == 2);
  CHECK(perfect_threshold_q(Format{{3, 3, 3}}) == 5);
  CHECK(perfect_threshold_q(Format{{2, 2, 2, 8}}) == 5);
  CHECK(perfect_threshold_q(Format{{2, 3, 5}}) == 3);
  CHECK(perfect_threshold_q(Format{{4, 4, 10}}) == 10);
}

TEST_CASE("typical_rank_bounds closed forms") {
  const BoundsReport b333 = typical_rank_bounds(Format{{3, 3, 3}});
  CHECK(b333.lower == 4);
  CHECK(b333.upper == 9);
  CHECK(b333.q == 5);
  CHECK(b333.max_dim == 3);
  CHECK(b333.product_rest == 9);

  const BoundsReport b222 = typical_rank_bounds(Format{{2, 2, 2}});
  CHECK(b222.lower == 2);
  CHECK(b222.upper == 4);
  CHECK(b222.q == 2);

  const BoundsReport b235 = typical_rank_bounds(Format{{2, 3, 5}});
  CHECK(b235.lower == 5);
  CHECK(b235.upper == 6);
  CHECK(b235.q == 3);
}

TEST_CASE("is_perfect interval membership") {
  const PerfectReport r235 = is_perfect(Format{{2, 3, 5}});
  CHECK(r235.perfect);
  CHECK(r235.q == 3);
  CHECK(r235.interval_lo == 3);
  CHECK(r235.interval_hi == 6);

  CHECK_FALSE(is_perfect(Format{{3, 3, 3}}).perfect);
  CHECK(is_perfect(Format{{2, 2, 2}}).perfect);
  CHECK(is_perfect(Format{{2, 2, 2, 8}}).perfect);
  CHECK_FALSE(is_perfect(Format{{2, 2, 2, 9}}).perfect);
  CHECK_FALSE(is_perfect(Format{{2, 2, 2, 4}}).perfect);
  CHECK(is_perfect(Format{{3, 3, 5}}).perfect);
}

TEST_CASE("bound and threshold invariants over an enumeration grid") {
  for (int order = 3; order <= 5; ++order) {
    for (const auto& dims : sorted_tuples(order, 6)) {
      const Format f{dims};
      const BoundsReport b = typical_rank_bounds(f);
      CAPTURE(to_string(f));
      CHECK(b.lower <= b.upper);
      // The largest-mode lower bound applies until p_N hits the
      // flattening cap; above it the typical rank stays at the cap.
      if (b.max_dim <= b.product_rest) CHECK(b.lower >= b.max_dim);
      CHECK(b.q <= b.product_rest);
      // The threshold is at least the second-largest mode, so the
      // perfectness interval respects the sorted order.
      CHECK(b.q >= dims[dims.size() - 2]);
      const PerfectReport p = is_perfect(f);
      CHECK(p.q == b.q);
      if (p.perfect) CHECK(b.lower == dims.back());
    }
  }
}

TEST_CASE("to_string round trip") {
  CHECK(to_string(Format{{2, 2, 3}}) == "2x2x3");
  CHECK(parse_format(to_string(Format{{4, 5, 6, 7}})).dims ==
        std::vector<std::int64_t>{4, 5, 6, 7});
}
