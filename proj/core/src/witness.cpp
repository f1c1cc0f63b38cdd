#include "perfectrank/witness.hpp"

#include <numeric>
#include <stdexcept>

namespace perfectrank {

namespace {

void require_dims(const std::vector<std::int64_t>& dims) {
  if (dims.size() < 2) {
    throw std::invalid_argument("support dims need n >= 2 modes");
  }
  for (std::int64_t d : dims) {
    if (d < 2) throw std::invalid_argument("support dims must all be >= 2");
  }
}

// Lexicographic successor over the 1-based box [1,dims_1] x ... x [1,dims_n].
bool advance(IndexTuple& t, const std::vector<std::int64_t>& dims) {
  for (std::size_t j = t.size(); j-- > 0;) {
    if (t[j] < dims[j]) {
      ++t[j];
      std::fill(t.begin() + static_cast<std::ptrdiff_t>(j) + 1, t.end(), 1);
      return true;
    }
  }
  return false;
}

int count_maximal(const IndexTuple& t, const std::vector<std::int64_t>& dims) {
  int count = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] == dims[j]) ++count;
  }
  return count;
}

}  // namespace

std::vector<IndexTuple> build_s0(const std::vector<std::int64_t>& dims) {
  require_dims(dims);
  const int n = static_cast<int>(dims.size());
  std::vector<IndexTuple> s0;
  IndexTuple t(dims.size(), 1);
  do {
    if (count_maximal(t, dims) != n - 1) s0.push_back(t);
  } while (advance(t, dims));
  return s0;
}

SupportSet extend_support(std::vector<IndexTuple> s0, std::int64_t target,
                          const std::vector<std::int64_t>& dims) {
  require_dims(dims);
  const std::int64_t space = std::accumulate(
      dims.begin(), dims.end(), std::int64_t{1}, std::multiplies<>{});
  const std::int64_t q = static_cast<std::int64_t>(s0.size());
  if (target < q || target > space) {
    throw std::invalid_argument("support target " + std::to_string(target) +
                                " outside [" + std::to_string(q) + ", " +
                                std::to_string(space) + "]");
  }
  SupportSet s;
  s.dims = dims;
  s.tuples = std::move(s0);
  const int n = static_cast<int>(dims.size());
  std::int64_t missing = target - q;
  IndexTuple t(dims.size(), 1);
  if (missing > 0) {
    do {
      if (count_maximal(t, dims) == n - 1) {
        s.tuples.push_back(t);
        if (--missing == 0) break;
      }
    } while (advance(t, dims));
  }
  return s;
}

std::int64_t u_coeff(int mode_j, const IndexTuple& t,
                     const std::vector<std::int64_t>& dims) {
  const std::size_t j = static_cast<std::size_t>(mode_j - 1);
  if (t[j] == dims[j]) return 0;
  std::size_t others_maximal = 0;
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (s != j && t[s] == dims[s]) ++others_maximal;
  }
  if (others_maximal == 1) return 1;
  if (others_maximal >= 2) {
    // Tuples with two or more maximal coordinates lie outside the core
    // support and only appear as extension tuples for heads of three or
    // more modes. A coefficient of 1 there collapses one Jacobian column
    // per extension tuple; the own-coordinate offset keeps full rank.
    return t[j] + 1;
  }
  // All coordinates below maximum. For n = 2 the coefficient must separate
  // tuples that differ only in the complementary coordinate — the kernel
  // elimination pivots on u_2(i_1, k_2) - u_2(k_1, k_2) and its mirror —
  // so it is the other coordinate that enters. (Own-coordinate values make
  // those pivots vanish and the witness Jacobian drops rank.)
  if (t.size() == 2) return t[1 - j] + 1;
  return t[j] + 1;
}

WitnessPoint build_witness(const Format& f) {
  require_canonical(f);
  const PerfectReport report = is_perfect(f);
  if (!report.perfect) {
    throw std::invalid_argument(
        "format " + to_string(f) + " is not perfect (largest mode " +
        std::to_string(f.dims.back()) + " outside [" +
        std::to_string(report.interval_lo) + ", " +
        std::to_string(report.interval_hi) + "])");
  }

  const int n = f.order() - 1;
  const std::int64_t r = f.dims.back();
  std::vector<std::int64_t> head(f.dims.begin(), f.dims.end() - 1);

  WitnessPoint w;
  w.format = f;
  w.support = extend_support(build_s0(head), r, head);

  w.groups.reserve(static_cast<std::size_t>(r));
  for (std::int64_t h = 0; h < r; ++h) {
    const IndexTuple& k = w.support.tuples[static_cast<std::size_t>(h)];
    std::vector<std::vector<std::int64_t>> group;
    group.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
      std::vector<std::int64_t> vec(
          static_cast<std::size_t>(head[static_cast<std::size_t>(j - 1)]), 0);
      vec[static_cast<std::size_t>(k[static_cast<std::size_t>(j - 1)] - 1)] += 1;
      vec.back() += u_coeff(j, k, head);
      group.push_back(std::move(vec));
    }
    std::vector<std::int64_t> last(static_cast<std::size_t>(r), 0);
    last[static_cast<std::size_t>(h)] = 1;
    group.push_back(std::move(last));
    w.groups.push_back(std::move(group));
  }
  return w;
}

}  // namespace perfectrank
