#include "otoric/box_search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "otoric/errors.hpp"

namespace otoric {

namespace {

constexpr std::int64_t kSafe = std::int64_t{1} << 60;
constexpr std::uint64_t kFlushEvery = 4096;

} // namespace

BoxSearch::BoxSearch(const IntMatrix& a, std::vector<std::int64_t> lo, std::vector<std::int64_t> hi)
    : rows_(a.rows()), cols_(a.cols()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != cols_ || hi_.size() != cols_)
    throw DimensionError("box bounds do not match the column count");
  for (std::size_t j = 0; j < cols_; ++j)
    if (lo_[j] > hi_[j]) throw ArgumentError("empty box range");

  order_.resize(cols_);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
    return hi_[x] - lo_[x] < hi_[y] - lo_[y];
  });

  // Every |partial row sum| is bounded by sum_j |a_rj| * max(|lo_j|, |hi_j|).
  a_.assign(rows_ * cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpz_class bound = 0;
    for (std::size_t t = 0; t < cols_; ++t) {
      const std::size_t j = order_[t];
      const mpz_class& v = a(r, j);
      const std::int64_t reach = std::max(std::abs(lo_[j]), std::abs(hi_[j]));
      bound += abs(v) * reach;
      if (bound > kSafe || !v.fits_slong_p())
        throw BudgetExceeded("matrix entries times box bounds exceed 64-bit search range");
      a_[r * cols_ + t] = v.get_si();
    }
  }

  rest_min_.assign((cols_ + 1) * rows_, 0);
  rest_max_.assign((cols_ + 1) * rows_, 0);
  for (std::size_t t = cols_; t-- > 0;) {
    const std::size_t j = order_[t];
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::int64_t c = a_[r * cols_ + t];
      const std::int64_t x = c * lo_[j], y = c * hi_[j];
      rest_min_[t * rows_ + r] = rest_min_[(t + 1) * rows_ + r] + std::min(x, y);
      rest_max_[t * rows_ + r] = rest_max_[(t + 1) * rows_ + r] + std::max(x, y);
    }
  }
}

bool BoxSearch::run(const Visitor& visit, std::atomic<std::uint64_t>& nodes, std::uint64_t limit,
                    const std::int64_t* first_value) const {
  std::vector<std::int64_t> sums(rows_, 0);
  std::vector<std::int64_t> x(cols_, 0);
  std::uint64_t local = 0;

  auto flush = [&] {
    const std::uint64_t total = nodes.fetch_add(local) + local;
    local = 0;
    if (total > limit) throw BudgetExceeded("box enumeration exceeded " + std::to_string(limit) + " nodes");
  };

  auto feasible = [&](std::size_t next) {
    const std::int64_t* mn = &rest_min_[next * rows_];
    const std::int64_t* mx = &rest_max_[next * rows_];
    for (std::size_t r = 0; r < rows_; ++r)
      if (sums[r] + mn[r] > 0 || sums[r] + mx[r] < 0) return false;
    return true;
  };

  // Explicit recursion keeps the solver re-entrant across threads.
  std::function<bool(std::size_t)> descend = [&](std::size_t t) -> bool {
    if (t == cols_) return visit(x);
    const std::size_t j = order_[t];
    std::int64_t from = lo_[j], to = hi_[j];
    if (t == 0 && first_value) from = to = *first_value;
    for (std::int64_t v = from; v <= to; ++v) {
      if (++local >= kFlushEvery) flush();
      for (std::size_t r = 0; r < rows_; ++r) sums[r] += a_[r * cols_ + t] * v;
      x[j] = v;
      bool keep_going = true;
      if (feasible(t + 1)) keep_going = descend(t + 1);
      for (std::size_t r = 0; r < rows_; ++r) sums[r] -= a_[r * cols_ + t] * v;
      if (!keep_going) {
        x[j] = 0;
        return false;
      }
    }
    x[j] = 0;
    return true;
  };

  bool finished = true;
  if (cols_ > 0 && (!first_value || (*first_value >= lo_[order_[0]] && *first_value <= hi_[order_[0]])))
    finished = descend(0);
  else if (cols_ == 0)
    finished = visit(x);
  flush();
  return finished;
}

} // namespace otoric
