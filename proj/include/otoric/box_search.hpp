#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "otoric/exact_linalg.hpp"

namespace otoric {

/// Enumerates integer points x with lo <= x <= hi and A x = 0.
///
/// Depth-first over the columns, narrowest range first. After each
/// assignment every row checks that zero is still reachable from the partial
/// sum given the interval the unassigned columns can contribute. Arithmetic is
/// int64; construction throws BudgetExceeded when A and the box could
/// overflow it.
class BoxSearch {
public:
  /// Callback receives x in original column order; returning false stops.
  using Visitor = std::function<bool(std::span<const std::int64_t>)>;

  BoxSearch(const IntMatrix& a, std::vector<std::int64_t> lo, std::vector<std::int64_t> hi);

  std::size_t cols() const { return cols_; }
  /// Column assigned first; parallel callers partition on its values.
  std::size_t first_column() const { return order_.empty() ? 0 : order_[0]; }

  /// Visits every solution, or only those whose first_column() equals
  /// `first_value` when given. Each visited tree node is added to `nodes`;
  /// BudgetExceeded is thrown once the shared total passes `limit`.
  /// Returns false iff the visitor stopped the search.
  bool run(const Visitor& visit, std::atomic<std::uint64_t>& nodes, std::uint64_t limit,
           const std::int64_t* first_value = nullptr) const;

  const std::vector<std::int64_t>& lo() const { return lo_; }
  const std::vector<std::int64_t>& hi() const { return hi_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> a_;    // row-major, columns permuted into search order
  std::vector<std::size_t> order_;  // search position -> original column
  std::vector<std::int64_t> lo_, hi_;
  // rest_min_[t * rows + r]: least contribution of positions t.. to row r.
  std::vector<std::int64_t> rest_min_, rest_max_;
};

} // namespace otoric
