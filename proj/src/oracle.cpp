#include "otoric/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <unordered_set>

#include <omp.h>

#include "otoric/box_search.hpp"
#include "otoric/circuit_engine.hpp"
#include "otoric/errors.hpp"

namespace otoric {

namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> columns_of(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

IntMatrix column_submatrix(const IntMatrix& a, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> rows(a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return a.submatrix(rows, cols);
}

std::size_t column_rank(const IntMatrix& a, Mask m) { return rank(column_submatrix(a, columns_of(m))); }

IntVector circuit_vector(const IntMatrix& a, Mask m) {
  const auto cols = columns_of(m);
  const auto basis = rational_kernel_basis(column_submatrix(a, cols));
  if (basis.size() != 1) throw std::logic_error("circuit support without a one-dimensional kernel");
  const IntVector local = basis[0].integer_primitive();
  IntVector full(a.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) full[cols[i]] = local[i];
  return canonical_sign(std::move(full));
}

// Level-wise (Apriori) search. `parallel` spreads each level's rank tests.
std::vector<IntVector> brute_force(const IntMatrix& a, const OracleBudget& budget, bool parallel) {
  budget.validate();
  const std::size_t n = a.cols();
  if (n > 64) throw BudgetExceeded("more than 64 columns");
  std::vector<IntVector> found;
  if (n == 0) return found;

  std::vector<Mask> candidates;
  for (std::size_t j = 0; j < n; ++j) candidates.push_back(Mask{1} << j);
  std::uint64_t counted = 0;

  for (std::size_t size = 1; !candidates.empty(); ++size) {
    if (size > budget.max_support_size)
      throw BudgetExceeded("circuit supports may exceed " + std::to_string(budget.max_support_size) +
                           " columns");
    counted += candidates.size();
    if (counted > budget.max_enumeration_count)
      throw BudgetExceeded("subset enumeration exceeded " + std::to_string(budget.max_enumeration_count));

    std::vector<std::size_t> ranks(candidates.size());
    std::exception_ptr failure;
    const auto count = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long i = 0; i < count; ++i) {
      try {
        ranks[i] = column_rank(a, candidates[i]);
      } catch (...) {
#pragma omp critical(otoric_bf_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Mask> independent;
    std::vector<Mask> dependent;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (ranks[i] == size) independent.push_back(candidates[i]);
      else if (ranks[i] + 1 == size) dependent.push_back(candidates[i]);
      // rank < size - 1 cannot happen: every (size-1)-subset is independent.
    }
    for (Mask m : dependent) found.push_back(circuit_vector(a, m));

    // Join independent sets agreeing on all but their highest column.
    std::sort(independent.begin(), independent.end());
    const std::unordered_set<Mask> lookup(independent.begin(), independent.end());
    std::vector<Mask> next;
    for (std::size_t i = 0; i < independent.size(); ++i) {
      const Mask x = independent[i];
      const Mask x_prefix = x & ~(Mask{1} << (63 - std::countl_zero(x)));
      for (std::size_t k = i + 1; k < independent.size(); ++k) {
        const Mask y = independent[k];
        const Mask y_top = Mask{1} << (63 - std::countl_zero(y));
        if ((y & ~y_top) != x_prefix) continue;
        const Mask u = x | y;
        bool all_in = true;
        for (Mask rest = u; rest && all_in; rest &= rest - 1) {
          const Mask drop = rest & (~rest + 1);
          all_in = lookup.contains(u & ~drop);
        }
        if (all_in) next.push_back(u);
      }
    }
    candidates = std::move(next);
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::int64_t to_i64(const BigInt& v) {
  if (!v.fits_slong_p()) throw BudgetExceeded("entry exceeds the 64-bit search range");
  return v.get_si();
}

IntVector to_big(std::span<const std::int64_t> x) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<long>(x[i]);
  return out;
}

BigInt l1(const IntVector& v) {
  BigInt s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

std::vector<IntVector> graver(const IntMatrix& a, const OracleBudget& budget, bool parallel) {
  budget.validate();
  const std::size_t n = a.cols();
  if (n == 0) return {};
  const std::int64_t b = budget.max_entry_bound;
  const BoxSearch search(a, std::vector<std::int64_t>(n, -b), std::vector<std::int64_t>(n, b));
  std::atomic<std::uint64_t> nodes{0};

  std::vector<std::vector<IntVector>> per_value(static_cast<std::size_t>(2 * b + 1));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t v = -b; v <= b; ++v) {
    try {
      auto& bucket = per_value[static_cast<std::size_t>(v + b)];
      search.run(
          [&](std::span<const std::int64_t> x) {
            auto nz = std::find_if(x.begin(), x.end(), [](std::int64_t e) { return e != 0; });
            if (nz != x.end() && *nz > 0) bucket.push_back(to_big(x));
            return true;
          },
          nodes, budget.max_enumeration_count, &v);
    } catch (...) {
#pragma omp critical(otoric_graver_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<IntVector> kernel;
  for (auto& bucket : per_value)
    for (auto& x : bucket) kernel.push_back(std::move(x));
  std::sort(kernel.begin(), kernel.end(), [](const IntVector& x, const IntVector& y) {
    const BigInt lx = l1(x), ly = l1(y);
    return lx != ly ? lx < ly : x < y;
  });

  // A dominated vector is dominated by a primitive one of smaller norm.
  std::vector<IntVector> primitive;
  for (const auto& x : kernel) {
    bool dominated = false;
    for (const auto& y : primitive) {
      IntVector neg(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) neg[i] = -y[i];
      if (conformal_le(y, x) || conformal_le(neg, x)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) primitive.push_back(x);
  }
  std::sort(primitive.begin(), primitive.end());
  return primitive;
}

} // namespace

void OracleBudget::validate() const {
  if (max_entry_bound <= 0 || max_support_size == 0 || max_enumeration_count == 0)
    throw ArgumentError("oracle budget fields must be positive");
}

bool conformal_le(const IntVector& y, const IntVector& x) {
  if (y.size() != x.size()) throw DimensionError("conformal comparison of different lengths");
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(y[i]) == 0) continue;
    if (sgn(y[i]) != sgn(x[i]) || abs(y[i]) > abs(x[i])) return false;
  }
  return true;
}

bool is_circuit_support(const IntMatrix& a, const std::vector<std::size_t>& s) {
  if (s.empty()) throw ArgumentError("empty column set");
  std::vector<std::size_t> cols = s;
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (cols.back() >= a.cols()) throw ArgumentError("column index out of range");
  if (rank(column_submatrix(a, cols)) + 1 != cols.size()) return false;
  for (std::size_t drop = 0; drop < cols.size(); ++drop) {
    std::vector<std::size_t> rest = cols;
    rest.erase(rest.begin() + static_cast<long>(drop));
    if (rank(column_submatrix(a, rest)) != rest.size()) return false;
  }
  return true;
}

std::vector<IntVector> circuits_brute_force(const IntMatrix& a, const OracleBudget& budget) {
  return brute_force(a, budget, true);
}

std::vector<IntVector> circuits_brute_force_serial(const IntMatrix& a, const OracleBudget& budget) {
  return brute_force(a, budget, false);
}

bool is_primitive(const IntMatrix& a, const IntVector& v, const OracleBudget& budget) {
  budget.validate();
  if (v.size() != a.cols()) throw ArgumentError("vector length does not match the column count");
  if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) == 0; }))
    throw ArgumentError("is_primitive of the zero vector");
  if (!kernel_contains(a, v)) throw ArgumentError("vector is not in the kernel");

  std::vector<std::int64_t> lo(v.size()), hi(v.size()), target(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    target[i] = to_i64(v[i]);
    if (std::abs(target[i]) > budget.max_entry_bound)
      throw BudgetExceeded("entry " + v[i].get_str() + " exceeds the entry bound " +
                           std::to_string(budget.max_entry_bound));
    lo[i] = std::min<std::int64_t>(0, target[i]);
    hi[i] = std::max<std::int64_t>(0, target[i]);
  }
  const BoxSearch search(a, lo, hi);
  std::atomic<std::uint64_t> nodes{0};
  bool primitive = true;
  search.run(
      [&](std::span<const std::int64_t> x) {
        const bool zero = std::all_of(x.begin(), x.end(), [](std::int64_t e) { return e == 0; });
        if (zero || std::equal(x.begin(), x.end(), target.begin())) return true;
        primitive = false;
        return false;
      },
      nodes, budget.max_enumeration_count);
  return primitive;
}

std::vector<IntVector> graver_small(const IntMatrix& a, const OracleBudget& budget) {
  return graver(a, budget, true);
}

std::vector<IntVector> graver_small_serial(const IntMatrix& a, const OracleBudget& budget) {
  return graver(a, budget, false);
}

bool verify_restriction(const WeightedOrientedGraph& g, const std::vector<std::size_t>& edges,
                        const OracleBudget& budget) {
  std::vector<std::size_t> sub = edges;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  if (!sub.empty() && sub.back() >= g.edge_count()) throw ArgumentError("edge index out of range");

  const WeightedOrientedGraph h = g.edge_subgraph(sub);
  std::vector<IntVector> lhs;
  for (const auto& c : circuits_brute_force(incidence_matrix(h), budget)) {
    IntVector full(g.edge_count());
    for (std::size_t i = 0; i < sub.size(); ++i) full[sub[i]] = c[i];
    lhs.push_back(canonical_sign(std::move(full)));
  }
  std::vector<char> inside(g.edge_count(), 0);
  for (std::size_t e : sub) inside[e] = 1;
  std::vector<IntVector> rhs;
  for (auto& c : circuits_brute_force(incidence_matrix(g), budget)) {
    bool contained = true;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(c[i]) != 0 && !inside[i]) contained = false;
    if (contained) rhs.push_back(std::move(c));
  }
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

} // namespace otoric
