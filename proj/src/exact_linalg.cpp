#include "otoric/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "otoric/errors.hpp"

namespace otoric {

namespace {

std::vector<std::string> generated_labels(char prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

void check_labels(const std::vector<std::string>& labels, std::size_t expected, const char* what) {
  if (labels.size() != expected)
    throw DimensionError(std::string(what) + " label count " + std::to_string(labels.size()) +
                         " does not match dimension " + std::to_string(expected));
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ArgumentError(std::string("duplicate ") + what + " label");
}

// Fraction-free row echelon form. Row i of `m` holds, after the pass, the
// leading principal minors of the pivot rows/columns chosen so far, which is
// why every division by the previous pivot is exact.
struct Echelon {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> m;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;

  BigInt& at(std::size_t r, std::size_t c) { return m[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return m[r * cols + c]; }
};

Echelon bareiss(const IntMatrix& a) {
  Echelon e;
  e.rows = a.rows();
  e.cols = a.cols();
  e.m.assign(a.entries().begin(), a.entries().end());

  BigInt prev = 1;
  BigInt t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.cols && r < e.rows; ++c) {
    std::size_t p = r;
    while (p < e.rows && sgn(e.at(p, c)) == 0) ++p;
    if (p == e.rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < e.cols; ++j) std::swap(e.at(p, j), e.at(r, j));
      e.sign = -e.sign;
    }
    const BigInt& piv = e.at(r, c);
    for (std::size_t i = r + 1; i < e.rows; ++i) {
      const BigInt lead = e.at(i, c);
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        BigInt& x = e.at(i, j);
        t = piv * x - lead * e.at(r, j);
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("Bareiss: inexact division");
        mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      e.at(i, c) = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

} // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols), row_labels_(generated_labels('r', rows)),
      col_labels_(generated_labels('c', cols)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> row_labels,
                     std::vector<std::string> col_labels)
    : rows_(rows), cols_(cols), entries_(rows * cols), row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  check_labels(row_labels_, rows_, "row");
  check_labels(col_labels_, cols_, "column");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.front().size();
  IntMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) throw DimensionError("ragged row list");
    for (std::size_t j = 0; j < m; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> keep_rows,
                               std::span<const std::size_t> keep_cols) const {
  std::vector<std::string> rl, cl;
  for (auto r : keep_rows) {
    if (r >= rows_) throw DimensionError("row index out of range");
    rl.push_back(row_labels_[r]);
  }
  for (auto c : keep_cols) {
    if (c >= cols_) throw DimensionError("column index out of range");
    cl.push_back(col_labels_[c]);
  }
  IntMatrix out(keep_rows.size(), keep_cols.size(), std::move(rl), std::move(cl));
  for (std::size_t i = 0; i < keep_rows.size(); ++i)
    for (std::size_t j = 0; j < keep_cols.size(); ++j)
      out(i, j) = (*this)(keep_rows[i], keep_cols[j]);
  return out;
}

IntVector IntMatrix::multiply(std::span<const BigInt> v) const {
  if (v.size() != cols_)
    throw DimensionError("vector length " + std::to_string(v.size()) + " != columns " +
                         std::to_string(cols_));
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

void RationalVector::reduce() {
  BigInt g = common_denominator;
  for (const auto& x : numerators) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : numerators) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(common_denominator.get_mpz_t(), common_denominator.get_mpz_t(), g.get_mpz_t());
  }
}

IntVector RationalVector::integer_primitive() const {
  IntVector out = numerators;
  const BigInt g = content(out);
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

BigInt det(const IntMatrix& a) {
  if (!a.is_square())
    throw DimensionError("det of non-square " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " matrix");
  if (a.rows() == 0) return 1;
  Echelon e = bareiss(a);
  if (e.pivot_cols.size() < a.rows()) return 0;
  BigInt d = e.at(a.rows() - 1, a.cols() - 1);
  if (e.sign < 0) d = -d;
  return d;
}

BigInt minor(const IntMatrix& a, std::span<const std::size_t> deleted_rows,
             std::span<const std::size_t> deleted_cols) {
  std::vector<bool> drop_r(a.rows(), false), drop_c(a.cols(), false);
  for (auto r : deleted_rows) {
    if (r >= a.rows()) throw DimensionError("deleted row out of range");
    drop_r[r] = true;
  }
  for (auto c : deleted_cols) {
    if (c >= a.cols()) throw DimensionError("deleted column out of range");
    drop_c[c] = true;
  }
  std::vector<std::size_t> keep_r, keep_c;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!drop_r[r]) keep_r.push_back(r);
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!drop_c[c]) keep_c.push_back(c);
  if (keep_r.size() != keep_c.size())
    throw DimensionError("minor: surviving submatrix is " + std::to_string(keep_r.size()) + "x" +
                         std::to_string(keep_c.size()));
  return det(a.submatrix(keep_r, keep_c));
}

std::size_t rank(const IntMatrix& a) { return bareiss(a).pivot_cols.size(); }

std::vector<RationalVector> rational_kernel_basis(const IntMatrix& a) {
  const Echelon e = bareiss(a);
  const std::size_t n = a.cols();
  const std::size_t rk = e.pivot_cols.size();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(n);
    x[free] = 1;
    for (std::size_t i = rk; i-- > 0;) {
      const std::size_t pc = e.pivot_cols[i];
      mpq_class s = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (sgn(e.at(i, j)) != 0 && sgn(x[j]) != 0) s += mpq_class(e.at(i, j)) * x[j];
      x[pc] = -s / mpq_class(e.at(i, pc));
    }
    RationalVector v;
    v.common_denominator = 1;
    for (const auto& q : x)
      mpz_lcm(v.common_denominator.get_mpz_t(), v.common_denominator.get_mpz_t(),
              q.get_den_mpz_t());
    v.numerators.reserve(n);
    for (const auto& q : x) {
      BigInt num = q.get_num() * (v.common_denominator / q.get_den());
      v.numerators.push_back(std::move(num));
    }
    v.reduce();
    basis.push_back(std::move(v));
  }
  return basis;
}

bool kernel_contains(const IntMatrix& a, std::span<const BigInt> v) {
  const IntVector prod = a.multiply(v);
  return std::all_of(prod.begin(), prod.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

BigInt content(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

} // namespace otoric
