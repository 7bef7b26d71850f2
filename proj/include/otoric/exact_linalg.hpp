#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace otoric {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

/// Dense exact integer matrix with labelled rows and columns.
///
/// For incidence matrices rows are vertex ids and columns are edge ids. The
/// labels are carried along through submatrix extraction so that results can
/// be mapped back to the parent graph.
class IntMatrix {
public:
  IntMatrix() = default;
  /// Zero matrix with generated labels r1..rN / c1..cM.
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> row_labels,
            std::vector<std::string> col_labels);

  /// Row-major construction from small integers; handy for fixtures.
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const BigInt> entries() const { return entries_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  /// Keeps the listed rows and columns, in the order given.
  IntMatrix submatrix(std::span<const std::size_t> keep_rows,
                      std::span<const std::size_t> keep_cols) const;

  IntVector multiply(std::span<const BigInt> v) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// Rational vector stored as integer numerators over one positive denominator.
struct RationalVector {
  IntVector numerators;
  BigInt common_denominator = 1;

  /// Divides numerators and denominator by their common gcd.
  void reduce();
  /// Cleared, gcd-reduced integer multiple with the same sign pattern.
  IntVector integer_primitive() const;
};

/// Determinant by fraction-free (Bareiss) elimination. Throws DimensionError
/// on non-square input. The 0x0 determinant is 1.
BigInt det(const IntMatrix& a);

/// Determinant of the submatrix left after deleting the given rows and
/// columns (0-based indices). Deleting everything yields 1.
BigInt minor(const IntMatrix& a, std::span<const std::size_t> deleted_rows,
             std::span<const std::size_t> deleted_cols);

std::size_t rank(const IntMatrix& a);

/// Basis of the null space over Q, one vector per free column of the
/// fraction-free echelon form.
std::vector<RationalVector> rational_kernel_basis(const IntMatrix& a);

/// True iff A v = 0 exactly. Throws DimensionError on length mismatch.
bool kernel_contains(const IntMatrix& a, std::span<const BigInt> v);

/// gcd of |v_i| over the nonzero entries; 0 for the zero vector.
BigInt content(std::span<const BigInt> v);

} // namespace otoric
