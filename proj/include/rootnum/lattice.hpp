#pragma once

#include <vector>

#include "rootnum/errors.hpp"
#include "rootnum/rational.hpp"

namespace rootnum {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(long rows, long cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows * cols), BigInt(0)) {}
  static IntMatrix identity(long n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const BigInt& at(long i, long j) const {
    return e_[static_cast<size_t>(i * cols_ + j)];
  }
  BigInt& at(long i, long j) { return e_[static_cast<size_t>(i * cols_ + j)]; }

  void swap_rows(long i, long j);
  void negate_row(long i);
  /// row i += c * row j
  void add_row_multiple(long i, long j, const BigInt& c);
  bool row_is_zero(long i) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  /// Determinant by cofactor expansion; intended for small test matrices.
  BigInt det_cofactor() const;

  std::string str() const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<BigInt> e_;
};

/// Basis of a subgroup of Z^r in staggered pivot form: row i has a nonzero
/// entry in its pivot column n_i, rows below it vanish there, and the pivot
/// columns strictly increase.
struct PivotBasis {
  IntMatrix basis;           // s rows
  std::vector<long> pivots;  // strictly increasing column indices
};

/// Canonical row Hermite normal form (positive pivots, entries above each
/// pivot reduced, zero rows dropped). Two generator sets span the same
/// lattice iff their HNFs coincide; this is the oracle for lattice equality.
IntMatrix hnf(const IntMatrix& gens);

/// Pivot-basis triangularization by a greedy left-to-right column sweep with
/// Euclidean elimination inside each column. The output rows generate the
/// same subgroup of Z^r as the input rows.
PivotBasis triangular_basis(const IntMatrix& gens);

/// Unimodular change of basis bringing valuation vectors into pivot form.
/// Requires full row rank (the multiplicative lattice lemma needs the
/// projection to be a basis); throws RankDeficient otherwise.
struct UnitPivotResult {
  IntMatrix d;  // in GL_s(Z)
  PivotBasis pivot_basis;
};
UnitPivotResult unit_pivot_change_of_basis(const IntMatrix& valuations);

}  // namespace rootnum
