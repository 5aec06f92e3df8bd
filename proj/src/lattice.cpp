#include "rootnum/lattice.hpp"

#include <sstream>

namespace rootnum {

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  long r = static_cast<long>(rows.size());
  long c = rows.empty() ? 0 : static_cast<long>(rows.front().size());
  IntMatrix m(r, c);
  for (long i = 0; i < r; ++i) {
    if (static_cast<long>(rows[static_cast<size_t>(i)].size()) != c) {
      throw std::invalid_argument("ragged row list");
    }
    for (long j = 0; j < c; ++j)
      m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

void IntMatrix::swap_rows(long i, long j) {
  if (i == j) return;
  for (long c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(long i) {
  for (long c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(long i, long j, const BigInt& c) {
  for (long col = 0; col < cols_; ++col) at(i, col) += c * at(j, col);
}

bool IntMatrix::row_is_zero(long i) const {
  for (long c = 0; c < cols_; ++c) {
    if (at(i, c) != 0) return false;
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (long j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

BigInt IntMatrix::det_cofactor() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  if (rows_ == 0) return 1;
  if (rows_ == 1) return at(0, 0);
  BigInt total = 0;
  for (long j = 0; j < cols_; ++j) {
    if (at(0, j) == 0) continue;
    IntMatrix minor(rows_ - 1, cols_ - 1);
    for (long i = 1; i < rows_; ++i) {
      long cc = 0;
      for (long c = 0; c < cols_; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = at(i, c);
      }
    }
    BigInt term = at(0, j) * minor.det_cofactor();
    if (j % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (long i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : "; ");
    for (long j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

IntMatrix hnf(const IntMatrix& gens) {
  IntMatrix m = gens;
  long rows = m.rows(), cols = m.cols();
  long pivot_row = 0;
  std::vector<long> pivot_cols;
  for (long col = 0; col < cols && pivot_row < rows; ++col) {
    // clear the column below pivot_row by gcd steps
    while (true) {
      long best = -1;
      for (long i = pivot_row; i < rows; ++i) {
        if (m.at(i, col) == 0) continue;
        if (best < 0 || abs(m.at(i, col)) < abs(m.at(best, col))) best = i;
      }
      if (best < 0) break;
      m.swap_rows(pivot_row, best);
      bool reduced = true;
      for (long i = pivot_row + 1; i < rows; ++i) {
        if (m.at(i, col) == 0) continue;
        BigInt q = m.at(i, col) / m.at(pivot_row, col);  // truncated division
        m.add_row_multiple(i, pivot_row, -q);
        if (m.at(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (m.at(pivot_row, col) == 0) continue;
    if (m.at(pivot_row, col) < 0) m.negate_row(pivot_row);
    // reduce the entries above the pivot into [0, pivot)
    for (long i = 0; i < pivot_row; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(),
                 m.at(pivot_row, col).get_mpz_t());
      if (q != 0) m.add_row_multiple(i, pivot_row, -q);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  IntMatrix out(pivot_row, cols);
  for (long i = 0; i < pivot_row; ++i)
    for (long j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

namespace {

/// Shared column sweep: brings m into staggered pivot form with unimodular
/// row operations, mirroring every operation onto *mirror when given.
std::vector<long> pivot_sweep(IntMatrix& m, IntMatrix* mirror) {
  long rows = m.rows(), cols = m.cols();
  std::vector<long> pivots;
  long top = 0;
  for (long col = 0; col < cols && top < rows; ++col) {
    while (true) {
      long best = -1;
      for (long i = top; i < rows; ++i) {
        if (m.at(i, col) == 0) continue;
        if (best < 0 || abs(m.at(i, col)) < abs(m.at(best, col))) best = i;
      }
      if (best < 0) break;
      if (best != top) {
        m.swap_rows(top, best);
        if (mirror) mirror->swap_rows(top, best);
      }
      bool clear = true;
      for (long i = top + 1; i < rows; ++i) {
        if (m.at(i, col) == 0) continue;
        BigInt q = m.at(i, col) / m.at(top, col);
        m.add_row_multiple(i, top, -q);
        if (mirror) mirror->add_row_multiple(i, top, -q);
        if (m.at(i, col) != 0) clear = false;
      }
      if (clear) break;
    }
    if (m.at(top, col) != 0) {
      pivots.push_back(col);
      ++top;
    }
  }
  return pivots;
}

}  // namespace

PivotBasis triangular_basis(const IntMatrix& gens) {
  IntMatrix m = gens;
  std::vector<long> pivots = pivot_sweep(m, nullptr);
  long s = static_cast<long>(pivots.size());
  PivotBasis out;
  out.pivots = std::move(pivots);
  out.basis = IntMatrix(s, m.cols());
  for (long i = 0; i < s; ++i)
    for (long j = 0; j < m.cols(); ++j) out.basis.at(i, j) = m.at(i, j);
  return out;
}

UnitPivotResult unit_pivot_change_of_basis(const IntMatrix& valuations) {
  IntMatrix m = valuations;
  IntMatrix d = IntMatrix::identity(m.rows());
  std::vector<long> pivots = pivot_sweep(m, &d);
  if (static_cast<long>(pivots.size()) < m.rows()) {
    throw RankDeficient("valuation matrix has row rank " +
                        std::to_string(pivots.size()) + " < " +
                        std::to_string(m.rows()));
  }
  UnitPivotResult out;
  out.d = std::move(d);
  out.pivot_basis.basis = std::move(m);
  out.pivot_basis.pivots = std::move(pivots);
  return out;
}

}  // namespace rootnum
