#include "dzeta/linalg.hpp"

#include <stdexcept>

namespace dzeta {

namespace {

Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("fraction-free elimination: non-exact division");
  return q;
}

// scale each row by the lcm of its denominators; row scaling by a positive
// rational changes neither the row space nor the right kernel, so the RREF
// is unaffected
IntMatrix clear_rows(const RatMatrix& m) {
  IntMatrix a(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (Index j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (Index j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j) * Rat(l);
      if (v.get_den() != 1) throw std::logic_error("row clearing failed");
      a(i, j) = v.get_num();
    }
  }
  return a;
}

}  // namespace

RrefResult rref(const RatMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  RrefResult res;
  res.reduced = RatMatrix::Zero(rows, cols);
  if (rows == 0 || cols == 0) return res;

  // Bareiss forward elimination on the integer-cleared matrix; with column
  // pivoting the one-step division by the previous pivot stays exact
  IntMatrix a = clear_rows(m);
  Int prev = 1;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index piv = -1;
    for (Index i = row; i < rows; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    for (Index i = row + 1; i < rows; ++i) {
      for (Index j = col + 1; j < cols; ++j)
        a(i, j) = exact_div(a(row, col) * a(i, j) - a(i, col) * a(row, j), prev);
      a(i, col) = 0;
    }
    prev = a(row, col);
    res.pivot_columns.push_back(col);
    ++row;
  }
  res.rank = row;

  // normalization pass: unit pivots, zeros above
  RatMatrix r(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) r(i, j) = Rat(a(i, j));
  for (Index i = res.rank - 1; i >= 0; --i) {
    const Index p = res.pivot_columns[static_cast<size_t>(i)];
    Rat inv = r(i, p);
    for (Index j = p; j < cols; ++j) r(i, j) /= inv;
    for (Index i2 = 0; i2 < i; ++i2) {
      Rat f = r(i2, p);
      if (f == 0) continue;
      for (Index j = p; j < cols; ++j) r(i2, j) -= f * r(i, j);
    }
  }
  res.reduced = std::move(r);
  return res;
}

RatMatrix right_kernel(const RatMatrix& m) {
  const Index cols = m.cols();
  RrefResult rr = rref(m);
  std::vector<Index> free_cols;
  {
    size_t pi = 0;
    for (Index j = 0; j < cols; ++j) {
      if (pi < rr.pivot_columns.size() && rr.pivot_columns[pi] == j)
        ++pi;
      else
        free_cols.push_back(j);
    }
  }
  RatMatrix basis(static_cast<Index>(free_cols.size()), cols);
  basis.setZero();
  for (size_t b = 0; b < free_cols.size(); ++b) {
    const Index f = free_cols[b];
    basis(static_cast<Index>(b), f) = 1;
    for (size_t i = 0; i < rr.pivot_columns.size(); ++i)
      basis(static_cast<Index>(b), rr.pivot_columns[i]) = -rr.reduced(static_cast<Index>(i), f);
  }
  if (basis.rows() == 0) return basis;
  // canonical form: deterministic output regardless of free-column layout
  return rref(basis).reduced;
}

RatMatrix left_kernel(const RatMatrix& m) { return right_kernel(m.transpose()); }

RatPoly charpoly(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: non-square matrix");
  const Index s = m.rows();
  if (s == 0) return RatPoly{Rat(1)};

  Int d = 1;
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j)
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
  IntMatrix a(s, s);
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j) {
      Rat v = m(i, j) * Rat(d);
      a(i, j) = v.get_num();
    }

  // integer Faddeev-LeVerrier for q(t) = det(tI - a)
  std::vector<Int> q(static_cast<size_t>(s) + 1);
  q[static_cast<size_t>(s)] = 1;
  IntMatrix aux = IntMatrix::Identity(s, s);
  IntMatrix mk(s, s);
  for (Index i = 1; i <= s; ++i) {
    mk = a * aux;
    Int tr = 0;
    for (Index j = 0; j < s; ++j) tr += mk(j, j);
    q[static_cast<size_t>(s - i)] = exact_div(-tr, Int(i));
    if (i < s) {
      aux = mk;
      for (Index j = 0; j < s; ++j) aux(j, j) += q[static_cast<size_t>(s - i)];
    }
  }

  // det(tI - m) = q(d t) / d^s, i.e. coefficient i divides by d^(s-i)
  std::vector<Rat> c(static_cast<size_t>(s) + 1);
  for (Index i = 0; i <= s; ++i) {
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(s - i));
    Rat v(q[static_cast<size_t>(i)], pw);
    v.canonicalize();
    c[static_cast<size_t>(i)] = v;
  }
  return RatPoly(std::move(c));
}

RatMatrix eigenspace_left(const RatMatrix& m, const Rat& mu) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenspace_left: non-square matrix");
  RatMatrix shifted = m;
  for (Index i = 0; i < m.rows(); ++i) shifted(i, i) -= mu;
  return left_kernel(shifted);
}

}  // namespace dzeta
