#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

// Eigen needs scalar traits for the GMP types before any matrix of them
// is instantiated.
namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace dzeta {

using Rat = mpq_class;
using Int = mpz_class;
using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using RatMatrix = MatrixX<Rat>;
using RatVector = VectorX<Rat>;
using RatRowVector = RowVectorX<Rat>;
using IntMatrix = MatrixX<Int>;

// Canonical "num/den" (or "num" when den = 1); this is the one wire format
// for rationals everywhere (JSON, CSV, golden tests).
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

template <typename Scalar>
bool matrices_equal(const MatrixX<Scalar>& x, const MatrixX<Scalar>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j)
      if (x(i, j) != y(i, j)) return false;
  return true;
}

// (-1)^e, safe for negative e
inline int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

// binomial with the extended convention binom(n,r) = 0 for r < 0 or r > n
inline Int binom(long n, long r) {
  if (n < 0) throw std::invalid_argument("binom: negative upper index");
  if (r < 0 || r > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return b;
}

// base^exp for integer base > 0 and possibly negative exp
inline Rat pow_rat(long base, long exp) {
  if (base <= 0) throw std::invalid_argument("pow_rat: base must be positive");
  Int b;
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp >= 0 ? exp : -exp));
  return exp >= 0 ? Rat(b) : Rat(1, b);
}

// q^exp for exp >= 0 (0^0 = 1)
inline Rat pow_rat(const Rat& q, long exp) {
  if (exp < 0) throw std::invalid_argument("pow_rat: negative exponent");
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(exp));
  return Rat(num) / Rat(den);
}

}  // namespace dzeta
