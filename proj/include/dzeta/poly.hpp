#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dzeta/types.hpp"

namespace dzeta {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Trailing zero coefficients are trimmed, so the zero polynomial has an
// empty coefficient vector and degree() == -1.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RatPoly monomial(int deg, const Rat& coeff = Rat(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // coefficient of t^i, zero beyond the stored range
  const Rat& operator[](int i) const {
    static const Rat zero(0);
    return (i < 0 || i >= static_cast<int>(c_.size())) ? zero : c_[static_cast<size_t>(i)];
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  RatPoly derivative() const;

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  // p(-t)
  RatPoly reflect() const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

inline RatPoly operator*(const Rat& s, const RatPoly& p) { return p * s; }

struct PolyDivResult {
  RatPoly quotient;
  RatPoly remainder;
};

// Euclidean division, divisor must be nonzero.
PolyDivResult poly_divmod(const RatPoly& a, const RatPoly& b);

// gcd normalized to a primitive integer polynomial with positive leading
// coefficient (constant 1 for coprime inputs).
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

// p with repeated factors collapsed: p / gcd(p, p')
RatPoly squarefree_part(const RatPoly& p);

// every root z of p satisfies |z| < cauchy_root_bound(p)
Rat cauchy_root_bound(const RatPoly& p);

// number of distinct real roots of p in the half-open interval (a, b],
// exact via a Sturm chain of the square-free part
int sturm_count(const RatPoly& p, const Rat& a, const Rat& b);

// first n+1 Taylor coefficients of num/den (den(0) != 0) by exact long division
std::vector<Rat> series_coeffs(const RatPoly& num, const RatPoly& den, int n);

bool integer_coeffs(const RatPoly& p);

}  // namespace dzeta
