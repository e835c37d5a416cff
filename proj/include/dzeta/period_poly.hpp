#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dzeta/types.hpp"

namespace dzeta {

// homogeneous polynomial in x, y of fixed degree with rational coefficients;
// the zero polynomial still remembers its degree
class HomogPoly {
 public:
  explicit HomogPoly(long degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("HomogPoly: degree >= 0 required");
  }

  long degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }

  // accumulate coeff * x^a y^b; a + b must equal the degree
  void add_term(long a, long b, const Rat& coeff);

  // coefficient of x^a y^b (zero if absent)
  Rat coeff(long a, long b) const;

  const std::map<std::pair<long, long>, Rat>& terms() const { return coeffs_; }

  HomogPoly operator+(const HomogPoly& other) const;
  HomogPoly operator-(const HomogPoly& other) const;
  HomogPoly operator-() const;
  bool operator==(const HomogPoly&) const = default;

  std::string str() const;

 private:
  long degree_;
  std::map<std::pair<long, long>, Rat> coeffs_;
};

HomogPoly operator*(const Rat& scalar, const HomogPoly& p);

// 2x2 rational matrix acting on the arguments
using Mat2 = std::array<std::array<Rat, 2>, 2>;

// p(ax + by, cx + dy) for g = [[a,b],[c,d]]
HomogPoly substitute(const HomogPoly& p, const Mat2& g);

// projection onto the restricted even part of weight k: keep monomials
// x^a y^b with a, b both even, drop the boundary x^(k-2) and y^(k-2)
HomogPoly project_even_restricted(const HomogPoly& p, long k);

// coordinates of a restricted even polynomial on the totally odd index set
struct RestrictedVector {
  long weight = 0;
  RatRowVector entries;
};

// v_i at (m1,m2) in oo(k) <-> coefficient of x^(m2-1) y^(m1-1)
HomogPoly from_vector(long k, const RatRowVector& v);
RatRowVector to_vector(long k, const HomogPoly& p);

// the Manin-style coset substitutions behind the level-N Hecke operator T_N
std::vector<Mat2> man_matrices(int level);

// T_N p = sum over man_matrices(level) of substitute(p, g)
HomogPoly hecke_tn(const HomogPoly& p, int level);

// the level-N involution-compatibility operator:
//   U_2 p = p(x,2y) + p(x+y,2y) - p(x+y,-2x)
//   U_3 p = p(x,3y) + p(x+y,3y) - p(x+y,-3x) + p(x-y,3y) - p(-x+y,-3x)
HomogPoly u_n(const HomogPoly& p, int level);

// sign s with -p(y, Nx) = s * N^((k-2)/2) * p(x,y), if one exists
std::optional<int> atkin_lehner_sign(const HomogPoly& p, int level);

// basis (canonical kernel form) of the space of restricted even polynomials
// satisfying both the level-N period relation and the eigen-sign condition
// -p(y, Nx) = sign * N^((k-2)/2) * p(x,y), all imposed after projection
std::vector<RestrictedVector> w_space_basis(int level, long k, int sign);

}  // namespace dzeta
