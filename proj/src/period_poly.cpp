#include "dzeta/period_poly.hpp"

#include <sstream>

#include "dzeta/indexing.hpp"
#include "dzeta/linalg.hpp"

namespace dzeta {

void HomogPoly::add_term(long a, long b, const Rat& coeff) {
  if (a < 0 || b < 0 || a + b != degree_)
    throw std::invalid_argument("HomogPoly::add_term: exponents must be >= 0 and sum to degree");
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace({a, b}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rat HomogPoly::coeff(long a, long b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? Rat(0) : it->second;
}

HomogPoly HomogPoly::operator+(const HomogPoly& other) const {
  if (degree_ != other.degree_) throw std::invalid_argument("HomogPoly: degree mismatch in +");
  HomogPoly out = *this;
  for (const auto& [key, c] : other.coeffs_) out.add_term(key.first, key.second, c);
  return out;
}

HomogPoly HomogPoly::operator-(const HomogPoly& other) const {
  if (degree_ != other.degree_) throw std::invalid_argument("HomogPoly: degree mismatch in -");
  HomogPoly out = *this;
  for (const auto& [key, c] : other.coeffs_) out.add_term(key.first, key.second, -c);
  return out;
}

HomogPoly HomogPoly::operator-() const { return Rat(-1) * *this; }

HomogPoly operator*(const Rat& scalar, const HomogPoly& p) {
  HomogPoly out(p.degree());
  if (scalar == 0) return out;
  for (const auto& [key, c] : p.terms()) out.add_term(key.first, key.second, scalar * c);
  return out;
}

std::string HomogPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coeffs_) {
    os << (first ? "" : " + ") << rat_str(c) << "*x^" << key.first << "*y^" << key.second;
    first = false;
  }
  return os.str();
}

HomogPoly substitute(const HomogPoly& p, const Mat2& g) {
  HomogPoly out(p.degree());
  for (const auto& [key, c] : p.terms()) {
    const auto [a, b] = key;
    // coefficient arrays of (g00 x + g01 y)^a and (g10 x + g11 y)^b
    std::vector<Rat> u(static_cast<size_t>(a) + 1), v(static_cast<size_t>(b) + 1);
    for (long i = 0; i <= a; ++i)
      u[i] = Rat(binom(a, i)) * pow_rat(g[0][0], i) * pow_rat(g[0][1], a - i);
    for (long j = 0; j <= b; ++j)
      v[j] = Rat(binom(b, j)) * pow_rat(g[1][0], j) * pow_rat(g[1][1], b - j);
    for (long i = 0; i <= a; ++i) {
      if (u[i] == 0) continue;
      for (long j = 0; j <= b; ++j) {
        if (v[j] == 0) continue;
        out.add_term(i + j, p.degree() - i - j, c * u[i] * v[j]);
      }
    }
  }
  return out;
}

HomogPoly project_even_restricted(const HomogPoly& p, long k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("project_even_restricted: even k >= 2");
  if (p.degree() != k - 2)
    throw std::invalid_argument("project_even_restricted: polynomial must have degree k - 2");
  HomogPoly out(k - 2);
  for (const auto& [key, c] : p.terms()) {
    const auto [a, b] = key;
    if (a % 2 != 0 || b % 2 != 0) continue;
    if (a == k - 2 || b == k - 2) continue;
    out.add_term(a, b, c);
  }
  return out;
}

HomogPoly from_vector(long k, const RatRowVector& v) {
  const auto idx = totally_odd_index(k);
  if (static_cast<Index>(idx.size()) != v.cols())
    throw std::invalid_argument("from_vector: length must match the totally odd index set");
  HomogPoly p(k - 2);
  for (size_t i = 0; i < idx.size(); ++i)
    p.add_term(idx[i].m2 - 1, idx[i].m1 - 1, v(static_cast<Index>(i)));
  return p;
}

RatRowVector to_vector(long k, const HomogPoly& p) {
  if (p.degree() != k - 2)
    throw std::invalid_argument("to_vector: polynomial must have degree k - 2");
  const auto idx = totally_odd_index(k);
  RatRowVector v(static_cast<Index>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i) v(static_cast<Index>(i)) = p.coeff(idx[i].m2 - 1, idx[i].m1 - 1);
  // the index set must carry the whole support, else coordinates are lossy
  Rat mass(0), kept(0);
  for (const auto& term : p.terms()) mass += abs(term.second);
  for (Index i = 0; i < v.cols(); ++i) kept += abs(v(i));
  if (mass != kept)
    throw std::invalid_argument("to_vector: polynomial has support outside the restricted even part");
  return v;
}

namespace {

Mat2 mat2(long a, long b, long c, long d) { return {{{Rat(a), Rat(b)}, {Rat(c), Rat(d)}}}; }

void require_level_23(int level, const char* what) {
  if (level != 2 && level != 3)
    throw std::invalid_argument(std::string(what) + ": level must be 2 or 3");
}

}  // namespace

std::vector<Mat2> man_matrices(int level) {
  require_level_23(level, "man_matrices");
  if (level == 2)
    return {mat2(2, 0, 0, 1), mat2(1, 0, 0, 2), mat2(2, 0, 1, 1), mat2(1, 1, 0, 2)};
  return {mat2(3, 0, 0, 1),  mat2(1, 0, 0, 3), mat2(3, 0, 1, 1),
          mat2(3, 0, -1, 1), mat2(1, 1, 0, 3), mat2(1, -1, 0, 3)};
}

HomogPoly hecke_tn(const HomogPoly& p, int level) {
  HomogPoly out(p.degree());
  for (const Mat2& g : man_matrices(level)) out = out + substitute(p, g);
  return out;
}

HomogPoly u_n(const HomogPoly& p, int level) {
  require_level_23(level, "u_n");
  if (level == 2)
    return substitute(p, mat2(1, 0, 0, 2)) + substitute(p, mat2(1, 1, 0, 2)) -
           substitute(p, mat2(1, 1, -2, 0));
  return substitute(p, mat2(1, 0, 0, 3)) + substitute(p, mat2(1, 1, 0, 3)) -
         substitute(p, mat2(1, 1, -3, 0)) + substitute(p, mat2(1, -1, 0, 3)) -
         substitute(p, mat2(-1, 1, -3, 0));
}

std::optional<int> atkin_lehner_sign(const HomogPoly& p, int level) {
  require_level_23(level, "atkin_lehner_sign");
  if (p.is_zero()) return std::nullopt;
  if (p.degree() % 2 != 0) return std::nullopt;
  const HomogPoly lhs = -substitute(p, mat2(0, 1, level, 0));
  const Rat scale = pow_rat(static_cast<long>(level), p.degree() / 2);
  if (lhs == scale * p) return 1;
  if (lhs == (-scale) * p) return -1;
  return std::nullopt;
}

std::vector<RestrictedVector> w_space_basis(int level, long k, int sign) {
  require_level_23(level, "w_space_basis");
  if (sign != 1 && sign != -1) throw std::invalid_argument("w_space_basis: sign must be +1 or -1");
  const Index s = static_cast<Index>(totally_odd_size(k));
  if (s == 0) return {};

  const Rat al_scale = Rat(sign) * pow_rat(static_cast<long>(level), (k - 2) / 2);
  // residual of the period relation: (three or five cosets) + p itself
  auto relation_residual = [&](const HomogPoly& p) {
    HomogPoly r = -substitute(p, mat2(0, 1, 1, 0)) - substitute(p, mat2(0, 1, 1, 1)) +
                  substitute(p, mat2(1, 0, 1, 1)) + p;
    if (level == 3)
      r = r - substitute(p, mat2(0, 1, 1, -1)) + substitute(p, mat2(1, 0, 1, -1));
    return r;
  };
  auto al_residual = [&](const HomogPoly& p) {
    return -substitute(p, mat2(0, 1, level, 0)) - al_scale * p;
  };

  // unknowns: coordinates on oo(k); rows of m are the projected residual
  // coordinates of each constraint applied to the basis monomials
  RatMatrix m(2 * s, s);
  for (Index i = 0; i < s; ++i) {
    RatRowVector e = RatRowVector::Zero(s);
    e(i) = 1;
    const HomogPoly p = from_vector(k, e);
    const RatRowVector rel = to_vector(k, project_even_restricted(relation_residual(p), k));
    const RatRowVector al = to_vector(k, project_even_restricted(al_residual(p), k));
    for (Index j = 0; j < s; ++j) {
      m(j, i) = rel(j);
      m(s + j, i) = al(j);
    }
  }

  const RatMatrix kernel = right_kernel(m);
  std::vector<RestrictedVector> basis;
  basis.reserve(static_cast<size_t>(kernel.rows()));
  for (Index r = 0; r < kernel.rows(); ++r) basis.push_back({k, kernel.row(r)});
  return basis;
}

}  // namespace dzeta
