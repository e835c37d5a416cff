#include "dzeta/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dzeta {

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::monomial(int deg, const Rat& coeff) {
  if (deg < 0) throw std::invalid_argument("monomial: negative degree");
  if (coeff == 0) return RatPoly();
  std::vector<Rat> c(static_cast<size_t>(deg) + 1, Rat(0));
  c.back() = coeff;
  return RatPoly(std::move(c));
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rat& s) const {
  if (s == 0) return RatPoly();
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::reflect() const {
  std::vector<Rat> c(c_);
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return RatPoly(std::move(c));
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = (*this)[i];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Rat mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

PolyDivResult poly_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
  std::vector<Rat> rem(a.coeffs());
  const int db = b.degree();
  const Rat& lead = b[db];
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rat> quo(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    Rat& ri = rem[static_cast<size_t>(i)];
    if (ri == 0) continue;
    Rat q = ri / lead;
    quo[static_cast<size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= q * b[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

namespace {

// scale by a positive rational to a primitive integer polynomial;
// positive scaling keeps every sign evaluation intact
RatPoly primitive_scale(const RatPoly& p) {
  if (p.is_zero()) return p;
  Int den_lcm = 1, num_gcd = 0;
  for (const Rat& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat scale = Rat(den_lcm) / Rat(num_gcd);  // num_gcd > 0 by mpz_gcd convention
  return p * scale;
}

}  // namespace

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly f = primitive_scale(a), g = primitive_scale(b);
  while (!g.is_zero()) {
    RatPoly r = primitive_scale(poly_divmod(f, g).remainder);
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return f[f.degree()] > 0 ? f : -f;
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (p.degree() == 0) return RatPoly{Rat(1)};
  RatPoly g = poly_gcd(p, p.derivative());
  auto [q, r] = poly_divmod(p, g);
  if (!r.is_zero()) throw std::logic_error("squarefree_part: non-exact division");
  return q;
}

Rat cauchy_root_bound(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
  const int d = p.degree();
  Rat lead = abs(p[d]);
  Rat m(0);
  for (int i = 0; i < d; ++i) {
    Rat v = abs(p[i]) / lead;
    if (v > m) m = v;
  }
  return 1 + m;
}

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// sign variations at x with zeros dropped; right-continuous in x, which is
// what makes V(a) - V(b) count roots in the half-open interval (a, b]
int variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
  int count = 0, prev = 0;
  for (const RatPoly& f : chain) {
    int s = sign_of(f.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_count(const RatPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (!(a < b)) throw std::invalid_argument("sturm_count: need a < b");
  RatPoly f = squarefree_part(p);
  if (f.degree() == 0) return 0;

  std::vector<RatPoly> chain;
  chain.push_back(primitive_scale(f));
  chain.push_back(primitive_scale(f.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly r = poly_divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(primitive_scale(-r));
  }
  return variations_at(chain, a) - variations_at(chain, b);
}

std::vector<Rat> series_coeffs(const RatPoly& num, const RatPoly& den, int n) {
  if (n < 0) throw std::invalid_argument("series_coeffs: negative order");
  if (den[0] == 0) throw std::invalid_argument("series_coeffs: denominator has zero constant term");
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  for (int j = 0; j <= n; ++j) {
    Rat acc = num[j];
    for (int i = 1; i <= j; ++i) acc -= den[i] * c[static_cast<size_t>(j - i)];
    c[static_cast<size_t>(j)] = acc / den[0];
  }
  return c;
}

bool integer_coeffs(const RatPoly& p) {
  for (const Rat& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

}  // namespace dzeta
