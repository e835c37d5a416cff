#include "dzeta/spectral.hpp"

#include <sstream>

#include "dzeta/indexing.hpp"
#include "dzeta/linalg.hpp"
#include "dzeta/matrices.hpp"

namespace dzeta {

namespace {

void require_level_23(int level, const char* what) {
  if (level != 2 && level != 3)
    throw std::invalid_argument(std::string(what) + ": level must be 2 or 3");
}

Rat hecke_scale(int level, long k) {
  return level == 2 ? pow_rat(2L, k - 2) : Rat(4) * pow_rat(3L, k - 2);
}

Rat hecke_shift(int level, long k) {
  return Rat(1) + pow_rat(static_cast<long>(level), k - 1);
}

RatPoly hecke_charpoly_from(const RatMatrix& r, int level, long k) {
  RatMatrix h = r * hecke_scale(level, k);
  const Rat shift = hecke_shift(level, k);
  for (Index i = 0; i < h.rows(); ++i) h(i, i) += shift;
  return charpoly(h);
}

}  // namespace

RatMatrix bs_kernel(long k) { return left_kernel(build_c(1, k)); }

long dim_cusp_sl2(long k) {
  if (k < 0 || k % 2 != 0) throw std::invalid_argument("dim_cusp_sl2: even k >= 0 required");
  if (k < 4) return 0;
  return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

std::optional<RatMatrix> restriction_matrix(long k, int level) {
  require_level_23(level, "restriction_matrix");
  const RatMatrix kernel = bs_kernel(k);
  const Index r = kernel.rows();
  if (r == 0) return RatMatrix(0, 0);

  const RatMatrix image = kernel * build_c(level, k);
  const RrefResult rr = rref(kernel);  // kernel is already canonical; need pivots
  RatMatrix restricted(r, r);
  for (Index i = 0; i < r; ++i) {
    RatRowVector residual = image.row(i);
    for (Index j = 0; j < r; ++j) {
      restricted(i, j) = image(i, rr.pivot_columns[static_cast<size_t>(j)]);
      residual -= rr.reduced.row(j) * restricted(i, j);
    }
    for (Index col = 0; col < residual.cols(); ++col)
      if (residual(col) != 0) return std::nullopt;  // image row escapes the kernel
  }
  return restricted;
}

bool check_invariance(long k, int level) { return restriction_matrix(k, level).has_value(); }

RatPoly hecke_charpoly(long k, int level) {
  auto restricted = restriction_matrix(k, level);
  if (!restricted) throw std::domain_error("hecke_charpoly: kernel is not invariant");
  return hecke_charpoly_from(*restricted, level, k);
}

bool deligne_check(const RatPoly& p, int level, long k) {
  require_level_23(level, "deligne_check");
  if (p.is_zero() || !integer_coeffs(p)) return false;
  if (p.degree() == 0) return true;  // no roots to constrain

  const RatPoly sf = squarefree_part(p);
  const Rat bound = cauchy_root_bound(p);
  if (sturm_count(p, -bound, bound) != sf.degree()) return false;  // complex root somewhere

  // q(t^2) = (-1)^deg(p) * p(t) * p(-t), so the roots of q are the squared
  // roots of p and the bound becomes the exact rational 4 N^(k-1)
  const RatPoly prod = p * p.reflect();
  std::vector<Rat> qc(static_cast<size_t>(p.degree()) + 1);
  const Rat flip(parity_sign(p.degree()));
  for (int i = 0; i <= p.degree(); ++i) qc[static_cast<size_t>(i)] = flip * prod[2 * i];
  const RatPoly q(qc);

  const Rat limit = Rat(4) * pow_rat(static_cast<long>(level), k - 1);
  const Rat qbound = cauchy_root_bound(q);
  if (limit >= qbound) return true;  // every squared root is already below the limit
  return sturm_count(q, limit, qbound) == 0;
}

Rat newform_eigenvalue(int level, long k, int sign) {
  require_level_23(level, "newform_eigenvalue");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("newform_eigenvalue: sign must be +1 or -1");
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("newform_eigenvalue: even k >= 4 required");
  const Rat off = Rat(sign) * pow_rat(static_cast<long>(level), -((k - 2) / 2));
  if (level == 2) return -(Rat(1) + off);
  return -(Rat(1) + off) / 2;
}

std::map<int, long> newform_dims(int level, long k) {
  require_level_23(level, "newform_dims");
  const RatMatrix dc = build_dc(level, k);
  std::map<int, long> dims;
  for (int sign : {+1, -1})
    dims[sign] = eigenspace_left(dc, newform_eigenvalue(level, k, sign)).rows();
  return dims;
}

long conjecture_series_dim(int level, int sign, long k) {
  require_level_23(level, "conjecture_series_dim");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("conjecture_series_dim: sign must be +1 or -1");
  if (k < 0) throw std::invalid_argument("conjecture_series_dim: k >= 0 required");

  const RatPoly one{Rat(1)};
  auto x = [](int d) { return RatPoly::monomial(d); };
  RatPoly num, den;
  if (level == 2 && sign == 1) {
    num = x(8);
    den = (one - x(6)) * (one - x(8));
  } else if (level == 2) {
    num = x(2) + x(20);
    den = (one - x(8)) * (one - x(12));
  } else if (sign == 1) {
    num = x(8);
    den = (one - x(2)) * (one - x(12));
  } else {
    num = x(6) + x(14) + x(16) - x(18);
    den = (one - x(4)) * (one - x(12));
  }
  const Rat c = series_coeffs(num, den, static_cast<int>(k))[static_cast<size_t>(k)];
  if (c.get_den() != 1) throw std::logic_error("conjecture_series_dim: non-integer coefficient");
  return c.get_num().get_si();
}

long cluster_count(int level, long k) {
  require_level_23(level, "cluster_count");
  if (totally_odd_size(k) == 0) return 0;
  RatPoly p = charpoly(build_c(level, k));
  const Rat a = level == 2 ? Rat(-5, 2) : Rat(-7, 8);
  const Rat b = level == 2 ? Rat(-3, 2) : Rat(-5, 8);
  // peel one multiplicity layer per pass so repeated eigenvalues are counted
  // as often as they occur
  long total = 0;
  while (p.degree() > 0) {
    total += sturm_count(p, a, b);
    p = poly_gcd(p, p.derivative());
  }
  return total;
}

SpectralReport build_report(long k, int level) {
  require_level_23(level, "build_report");
  SpectralReport rep;
  rep.weight = k;
  rep.level = level;

  const RatMatrix kernel = bs_kernel(k);
  rep.bs_dim = kernel.rows();
  rep.dim_cusp = dim_cusp_sl2(k);

  const auto restricted = restriction_matrix(k, level);
  rep.invariance_ok = restricted.has_value();
  if (restricted) {
    rep.hecke_poly = hecke_charpoly_from(*restricted, level, k);
    rep.charpoly_integer = integer_coeffs(rep.hecke_poly);
    rep.deligne_ok = deligne_check(rep.hecke_poly, level, k);
  } else {
    rep.hecke_poly = RatPoly{Rat(1)};
  }

  rep.cluster = cluster_count(level, k);
  if (k >= 4) {
    rep.newform = newform_dims(level, k);
  } else {
    rep.newform = {{1, 0}, {-1, 0}};
  }
  for (int sign : {+1, -1}) rep.conjecture[sign] = conjecture_series_dim(level, sign, k);

  rep.eigen_consistent = restricted.has_value();
  if (restricted && rep.bs_dim == 1) {
    // read the Hecke eigenvalue off the degree-1 charpoly and map it back;
    // the kernel row must then be an actual eigenvector of C^N
    const Rat lambda = -rep.hecke_poly[0];
    const Rat mu = (lambda - hecke_shift(level, k)) / hecke_scale(level, k);
    const RatRowVector v = kernel.row(0);
    rep.eigen_consistent = matrices_equal<Rat>(v * build_c(level, k), v * mu);
  }
  return rep;
}

nlohmann::ordered_json report_to_json(const SpectralReport& r) {
  nlohmann::ordered_json j;
  j["level"] = r.level;
  j["weight"] = r.weight;
  j["bs_dim"] = r.bs_dim;
  j["dim_cusp"] = r.dim_cusp;
  j["invariance_ok"] = r.invariance_ok;
  auto coeffs = nlohmann::ordered_json::array();
  for (const Rat& c : r.hecke_poly.coeffs()) coeffs.push_back(rat_str(c));
  j["hecke_charpoly"] = std::move(coeffs);  // lowest degree first
  j["charpoly_integer"] = r.charpoly_integer;
  j["deligne_ok"] = r.deligne_ok;
  j["cluster_count"] = r.cluster;
  j["newform_dims"] = {{"+1", r.newform.at(1)}, {"-1", r.newform.at(-1)}};
  j["conjecture_dims"] = {{"+1", r.conjecture.at(1)}, {"-1", r.conjecture.at(-1)}};
  j["eigen_consistent"] = r.eigen_consistent;
  j["all_ok"] = r.all_invariants_ok();
  return j;
}

std::string reports_to_csv(const std::vector<SpectralReport>& reports) {
  std::ostringstream os;
  os << "level,weight,bs_dim,dim_cusp,invariance_ok,charpoly_integer,deligne_ok,"
        "cluster_count,newform_plus,newform_minus,conj_plus,conj_minus,eigen_consistent\n";
  for (const SpectralReport& r : reports) {
    os << r.level << ',' << r.weight << ',' << r.bs_dim << ',' << r.dim_cusp << ','
       << int(r.invariance_ok) << ',' << int(r.charpoly_integer) << ',' << int(r.deligne_ok) << ','
       << r.cluster << ',' << r.newform.at(1) << ',' << r.newform.at(-1) << ','
       << r.conjecture.at(1) << ',' << r.conjecture.at(-1) << ',' << int(r.eigen_consistent)
       << '\n';
  }
  return os.str();
}

}  // namespace dzeta
