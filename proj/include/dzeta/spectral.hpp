#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dzeta/poly.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

// rows form a canonical basis of the left kernel of the level-1 matrix
RatMatrix bs_kernel(long k);

// dim S_k(SL_2(Z)) by the classical dimension formula, even k only
long dim_cusp_sl2(long k);

// When the kernel is stable under the level-N action, the matrix R with
// kernel.row(i) * C^N = sum_j R(i,j) * kernel.row(j); nullopt when some
// image row leaves the kernel's row space (exact membership test).
std::optional<RatMatrix> restriction_matrix(long k, int level);
bool check_invariance(long k, int level);

// charpoly of s_N * R + (1 + N^(k-1)) * I with s_2 = 2^(k-2), s_3 = 4*3^(k-2);
// throws std::domain_error when the kernel is not invariant
RatPoly hecke_charpoly(long k, int level);

// integer coefficients, all roots real, and every root inside
// [-2 N^((k-1)/2), 2 N^((k-1)/2)]; the bound is decided exactly by Sturm
// counts on the polynomial whose roots are the squares of the roots of p
bool deligne_check(const RatPoly& p, int level, long k);

// -(1 + sign * 2^(-(k-2)/2)) at level 2, -(1 + sign * 3^(-(k-2)/2))/2 at level 3
Rat newform_eigenvalue(int level, long k, int sign);

// sign -> dimension of the left eigenspace of D*C at newform_eigenvalue
std::map<int, long> newform_dims(int level, long k);

// coefficient of x^k in the generating series conjectured for the
// (level, sign) eigenspace dimensions
long conjecture_series_dim(int level, int sign, long k);

// eigenvalues of C^N counted with multiplicity inside the cluster window:
// (-5/2, -3/2] at level 2, (-7/8, -5/8] at level 3
long cluster_count(int level, long k);

struct SpectralReport {
  long weight = 0;
  int level = 0;
  long bs_dim = 0;
  long dim_cusp = 0;
  bool invariance_ok = false;
  RatPoly hecke_poly;              // constant 1 when the kernel is 0-dimensional
  bool charpoly_integer = false;
  bool deligne_ok = false;
  long cluster = 0;
  std::map<int, long> newform;     // sign -> eigenspace dimension
  std::map<int, long> conjecture;  // sign -> conjectured dimension
  bool eigen_consistent = false;

  // the proved statements only; the conjectured dimension comparison is
  // reported but deliberately not folded in here
  bool all_invariants_ok() const {
    return bs_dim == dim_cusp && invariance_ok && charpoly_integer && deligne_ok &&
           cluster == dim_cusp && eigen_consistent;
  }
};

SpectralReport build_report(long k, int level);
nlohmann::ordered_json report_to_json(const SpectralReport& r);
std::string reports_to_csv(const std::vector<SpectralReport>& reports);

}  // namespace dzeta
