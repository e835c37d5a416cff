#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "dzeta/indexing.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

// c_{1,eps_N,p}: 1 at level 1, 2^(1-p)-1 at level 2, (3^(1-p)-1)/2 at level 3
Rat depth1_coeff(int level, long p);

// e-term of the entry formula:
// (-1)^n1 binom(m1-1, m1-n1) + (-1)^(m1-n2) binom(m1-1, m1-n2)
Rat entry_e(const IndexPair& m, const IndexPair& n);

// closed-form entry: c_{1,eps,m1} * ( delta(m,n) c_{1,eps,m2} + e(m,n) );
// m and n must both lie in oo(k)
Rat entry(int level, long k, const IndexPair& m, const IndexPair& n);

// rows indexed by oo(k), columns by oo'(k); delta hits land on the
// anti-diagonal. Left action convention throughout: v * C = mu * v.
RatMatrix build_c(int level, long k);

// diagonal 1/c_{1,eps_N,m1}; levels 2 and 3 only
RatMatrix build_d(int level, long k);

// D*C, computed both as the matrix product and from the direct entry
// formula delta(m,n) c_{1,eps,m2} + e(m,n); throws if the two disagree
RatMatrix build_dc(int level, long k);

// verifies C^2 = -A - B + C - C^1 + (2 + 2^(2-k)) J entrywise, where
// A = 2^(1-m1) delta, B = 2^(1-m2) delta, C = 2^(1-m1) e, J = exchange
bool decomposition_check(long k);

struct MatrixBundle {
  int level = 0;
  long weight = 0;
  RatMatrix c;
  RatMatrix d;   // 0x0 at level 1
  RatMatrix dc;  // 0x0 at level 1
  std::vector<IndexPair> index;
};

inline bool operator==(const MatrixBundle& a, const MatrixBundle& b) {
  return a.level == b.level && a.weight == b.weight && a.index == b.index &&
         matrices_equal(a.c, b.c) && matrices_equal(a.d, b.d) && matrices_equal(a.dc, b.dc);
}

MatrixBundle build_bundle(int level, long k);

nlohmann::ordered_json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

// {"level":2,"weight":12,"c":[["6885/256",...],...],"d":[...],"dc":[...],
//  "index":[[9,3],...]}; "d"/"dc" are omitted at level 1
nlohmann::ordered_json bundle_to_json(const MatrixBundle& b);
MatrixBundle bundle_from_json(const nlohmann::json& j);

// "part,i,j,value" rows for each requested part
std::string bundle_to_csv(const MatrixBundle& b, const std::vector<std::string>& parts);

}  // namespace dzeta
