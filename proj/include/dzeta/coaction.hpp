#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "dzeta/indexing.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

// raised when a depth-2 symbol does not carry the (eps_N, eps_N^-1) label
// pattern: anything else is outside the implemented derivation formula
struct UnsupportedSymbol : std::domain_error {
  using std::domain_error::domain_error;
};

// formal N-th root of unity e^(2 pi i exponent / N); never a complex float
struct RootLabel {
  int modulus = 1;   // N
  int exponent = 0;  // reduced to {0,...,N-1}

  static RootLabel one(int n) { return {n, 0}; }
  static RootLabel primitive(int n) { return {n, n == 1 ? 0 : 1}; }
  RootLabel inverse() const { return {modulus, exponent == 0 ? 0 : modulus - exponent}; }
  bool is_one() const { return exponent == 0; }
  bool operator==(const RootLabel&) const = default;
  auto operator<=>(const RootLabel&) const = default;
  std::string str() const;
};

// zeta^m(n1,...,nr; eps_1,...,eps_r) at depth r in {1,2}
struct ZetaSymbol {
  std::vector<std::pair<long, RootLabel>> args;

  static ZetaSymbol depth1(long n, RootLabel eps) { return {{{n, eps}}}; }
  static ZetaSymbol depth2(long n1, long n2, RootLabel e1, RootLabel e2) {
    return {{{n1, e1}, {n2, e2}}};
  }
  int depth() const { return static_cast<int>(args.size()); }
  bool operator==(const ZetaSymbol&) const = default;
  auto operator<=>(const ZetaSymbol&) const = default;
  std::string str() const;
};

// formal rational linear combination; zero coefficients are never stored
class ZetaCombination {
 public:
  ZetaCombination() = default;
  void add(const ZetaSymbol& s, const Rat& coeff);
  const std::map<ZetaSymbol, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

 private:
  std::map<ZetaSymbol, Rat> terms_;
};

// one tensor term of the depth-2 expansion: coeff * zeta^l(left) (x) zeta^m(right)
struct Dp2Term {
  ZetaSymbol left;
  ZetaSymbol right;
  Rat coeff;
  std::string origin;  // which of the three summands produced it
};

// D_p at depth 1: delta_{p=n} zeta^l(p; eps)
ZetaCombination d_p_depth1(const ZetaSymbol& s, long p);

// D_p at depth 2 for the pattern zeta^m(n1,n2; eps_N, eps_N^-1): the
// three-term expansion; terms with a vanishing coefficient or with right
// factor zeta^m(n;1), n <= 0 are dropped
std::vector<Dp2Term> d_p_depth2(const ZetaSymbol& s, long p);

// coefficient c_{1,eps,p} of the basis element zeta^l(p;1) in the
// decomposition of zeta^l(p;eps); odd p only
Rat depth1_decompose(const ZetaSymbol& s, int level);

// composition of the two derivations (p = p1, then p = p2 on the right
// factors) applied to a combination of depth-2 symbols, projected onto the
// depth-1 odd basis; linear in the combination by construction
Rat derivation_pair(int level, long p1, long p2, const ZetaCombination& comb);

// independent recomputation of a matrix entry as the composition
// of the two derivations with p = m1 then p = m2
Rat oracle_entry(int level, long k, const IndexPair& m, const IndexPair& n);

// auditable term-by-term dump of the expansion behind oracle_entry
nlohmann::ordered_json oracle_expansion_json(int level, long k, const IndexPair& m,
                                             const IndexPair& n);

}  // namespace dzeta
