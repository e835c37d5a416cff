#include "dzeta/coaction.hpp"

#include <sstream>

#include "dzeta/matrices.hpp"

namespace dzeta {

std::string RootLabel::str() const {
  if (exponent == 0) return "1";
  if (modulus == 2) return "-1";
  if (exponent == 1) return "w";
  return "w^" + std::to_string(exponent);
}

std::string ZetaSymbol::str() const {
  std::ostringstream os;
  os << "zeta(";
  for (size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i].first;
  os << "|";
  for (size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i].second.str();
  os << ")";
  return os.str();
}

void ZetaCombination::add(const ZetaSymbol& s, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ZetaCombination d_p_depth1(const ZetaSymbol& s, long p) {
  if (s.depth() != 1) throw std::invalid_argument("d_p_depth1: depth-1 symbol required");
  if (p < 1) throw std::invalid_argument("d_p_depth1: p >= 1 required");
  ZetaCombination out;
  if (s.args[0].first == p) out.add(s, Rat(1));
  return out;
}

std::vector<Dp2Term> d_p_depth2(const ZetaSymbol& s, long p) {
  if (s.depth() != 2) throw std::invalid_argument("d_p_depth2: depth-2 symbol required");
  if (p < 1) throw std::invalid_argument("d_p_depth2: p >= 1 required");
  const auto& [n1, e1] = s.args[0];
  const auto& [n2, e2] = s.args[1];
  const int n = e1.modulus;
  if (e2.modulus != n || e1 != RootLabel::primitive(n) || e2 != e1.inverse())
    throw UnsupportedSymbol("d_p_depth2: only the (eps_N, eps_N^-1) label pattern is implemented");

  // The two weight-drop summands of the general derivation formula carry the
  // condition eps_{i-1} eps_i != 1; here eps_N * eps_N^-1 = 1, so they vanish
  // and only three terms remain.
  std::vector<Dp2Term> out;
  const RootLabel one = RootLabel::one(n);
  if (p == n1)
    out.push_back({ZetaSymbol::depth1(p, e1), ZetaSymbol::depth1(n2, e2), Rat(1), "delta"});
  const long rest = n1 + n2 - p;
  if (rest > 0) {  // zeta^m(n;1) = 0 for n <= 0
    Rat c1 = Rat(binom(p - 1, p - n1)) * parity_sign(n1);
    if (c1 != 0)
      out.push_back({ZetaSymbol::depth1(p, e1.inverse()), ZetaSymbol::depth1(rest, one), c1,
                     "binom-n1"});
    Rat c2 = Rat(binom(p - 1, p - n2)) * parity_sign(p - n2);
    if (c2 != 0)
      out.push_back({ZetaSymbol::depth1(p, e1.inverse()), ZetaSymbol::depth1(rest, one), c2,
                     "binom-n2"});
  }
  return out;
}

Rat depth1_decompose(const ZetaSymbol& s, int level) {
  if (s.depth() != 1) throw std::invalid_argument("depth1_decompose: depth-1 symbol required");
  const auto& [p, eps] = s.args[0];
  if (p % 2 == 0)
    throw std::invalid_argument("depth1_decompose: even p is outside the odd-basis projection");
  if (p < 3) throw std::invalid_argument("depth1_decompose: p >= 3 required");
  if (eps.modulus != level) throw std::invalid_argument("depth1_decompose: label/level mismatch");
  if (eps.is_one()) return Rat(1);
  // at odd p the parity relation identifies the two primitive labels of
  // level 3, so one coefficient covers both
  return depth1_coeff(level, p);
}

Rat derivation_pair(int level, long p1, long p2, const ZetaCombination& comb) {
  Rat acc(0);
  for (const auto& [sym, coeff] : comb.terms()) {
    for (const Dp2Term& t : d_p_depth2(sym, p1)) {
      Rat left = depth1_decompose(t.left, level);
      const ZetaCombination second = d_p_depth1(t.right, p2);
      for (const auto& [rsym, rcoeff] : second.terms())
        acc += coeff * t.coeff * left * rcoeff * depth1_decompose(rsym, level);
    }
  }
  return acc;
}

namespace {

void require_oo(long k, const IndexPair& p, const char* what) {
  if (!(p.m1 >= 3 && p.m2 >= 3 && p.m1 % 2 == 1 && p.m2 % 2 == 1 && p.m1 + p.m2 == k))
    throw std::invalid_argument(std::string(what) + ": index pair not in oo(k)");
}

}  // namespace

Rat oracle_entry(int level, long k, const IndexPair& m, const IndexPair& n) {
  if (level < 1 || level > 3) throw std::invalid_argument("oracle_entry: level must be 1, 2 or 3");
  require_oo(k, m, "oracle_entry");
  require_oo(k, n, "oracle_entry");
  const RootLabel eps = RootLabel::primitive(level);
  ZetaCombination comb;
  comb.add(ZetaSymbol::depth2(n.m1, n.m2, eps, eps.inverse()), Rat(1));
  return derivation_pair(level, m.m1, m.m2, comb);
}

nlohmann::ordered_json oracle_expansion_json(int level, long k, const IndexPair& m,
                                             const IndexPair& n) {
  if (level < 1 || level > 3)
    throw std::invalid_argument("oracle_expansion_json: level must be 1, 2 or 3");
  require_oo(k, m, "oracle_expansion_json");
  require_oo(k, n, "oracle_expansion_json");
  const RootLabel eps = RootLabel::primitive(level);
  const ZetaSymbol sym = ZetaSymbol::depth2(n.m1, n.m2, eps, eps.inverse());

  auto symbol_json = [](const ZetaSymbol& s) {
    nlohmann::ordered_json j;
    j["n"] = nlohmann::ordered_json::array();
    j["eps"] = nlohmann::ordered_json::array();
    for (const auto& [ni, ei] : s.args) {
      j["n"].push_back(ni);
      j["eps"].push_back(ei.str());
    }
    return j;
  };

  nlohmann::ordered_json out;
  out["level"] = level;
  out["weight"] = k;
  out["m"] = {m.m1, m.m2};
  out["n"] = {n.m1, n.m2};
  out["symbol"] = symbol_json(sym);
  out["p1"] = m.m1;
  out["p2"] = m.m2;
  out["terms"] = nlohmann::ordered_json::array();

  Rat total(0);
  for (const Dp2Term& t : d_p_depth2(sym, m.m1)) {
    nlohmann::ordered_json tj;
    tj["origin"] = t.origin;
    tj["coeff"] = rat_str(t.coeff);
    tj["left"] = symbol_json(t.left);
    tj["right"] = symbol_json(t.right);
    Rat left = depth1_decompose(t.left, level);
    tj["left_coeff"] = rat_str(left);
    Rat contribution(0);
    auto stage2 = d_p_depth1(t.right, m.m2);
    tj["right_survives_p2"] = !stage2.is_zero();
    for (const auto& [rsym, rcoeff] : stage2.terms()) {
      Rat rdec = depth1_decompose(rsym, level);
      tj["right_coeff"] = rat_str(rdec);
      contribution += t.coeff * left * rcoeff * rdec;
    }
    tj["contribution"] = rat_str(contribution);
    total += contribution;
    out["terms"].push_back(std::move(tj));
  }
  out["entry"] = rat_str(total);
  out["formula_entry"] = rat_str(entry(level, k, m, n));
  out["match"] = (total == entry(level, k, m, n));
  return out;
}

}  // namespace dzeta
