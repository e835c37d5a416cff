// acceptance suite: each criterion prints exactly one pass/fail line and the
// binary exits 0 only if every selected criterion passed; run a single one
// with --criterion N
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dzeta/coaction.hpp"
#include "dzeta/linalg.hpp"
#include "dzeta/matrices.hpp"
#include "dzeta/period_poly.hpp"
#include "dzeta/spectral.hpp"

using namespace dzeta;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

RatMatrix golden(const std::vector<std::vector<const char*>>& rows) {
  RatMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = parse_rat(rows[i][j]);
  return m;
}

bool same(const RatMatrix& a, const RatMatrix& b, std::string& why, const char* label) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    why = std::string(label) + ": shape mismatch";
    return false;
  }
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) {
        why = std::string(label) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
              "): " + rat_str(a(i, j)) + " vs " + rat_str(b(i, j));
        return false;
      }
  return true;
}

// 1. golden matrices at weights 12 and 10
Outcome criterion1() {
  std::string why;
  if (!same(build_c(2, 12),
            golden({{"6885/256", "5355/128", "-5355/128", "-26775/1024"},
                    {"945/64", "441/32", "-13167/1024", "-945/64"},
                    {"45/8", "1905/1024", "-15/16", "-45/8"},
                    {"1533/1024", "0", "0", "-3/4"}}),
            why, "C level 2 k=12"))
    return {false, why};
  if (!same(build_c(3, 12),
            golden({{"3280/243", "45920/2187", "-45920/2187", "-783920/59049"},
                    {"1820/243", "5096/729", "-398216/59049", "-1820/243"},
                    {"80/27", "43720/59049", "-40/81", "-80/27"},
                    {"39364/59049", "0", "0", "-4/9"}}),
            why, "C level 3 k=12"))
    return {false, why};
  if (!same(build_dc(2, 10),
            golden({{"-14", "0", "53/4"}, {"-6", "-15/16", "6"}, {"-127/64", "0", "1"}}), why,
            "D*C level 2 k=10"))
    return {false, why};
  if (!same(build_dc(3, 10),
            golden({{"-14", "0", "122/9"}, {"-6", "-40/81", "6"}, {"-1093/729", "0", "1"}}), why,
            "D*C level 3 k=10"))
    return {false, why};
  return {true, "4 golden matrices reproduced entry-for-entry"};
}

// 2. the five eigenvector identities
Outcome criterion2() {
  struct Case {
    RatMatrix m;
    std::vector<const char*> v;
    const char* mu;
    const char* label;
  };
  const std::vector<Case> cases = {
      {build_c(2, 12), {"1", "-3", "3", "-1"}, "-2073/1024", "C level 2 k=12"},
      {build_c(3, 12), {"1", "-3", "3", "-1"}, "-44224/59049", "C level 3 k=12"},
      {build_dc(2, 10), {"2", "-7", "8"}, "-15/16", "D*C level 2 k=10"},
      {build_dc(3, 10), {"2", "-9", "18"}, "-40/81", "D*C level 3 k=10"},
      {build_dc(3, 10), {"1", "0", "-9"}, "-41/81", "D*C level 3 k=10"}};
  for (const Case& c : cases) {
    RatRowVector v(static_cast<Index>(c.v.size()));
    for (size_t i = 0; i < c.v.size(); ++i) v(static_cast<Index>(i)) = parse_rat(c.v[i]);
    const Rat mu = parse_rat(c.mu);
    if (!matrices_equal<Rat>(v * c.m, v * mu))
      return {false, std::string(c.label) + ": v * M != " + c.mu + " * v"};
  }
  return {true, "5 eigen identities hold exactly"};
}

// 3. Hecke eigenvalues recovered through the change of variable
Outcome criterion3() {
  const RatPoly p2 = hecke_charpoly(12, 2);
  if (!(p2 == RatPoly{Rat(24), Rat(1)}))
    return {false, "level 2: charpoly is " + p2.str() + ", expected t + 24"};
  const RatPoly p3 = hecke_charpoly(12, 3);
  if (!(p3 == RatPoly{Rat(-252), Rat(1)}))
    return {false, "level 3: charpoly is " + p3.str() + ", expected t - 252"};
  return {true, "lambda_2 = -24 and lambda_3 = 252 at k = 12"};
}

// 4. oracle equals the closed formula, every pair, k <= 40
Outcome criterion4() {
  long checked = 0;
  for (long k = 6; k <= 40; k += 2) {
    const auto idx = totally_odd_index(k);
    for (int level : {2, 3})
      for (const IndexPair& m : idx)
        for (const IndexPair& n : idx) {
          if (oracle_entry(level, k, m, n) != entry(level, k, m, n)) {
            std::ostringstream os;
            os << "level " << level << " k " << k << " m (" << m.m1 << "," << m.m2 << ") n ("
               << n.m1 << "," << n.m2 << ")";
            return {false, os.str()};
          }
          ++checked;
        }
  }
  return {true, std::to_string(checked) + " entries agree with the coaction oracle"};
}

// 5. kernel dimension equals dim S_k(SL_2(Z)) up to weight 60
Outcome criterion5() {
  for (long k = 6; k <= 60; k += 2) {
    const long got = bs_kernel(k).rows();
    const long want = dim_cusp_sl2(k);
    if (got != want)
      return {false, "k = " + std::to_string(k) + ": kernel dim " + std::to_string(got) +
                         ", cusp dim " + std::to_string(want)};
  }
  return {true, "kernel dimension matches the cusp dimension for k = 6..60"};
}

// 6. the level-2 decomposition identity up to weight 40
Outcome criterion6() {
  for (long k = 6; k <= 40; k += 2)
    if (!decomposition_check(k)) return {false, "identity fails at k = " + std::to_string(k)};
  return {true, "C^2 decomposition holds for k = 6..40"};
}

// 7. invariance, integrality, realness and the eigenvalue bound, k <= 40
Outcome criterion7() {
  long polys = 0;
  for (long k = 6; k <= 40; k += 2)
    for (int level : {2, 3}) {
      const auto restricted = restriction_matrix(k, level);
      if (!restricted)
        return {false, "kernel not invariant at k = " + std::to_string(k) + ", level " +
                           std::to_string(level)};
      const RatPoly p = hecke_charpoly(k, level);
      if (!integer_coeffs(p))
        return {false, "non-integer charpoly at k = " + std::to_string(k) + ", level " +
                           std::to_string(level)};
      if (!deligne_check(p, level, k))
        return {false, "root check fails at k = " + std::to_string(k) + ", level " +
                           std::to_string(level)};
      ++polys;
    }
  return {true, std::to_string(polys) + " charpolys integral, real-rooted and inside the bound"};
}

// 8. eigenvalue clustering, k <= 60
Outcome criterion8() {
  for (long k = 6; k <= 60; k += 2)
    for (int level : {2, 3}) {
      const long got = cluster_count(level, k);
      const long want = dim_cusp_sl2(k);
      if (got != want)
        return {false, "k = " + std::to_string(k) + ", level " + std::to_string(level) + ": " +
                           std::to_string(got) + " eigenvalues in the window, expected " +
                           std::to_string(want)};
    }
  return {true, "cluster counts equal the cusp dimension for k = 6..60"};
}

// 9. three-way dimension comparison, k <= 50; any discrepancy is a finding
Outcome criterion9() {
  long findings = 0, points = 0;
  for (long k = 6; k <= 50; k += 2)
    for (int level : {2, 3}) {
      const auto dims = newform_dims(level, k);
      for (int sign : {+1, -1}) {
        const long eig = dims.at(sign);
        const long series = conjecture_series_dim(level, sign, k);
        const long wdim = static_cast<long>(w_space_basis(level, k, sign).size());
        ++points;
        if (eig != series || series != wdim) {
          ++findings;
          std::cout << "FINDING: level=" << level << " k=" << k << " sign=" << sign
                    << " eigenspace=" << eig << " series=" << series << " wspace=" << wdim
                    << "\n";
        }
      }
    }
  if (findings > 0)
    return {false, std::to_string(findings) + " of " + std::to_string(points) +
                       " dimension triples disagree (reported above)"};
  return {true, std::to_string(points) + " dimension triples agree"};
}

// 10. operator-level checks: boundary eigenvalue and the U_N identities
Outcome criterion10() {
  for (long k = 6; k <= 30; k += 2)
    for (int level : {2, 3}) {
      HomogPoly boundary(k - 2);
      boundary.add_term(k - 2, 0, Rat(1));
      boundary.add_term(0, k - 2, Rat(-1));
      const Rat ev = Rat(1) + pow_rat(static_cast<long>(level), k - 1);
      if (!(hecke_tn(boundary, level) == ev * boundary))
        return {false, "boundary eigenvalue fails at k = " + std::to_string(k) + ", level " +
                           std::to_string(level)};
    }

  struct Case {
    int level;
    std::vector<long> v;
  };
  for (const Case& c :
       {Case{2, {2, -7, 8}}, Case{3, {2, -9, 18}}, Case{3, {1, 0, -9}}}) {
    RatRowVector v(static_cast<Index>(c.v.size()));
    for (size_t i = 0; i < c.v.size(); ++i) v(static_cast<Index>(i)) = Rat(c.v[i]);
    const HomogPoly p = from_vector(10, v);
    const auto sign = atkin_lehner_sign(p, c.level);
    if (!sign) return {false, "no eigen-sign for a worked-example vector"};
    const Rat scale = Rat(-*sign) * pow_rat(static_cast<long>(c.level), 4);
    if (!(project_even_restricted(u_n(p, c.level), 10) == scale * p))
      return {false, "U_N identity fails on a worked-example vector (level " +
                         std::to_string(c.level) + ")"};
  }
  return {true, "boundary Hecke eigenvalues for k = 6..30 and the three U_N identities hold"};
}

struct Criterion {
  int number;
  Outcome (*run)();
  double budget_seconds;  // 0 = no explicit budget
};

const std::vector<Criterion> kCriteria = {
    {1, criterion1, 1.0},  {2, criterion2, 0.0},   {3, criterion3, 0.0}, {4, criterion4, 30.0},
    {5, criterion5, 0.0},  {6, criterion6, 0.0},   {7, criterion7, 120.0},
    {8, criterion8, 0.0},  {9, criterion9, 0.0},   {10, criterion10, 0.0}};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only != 0 && (only < 1 || only > 10)) {
    std::cerr << "criterion number must be 1..10\n";
    return 2;
  }

  bool all_pass = true;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (outcome.pass && c.budget_seconds > 0 && dt > c.budget_seconds) {
      outcome.pass = false;
      outcome.detail += " — but exceeded the " + std::to_string(c.budget_seconds) + "s budget";
    }
    std::ostringstream line;
    line << "criterion " << c.number << ": " << (outcome.pass ? "PASS" : "FAIL") << " — "
         << outcome.detail << " (" << std::fixed << std::setprecision(2) << dt << "s)";
    std::cout << line.str() << "\n";
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
