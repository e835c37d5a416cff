#include <doctest.h>

#include "dzeta/spectral.hpp"

using namespace dzeta;

TEST_CASE("bs_kernel dimensions at small weights") {
  CHECK(bs_kernel(10).rows() == 0);
  CHECK(bs_kernel(12).rows() == 1);
  CHECK(bs_kernel(14).rows() == 0);
  CHECK(bs_kernel(16).rows() == 1);
  CHECK(bs_kernel(24).rows() == 2);
  CHECK(bs_kernel(26).rows() == 1);
}

TEST_CASE("dim_cusp_sl2 agrees with the classical table") {
  CHECK(dim_cusp_sl2(4) == 0);
  CHECK(dim_cusp_sl2(10) == 0);
  CHECK(dim_cusp_sl2(12) == 1);
  CHECK(dim_cusp_sl2(14) == 0);
  CHECK(dim_cusp_sl2(16) == 1);
  CHECK(dim_cusp_sl2(24) == 2);
  CHECK(dim_cusp_sl2(26) == 1);
  CHECK(dim_cusp_sl2(2) == 0);
  CHECK_THROWS_AS(dim_cusp_sl2(11), std::invalid_argument);
}

TEST_CASE("kernel invariance under the level action") {
  CHECK(check_invariance(12, 2));
  CHECK(check_invariance(12, 3));
  CHECK(check_invariance(24, 2));
  CHECK(check_invariance(24, 3));
  CHECK(check_invariance(10, 2));  // vacuous: kernel is 0-dimensional
}

TEST_CASE("Hecke characteristic polynomials at weight 12 and on empty kernels") {
  // lambda_2 = -24, lambda_3 = 252
  CHECK(hecke_charpoly(12, 2) == RatPoly{Rat(24), Rat(1)});
  CHECK(hecke_charpoly(12, 3) == RatPoly{Rat(-252), Rat(1)});
  CHECK(hecke_charpoly(10, 2) == RatPoly{Rat(1)});
  CHECK(hecke_charpoly(10, 3) == RatPoly{Rat(1)});
}

TEST_CASE("Hecke charpoly is integral and within the bound for small weights") {
  for (long k : {12L, 16L, 18L, 20L, 22L, 24L, 26L}) {
    for (int level : {2, 3}) {
      const RatPoly p = hecke_charpoly(k, level);
      CHECK(integer_coeffs(p));
      CHECK(deligne_check(p, level, k));
    }
  }
}

TEST_CASE("deligne_check rejects out-of-bound and complex roots") {
  // t^2 + 1 has no real roots
  CHECK_FALSE(deligne_check(RatPoly{Rat(1), Rat(0), Rat(1)}, 2, 12));
  // root far outside 2 * 2^(11/2)
  CHECK_FALSE(deligne_check(RatPoly{Rat(-1000000), Rat(1)}, 2, 12));
  // non-integer coefficient
  CHECK_FALSE(deligne_check(RatPoly{make_rat(1, 2), Rat(1)}, 2, 12));
  // a root exactly at the bound is accepted: t^2 - 4*2^11
  CHECK(deligne_check(RatPoly{Rat(-8192), Rat(0), Rat(1)}, 2, 12));
}

TEST_CASE("newform eigenvalues at weight 10") {
  CHECK(newform_eigenvalue(2, 10, -1) == make_rat(-15, 16));
  CHECK(newform_eigenvalue(2, 10, 1) == make_rat(-17, 16));
  CHECK(newform_eigenvalue(3, 10, -1) == make_rat(-40, 81));
  CHECK(newform_eigenvalue(3, 10, 1) == make_rat(-41, 81));
  CHECK(newform_eigenvalue(2, 6, -1) == make_rat(-3, 4));
}

TEST_CASE("newform eigenspace dimensions at weight 10") {
  const auto d2 = newform_dims(2, 10);
  CHECK(d2.at(1) == 0);
  CHECK(d2.at(-1) == 1);
  const auto d3 = newform_dims(3, 10);
  CHECK(d3.at(1) == 1);
  CHECK(d3.at(-1) == 1);
}

TEST_CASE("conjectured dimension series") {
  CHECK(conjecture_series_dim(2, 1, 8) == 1);
  CHECK(conjecture_series_dim(2, 1, 6) == 0);
  CHECK(conjecture_series_dim(2, -1, 10) == 1);
  CHECK(conjecture_series_dim(2, -1, 6) == 0);
  CHECK(conjecture_series_dim(3, 1, 8) == 1);
  CHECK(conjecture_series_dim(3, -1, 6) == 1);
  CHECK(conjecture_series_dim(3, -1, 10) == 1);
}

TEST_CASE("cluster counts follow the cusp dimension at small weights") {
  for (int level : {2, 3}) {
    CHECK(cluster_count(level, 10) == 0);
    CHECK(cluster_count(level, 12) == 1);
    CHECK(cluster_count(level, 14) == 0);
    CHECK(cluster_count(level, 24) == 2);
  }
}

TEST_CASE("spectral report: shape and consistency at weight 12") {
  const SpectralReport r = build_report(12, 2);
  CHECK(r.bs_dim == 1);
  CHECK(r.dim_cusp == 1);
  CHECK(r.invariance_ok);
  CHECK(r.charpoly_integer);
  CHECK(r.deligne_ok);
  CHECK(r.cluster == 1);
  CHECK(r.eigen_consistent);
  CHECK(r.all_invariants_ok());

  const auto j = report_to_json(r);
  CHECK(j.at("level") == 2);
  CHECK(j.at("weight") == 12);
  CHECK(j.at("hecke_charpoly").at(0).get<std::string>() == "24");
  CHECK(j.at("all_ok").get<bool>());

  const std::string csv = reports_to_csv({r});
  CHECK(csv.find("2,12,1,1,1,1,1,1,") != std::string::npos);
}

TEST_CASE("restriction matrix entries at weight 12") {
  const auto r2 = restriction_matrix(12, 2);
  REQUIRE(r2.has_value());
  REQUIRE(r2->rows() == 1);
  // lambda = s_2 * mu + (1 + 2^11)  =>  mu = (-24 - 2049) / 1024
  CHECK((*r2)(0, 0) == make_rat(-2073, 1024));

  const auto r3 = restriction_matrix(12, 3);
  REQUIRE(r3.has_value());
  CHECK((*r3)(0, 0) == make_rat(-44224, 59049));
}
