// Copyright 2026 The stieltjes-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <string>

#include "doctest.h"
#include "oracle_values.hpp"
#include "stieltjes/cfstats.hpp"
#include "stieltjes/errors.hpp"
#include "test_util.hpp"

using namespace stieltjes;
using testutil::agree_digits;
using testutil::ref;

namespace {
ContinuedFraction make_cf(long a0, std::initializer_list<long> qs) {
  ContinuedFraction cf;
  cf.a0 = a0;
  for (long q : qs) cf.quotients.emplace_back(q);
  cf.source_acc = 50;
  return cf;
}

ContinuedFraction random_cf(unsigned seed, long digits) {
  BigReal r = BigReal::from_decimal("0." + testutil::random_digits(seed, digits),
                                    digits + 60, digits);
  return contfrac(r);
}
}  // namespace

TEST_CASE("geometric-mean limit constant to frozen digits") {
  BigReal k = khinchin_constant(30);
  CHECK(agree_digits(k, ref(oracle::kKhinchin_30), 28));
  CHECK(k.to_decimal(10) == oracle::kKhinchin_10);
  CHECK(khinchin_constant(4).to_decimal(4) == oracle::kKhinchin_4);
}

TEST_CASE("denominator-growth limit constant to frozen digits") {
  BigReal l = levy_constant(30);
  CHECK(agree_digits(l, ref(oracle::kLevy_30), 28));
  CHECK(l.to_decimal(16) == oracle::kLevy_16);
  // ln L * 12 ln 2 = pi^2
  BigReal lnl = log(levy_constant(45));
  BigReal lhs = lnl * BigReal::from_long(12, 160) *
                log(BigReal::from_long(2, 160));
  BigReal pi2 = BigReal::pi(160) * BigReal::pi(160);
  CHECK(agree_digits(lhs, pi2, 40));
}

TEST_CASE("running geometric mean on a hand-checked sequence") {
  ContinuedFraction cf = make_cf(0, {1, 2, 2, 4});
  RunningSeries ks = running_geomean(cf);
  REQUIRE(ks.size() == 4);
  CHECK(ks.values[0] == doctest::Approx(1.0));
  CHECK(ks.values[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(ks.values[2] == doctest::Approx(std::cbrt(4.0)));
  CHECK(ks.values[3] == doctest::Approx(2.0));
}

TEST_CASE("running root of denominators on a hand-checked sequence") {
  // [0; 1, 2, 2, 4] has denominators 1, 3, 7, 31.
  ContinuedFraction cf = make_cf(0, {1, 2, 2, 4});
  RunningSeries ls = running_levy(convergents(cf));
  REQUIRE(ls.size() == 4);
  CHECK(ls.values[0] == doctest::Approx(1.0));
  CHECK(ls.values[1] == doctest::Approx(std::sqrt(3.0)));
  CHECK(ls.values[2] == doctest::Approx(std::cbrt(7.0)));
  CHECK(ls.values[3] == doctest::Approx(std::pow(31.0, 0.25)));
}

TEST_CASE("sign changes and closest approach on a hand-checked series") {
  ContinuedFraction cf = make_cf(0, {1, 2, 2, 4});
  RunningSeries ks = running_geomean(cf);
  ks.m_start = 1;
  BigReal target = BigReal::from_decimal("1.5", 64);
  // values 1, 1.414.., 1.587.., 2 cross 1.5 exactly once
  CHECK(sign_changes(ks, target) == 1);
  auto [m, v] = closest_approach(ks, target);
  CHECK(m == 2);
  CHECK(v == doctest::Approx(std::sqrt(2.0)));
  // a late m_start restricts the scanned range
  ks.m_start = 3;
  CHECK(sign_changes(ks, target) == 0);
  auto [m2, v2] = closest_approach(ks, target);
  CHECK(m2 == 3);
  CHECK(v2 == doctest::Approx(std::cbrt(4.0)));
}

TEST_CASE("histogram counts quotients and overflow tail") {
  ContinuedFraction cf = make_cf(0, {1, 2, 2, 4, 100});
  GaussKuzminHist h = gauss_kuzmin_hist(cf, 3);
  CHECK(h.total == 5);
  CHECK(h.counts[0] == 1);
  CHECK(h.counts[1] == 2);
  CHECK(h.counts[2] == 0);
  CHECK(h.tail == 2);
  CHECK(h.empirical(1) == doctest::Approx(0.2));
  CHECK(h.empirical(2) == doctest::Approx(0.4));
  CHECK(h.tail_empirical() == doctest::Approx(0.4));

  GaussKuzminHist sum;
  sum.k_max = 3;
  sum.counts.assign(3, 0);
  sum += h;
  sum += h;
  CHECK(sum.total == 10);
  CHECK(sum.counts[1] == 4);

  GaussKuzminHist other;
  other.k_max = 5;
  other.counts.assign(5, 0);
  CHECK_THROWS_AS(sum += other, ConfigError);
}

TEST_CASE("density telescopes to one") {
  for (long cap : {10L, 100L, 1000L}) {
    double s = 0.0;
    for (long k = 1; k <= cap; ++k) s += gauss_kuzmin_density(k);
    s += std::log2(1.0 + 1.0 / (static_cast<double>(cap) + 1.0));
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(gauss_kuzmin_density(1) == doctest::Approx(oracle::kGaussKuzminD1));
  CHECK(gauss_kuzmin_density(2) == doctest::Approx(oracle::kGaussKuzminD2));
}

TEST_CASE("report fields match independent recomputation") {
  ContinuedFraction cf = random_cf(7, 1200);
  CFStatsReport r = cf_stats(cf, 10, 100);
  CHECK(r.l == cf.size());

  long double lnsum = 0.0L, lg10 = 0.0L, mx = 0.0L;
  for (const auto& a : cf.quotients) {
    double ad = a.get_d();
    lnsum += std::log(static_cast<long double>(ad));
    long double l10 = std::log10(static_cast<long double>(ad));
    lg10 += l10;
    if (l10 > mx) mx = l10;
  }
  double kf = static_cast<double>(
      std::exp(lnsum / static_cast<long double>(cf.size())));
  CHECK(r.k_final == doctest::Approx(kf).epsilon(1e-9));
  CHECK(r.log10_product == doctest::Approx(static_cast<double>(lg10)));
  CHECK(r.max_quotient_log10 == doctest::Approx(static_cast<double>(mx)));
  CHECK(r.gk.total == cf.size());
  long in_bins = r.gk.tail;
  for (long c : r.gk.counts) in_bins += c;
  CHECK(in_bins == r.gk.total);
}

TEST_CASE("a long generic real approaches the limiting statistics") {
  ContinuedFraction cf = random_cf(41, 3000);
  CHECK(cf.size() > 2500);
  CFStatsReport r = cf_stats(cf, 10, 100);
  CHECK(std::fabs(r.k_final - 2.685452) < 0.3);
  CHECK(std::fabs(r.l_final - 3.275823) < 0.4);
  CHECK(std::fabs(r.gk.empirical(1) - oracle::kGaussKuzminD1) < 0.05);
  CHECK(std::fabs(r.gk.empirical(2) - oracle::kGaussKuzminD2) < 0.05);
  CHECK(r.s_k > 0);
  CHECK(r.k_closest_m >= 100);
  CHECK(std::fabs(r.k_closest - 2.685452) <
        std::fabs(r.k_final - 2.685452) + 1e-8);
}

TEST_CASE("an all-twos expansion pins the degenerate statistics") {
  ContinuedFraction cf = make_cf(1, {});
  for (int i = 0; i < 650; ++i) cf.quotients.emplace_back(2);
  CFStatsReport r = cf_stats(cf, 10, 100);
  CHECK(r.k_final == doctest::Approx(2.0));
  // denominators grow like the silver ratio 1 + sqrt(2)
  CHECK(r.l_final == doctest::Approx(2.41421356).epsilon(1e-3));
  CHECK(r.s_k == 0);
  CHECK(r.log10_product == doctest::Approx(650.0 * std::log10(2.0)));
  CHECK(r.max_quotient_log10 == doctest::Approx(std::log10(2.0)));
  CHECK(r.gk.empirical(2) == doctest::Approx(1.0));
}

TEST_CASE("stats records round-trip with full field fidelity") {
  testutil::TempDir dir("statio");
  CFStatsReport r = cf_stats(random_cf(11, 900), 10, 100);
  std::string p = (dir.path() / "s.json").string();
  save_cf_stats(r, 42L, p);
  std::string id;
  CFStatsReport b = load_cf_stats(p, &id);
  CHECK(id == "42");
  CHECK(b.l == r.l);
  CHECK(b.k_final == r.k_final);
  CHECK(b.s_k == r.s_k);
  CHECK(b.k_closest_m == r.k_closest_m);
  CHECK(b.k_closest == r.k_closest);
  CHECK(b.l_final == r.l_final);
  CHECK(b.s_l == r.s_l);
  CHECK(b.l_closest_m == r.l_closest_m);
  CHECK(b.l_closest == r.l_closest);
  CHECK(b.log10_product == r.log10_product);
  CHECK(b.max_quotient_log10 == r.max_quotient_log10);
  CHECK(b.gk.k_max == r.gk.k_max);
  CHECK(b.gk.total == r.gk.total);
  CHECK(b.gk.tail == r.gk.tail);
  CHECK(b.gk.counts == r.gk.counts);

  save_cf_stats(r, std::string("probe"), p);
  load_cf_stats(p, &id);
  CHECK(id == "probe");
}

TEST_CASE("malformed stats records are rejected") {
  testutil::TempDir dir("statbad");
  std::string p = (dir.path() / "bad.json").string();
  auto write = [&](const std::string& text) {
    std::ofstream f(p);
    f << text;
  };
  write("{}");
  CHECK_THROWS_AS(load_cf_stats(p), CacheCorrupt);
  write("{\"n\":1,\"l\":5,\"gk\":{\"k_max\":3,\"total\":5,\"tail\":0,"
        "\"counts\":[1,2]}}");
  CHECK_THROWS_AS(load_cf_stats(p), CacheCorrupt);
  CHECK_THROWS_AS(load_cf_stats((dir.path() / "none.json").string()),
                  CacheCorrupt);
}

TEST_CASE("invalid arguments are refused") {
  CHECK_THROWS_AS(khinchin_constant(0), ConfigError);
  CHECK_THROWS_AS(levy_constant(0), ConfigError);
  CHECK_THROWS_AS(gauss_kuzmin_density(0), ConfigError);
  ContinuedFraction cf = make_cf(0, {1, 2});
  CHECK_THROWS_AS(gauss_kuzmin_hist(cf, 0), ConfigError);
  RunningSeries empty;
  CHECK_THROWS_AS(closest_approach(empty, BigReal::from_long(1, 32)),
                  ConfigError);
}
