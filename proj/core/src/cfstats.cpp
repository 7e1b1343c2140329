// Copyright 2026 the stieltjes-lab authors
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

#include "stieltjes/cfstats.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/zeta.hpp"

namespace stieltjes {
namespace {

// ln|z| for exact integers without double overflow.
long double ln_mpz(const mpz_class& z) {
  long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs((long double)d)) +
         static_cast<long double>(exp2) * 0.6931471805599453094L;
}

struct Kahan {
  long double sum = 0.0L;
  long double comp = 0.0L;
  void add(long double x) {
    long double y = x - comp;
    long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double GaussKuzminHist::empirical(long k) const {
  if (k < 1 || k > k_max || total == 0) return 0.0;
  return static_cast<double>(counts[k - 1]) / static_cast<double>(total);
}

double GaussKuzminHist::tail_empirical() const {
  if (total == 0) return 0.0;
  return static_cast<double>(tail) / static_cast<double>(total);
}

GaussKuzminHist& GaussKuzminHist::operator+=(const GaussKuzminHist& other) {
  if (other.k_max != k_max)
    throw ConfigError("cannot merge histograms with different k_max");
  total += other.total;
  tail += other.tail;
  for (long i = 0; i < k_max; ++i) counts[i] += other.counts[i];
  return *this;
}

double gauss_kuzmin_density(long k) {
  if (k < 1) throw ConfigError("density defined for k >= 1");
  double kd = static_cast<double>(k);
  return std::log2((1.0 + 1.0 / kd) / (1.0 + 1.0 / (kd + 1.0)));
}

BigReal khinchin_constant(long target_digits) {
  if (target_digits < 1) throw ConfigError("target_digits must be >= 1");
  const long work = target_digits + guard_digits(target_digits) + 8;
  // ln2 * ln K_0 = sum_{n>=1} (zeta(2n)-1)/n * sum_{k=1}^{2n-1} (-1)^(k+1)/k;
  // terms shrink like 4^-n.
  const long n_terms =
      static_cast<long>(std::ceil((work + 4) / 0.602)) / 2 + 4;

  BigReal s = BigReal::from_long(0, work);
  BigReal t = s, zc = s;
  mpq_class harm(0);
  for (long n = 1; n <= n_terms; ++n) {
    // harm = sum_{k=1}^{2n-1} (-1)^(k+1)/k
    if (n == 1) {
      harm = 1;
    } else {
      harm -= mpq_class(1, 2 * n - 2);
      harm += mpq_class(1, 2 * n - 1);
    }
    BigReal z = zeta_real(mpq_class(2 * n), work);
    mpfr_sub_ui(zc.raw(), z.raw(), 1, MPFR_RNDN);
    mpfr_div_ui(zc.raw(), zc.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_set_q(t.raw(), harm.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(t.raw(), t.raw(), zc.raw(), MPFR_RNDN);
    mpfr_add(s.raw(), s.raw(), t.raw(), MPFR_RNDN);
  }
  BigReal ln2 = BigReal::from_long(0, work);
  mpfr_const_log2(ln2.raw(), MPFR_RNDN);
  mpfr_div(s.raw(), s.raw(), ln2.raw(), MPFR_RNDN);
  mpfr_exp(s.raw(), s.raw(), MPFR_RNDN);
  s.set_acc_digits(target_digits);
  return s;
}

BigReal levy_constant(long target_digits) {
  if (target_digits < 1) throw ConfigError("target_digits must be >= 1");
  const long work = target_digits + guard_digits(target_digits) + 8;
  BigReal x = BigReal::from_long(0, work);
  BigReal ln2 = x;
  mpfr_const_pi(x.raw(), MPFR_RNDN);
  mpfr_sqr(x.raw(), x.raw(), MPFR_RNDN);
  mpfr_const_log2(ln2.raw(), MPFR_RNDN);
  mpfr_mul_ui(ln2.raw(), ln2.raw(), 12, MPFR_RNDN);
  mpfr_div(x.raw(), x.raw(), ln2.raw(), MPFR_RNDN);
  mpfr_exp(x.raw(), x.raw(), MPFR_RNDN);
  x.set_acc_digits(target_digits);
  return x;
}

RunningSeries running_geomean(const ContinuedFraction& cf) {
  RunningSeries s;
  s.values.reserve(cf.size());
  Kahan acc;
  long m = 0;
  for (const auto& a : cf.quotients) {
    ++m;
    acc.add(ln_mpz(a));
    s.values.push_back(
        static_cast<double>(std::exp(acc.sum / static_cast<long double>(m))));
  }
  return s;
}

RunningSeries running_levy(const ConvergentSeq& conv) {
  RunningSeries s;
  if (conv.size() <= 1) return s;
  s.values.reserve(conv.size() - 1);
  for (long m = 1; m < conv.size(); ++m) {
    long double lnq = ln_mpz(conv.pairs[m].second);
    s.values.push_back(
        static_cast<double>(std::exp(lnq / static_cast<long double>(m))));
  }
  return s;
}

long sign_changes(const RunningSeries& series, const BigReal& target) {
  const double t = target.to_double();
  const long l = series.size();
  long count = 0;
  for (long m = std::max(1L, series.m_start); m < l; ++m) {
    double d1 = series.values[m - 1] - t;
    double d2 = series.values[m] - t;
    if ((d1 < 0.0 && d2 > 0.0) || (d1 > 0.0 && d2 < 0.0)) ++count;
  }
  return count;
}

std::pair<long, double> closest_approach(const RunningSeries& series,
                                         const BigReal& target) {
  if (series.values.empty()) throw ConfigError("empty running series");
  const double t = target.to_double();
  const long l = series.size();
  const long lo = std::max(1L, std::min(series.m_start, l));
  long best_m = lo;
  double best = std::fabs(series.values[lo - 1] - t);
  for (long m = lo + 1; m <= l; ++m) {
    double d = std::fabs(series.values[m - 1] - t);
    if (d < best) {
      best = d;
      best_m = m;
    }
  }
  return {best_m, series.values[best_m - 1]};
}

GaussKuzminHist gauss_kuzmin_hist(const ContinuedFraction& cf, long k_max) {
  if (k_max < 1) throw ConfigError("histogram needs k_max >= 1");
  GaussKuzminHist h;
  h.k_max = k_max;
  h.counts.assign(k_max, 0);
  for (const auto& a : cf.quotients) {
    ++h.total;
    if (a <= k_max)
      ++h.counts[a.get_si() - 1];
    else
      ++h.tail;
  }
  return h;
}

CFStatsReport cf_stats(const ContinuedFraction& cf, long gk_k_max,
                       long m_start) {
  CFStatsReport r;
  r.l = cf.size();
  r.gk = gauss_kuzmin_hist(cf, gk_k_max);
  if (r.l == 0) return r;

  static const BigReal k0 = khinchin_constant(24);
  static const BigReal l0 = levy_constant(24);

  RunningSeries ks = running_geomean(cf);
  ks.m_start = m_start;
  RunningSeries ls = running_levy(convergents(cf));
  ls.m_start = m_start;

  r.k_final = ks.values.back();
  r.s_k = sign_changes(ks, k0);
  auto kc = closest_approach(ks, k0);
  r.k_closest_m = kc.first;
  r.k_closest = kc.second;

  r.l_final = ls.values.back();
  r.s_l = sign_changes(ls, l0);
  auto lc = closest_approach(ls, l0);
  r.l_closest_m = lc.first;
  r.l_closest = lc.second;

  Kahan logprod;
  long double max_lq = 0.0L;
  for (const auto& a : cf.quotients) {
    long double lg = ln_mpz(a) * 0.4342944819032518L;
    logprod.add(lg);
    if (lg > max_lq) max_lq = lg;
  }
  r.log10_product = static_cast<double>(logprod.sum);
  r.max_quotient_log10 = static_cast<double>(max_lq);
  return r;
}

namespace {

void save_stats_impl(const CFStatsReport& r, nlohmann::ordered_json id,
                     const std::string& path) {
  nlohmann::ordered_json j;
  j["n"] = std::move(id);
  j["l"] = r.l;
  j["k_final"] = r.k_final;
  j["s_k"] = r.s_k;
  j["k_closest_m"] = r.k_closest_m;
  j["k_closest"] = r.k_closest;
  j["l_final"] = r.l_final;
  j["s_l"] = r.s_l;
  j["l_closest_m"] = r.l_closest_m;
  j["l_closest"] = r.l_closest;
  j["log10_product"] = r.log10_product;
  j["max_quotient_log10"] = r.max_quotient_log10;
  nlohmann::ordered_json gk;
  gk["k_max"] = r.gk.k_max;
  gk["total"] = r.gk.total;
  gk["tail"] = r.gk.tail;
  gk["counts"] = r.gk.counts;
  j["gk"] = std::move(gk);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << j.dump() << "\n";
  f.flush();
  if (!f) throw std::runtime_error("short write to " + path);
}

}  // namespace

void save_cf_stats(const CFStatsReport& r, long index, const std::string& path) {
  save_stats_impl(r, nlohmann::ordered_json(index), path);
}

void save_cf_stats(const CFStatsReport& r, const std::string& label,
                   const std::string& path) {
  save_stats_impl(r, nlohmann::ordered_json(label), path);
}

CFStatsReport load_cf_stats(const std::string& path, std::string* id) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CacheCorrupt("cannot open stats record " + path);
  nlohmann::ordered_json j;
  try {
    f >> j;
  } catch (const std::exception&) {
    throw CacheCorrupt("bad stats record in " + path);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("gk"))
    throw CacheCorrupt("bad stats record in " + path);
  CFStatsReport r;
  try {
    r.l = j.at("l").get<long>();
    r.k_final = j.at("k_final").get<double>();
    r.s_k = j.at("s_k").get<long>();
    r.k_closest_m = j.at("k_closest_m").get<long>();
    r.k_closest = j.at("k_closest").get<double>();
    r.l_final = j.at("l_final").get<double>();
    r.s_l = j.at("s_l").get<long>();
    r.l_closest_m = j.at("l_closest_m").get<long>();
    r.l_closest = j.at("l_closest").get<double>();
    r.log10_product = j.at("log10_product").get<double>();
    r.max_quotient_log10 = j.at("max_quotient_log10").get<double>();
    const auto& gk = j.at("gk");
    r.gk.k_max = gk.at("k_max").get<long>();
    r.gk.total = gk.at("total").get<long>();
    r.gk.tail = gk.at("tail").get<long>();
    r.gk.counts = gk.at("counts").get<std::vector<long>>();
    if (r.gk.k_max < 1 ||
        r.gk.counts.size() != static_cast<std::size_t>(r.gk.k_max))
      throw CacheCorrupt("bad stats record in " + path);
    if (id != nullptr)
      *id = j["n"].is_string() ? j["n"].get<std::string>() : j["n"].dump();
  } catch (const CacheCorrupt&) {
    throw;
  } catch (const std::exception&) {
    throw CacheCorrupt("bad stats record in " + path);
  }
  return r;
}

}  // namespace stieltjes
