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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stieltjes/bigreal.hpp"
#include "stieltjes/contfrac.hpp"

namespace stieltjes {

// X(m) for m = 1..l (values[m-1]); comparisons against reference constants
// start at m_start. Accumulation happens in log space with compensated
// summation before conversion, so double storage is far above the noise.
struct RunningSeries {
  long m_start = 100;
  std::vector<double> values;

  long size() const { return static_cast<long>(values.size()); }
};

// Partial-quotient histogram: counts[k-1] holds #\{a_m = k\} for k <= k_max,
// everything larger lands in the tail. Mergeable across constants.
struct GaussKuzminHist {
  long k_max = 10;
  long total = 0;
  long tail = 0;
  std::vector<long> counts;

  double empirical(long k) const;  // k in 1..k_max
  double tail_empirical() const;
  GaussKuzminHist& operator+=(const GaussKuzminHist& other);
};

// Limiting density of partial quotients: log2((1+1/k)/(1+1/(k+1))).
double gauss_kuzmin_density(long k);

// Everything the per-constant diagnostics report carries.
struct CFStatsReport {
  long l = 0;  // quotient count
  double k_final = 0.0;
  long s_k = 0;
  long k_closest_m = 0;
  double k_closest = 0.0;
  double l_final = 0.0;
  long s_l = 0;
  long l_closest_m = 0;
  double l_closest = 0.0;
  double log10_product = 0.0;
  double max_quotient_log10 = 0.0;
  GaussKuzminHist gk;
};

// K_0, the almost-everywhere limit of geometric quotient means, via the
// accelerated zeta series for ln2 * ln K_0.
BigReal khinchin_constant(long target_digits);

// L_0 = exp(pi^2 / (12 ln 2)).
BigReal levy_constant(long target_digits);

// K(m) = (a_1 ... a_m)^(1/m), m = 1..l (a_0 excluded).
RunningSeries running_geomean(const ContinuedFraction& cf);

// L(m) = Q_m^(1/m), m = 1..l.
RunningSeries running_levy(const ConvergentSeq& conv);

// Count of m in [m_start, l-1] with (X(m)-target)(X(m+1)-target) < 0; an
// exact touch X(m) = target counts as no change.
long sign_changes(const RunningSeries& series, const BigReal& target);

// (m, X(m)) minimizing |X(m) - target| over m >= m_start (whole series when
// it is shorter than m_start); ties go to the smallest m.
std::pair<long, double> closest_approach(const RunningSeries& series,
                                         const BigReal& target);

GaussKuzminHist gauss_kuzmin_hist(const ContinuedFraction& cf, long k_max);

CFStatsReport cf_stats(const ContinuedFraction& cf, long gk_k_max = 10,
                       long m_start = 100);

// JSON record per report, tagged with a constant index or a label; the
// loader round-trips exactly and raises CacheCorrupt on malformed input.
void save_cf_stats(const CFStatsReport& r, long index, const std::string& path);
void save_cf_stats(const CFStatsReport& r, const std::string& label,
                   const std::string& path);
CFStatsReport load_cf_stats(const std::string& path, std::string* id = nullptr);

}  // namespace stieltjes
