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

#include "stieltjes/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "stieltjes/errors.hpp"
#include "stieltjes/rational.hpp"

namespace stieltjes {

namespace {

// Σ_{k=1}^{N-1} k^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//   + Σ_{j=1}^{p} B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1},
// remainder bounded by the first omitted correction term for real s with
// s + 2p + 1 > 0. p grows until the omitted term is below `bound_log10`.
BigReal em_sum(const BigReal& s, long work_digits, long N, long p_start, long p_cap,
               double bound_log10, BernoulliCache& bern) {
  const long bits = digits_to_bits(work_digits);
  mpfr_t acc, w, t, poch, npow, nm2, bound;
  mpfr_inits2(bits, acc, w, t, poch, npow, nm2, bound, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(acc, 0, MPFR_RNDN);

  // main sum
  for (long k = 1; k < N; ++k) {
    mpfr_set_si(w, k, MPFR_RNDN);
    mpfr_pow(t, w, s.raw(), MPFR_RNDN);
    mpfr_ui_div(t, 1, t, MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  // N^{1-s}/(s-1) and N^{-s}/2
  mpfr_set_si(w, N, MPFR_RNDN);
  mpfr_pow(npow, w, s.raw(), MPFR_RNDN);
  mpfr_ui_div(npow, 1, npow, MPFR_RNDN);  // N^{-s}
  mpfr_div_ui(t, npow, 2, MPFR_RNDN);
  mpfr_add(acc, acc, t, MPFR_RNDN);
  mpfr_mul_si(t, npow, N, MPFR_RNDN);  // N^{1-s}
  mpfr_sub_ui(w, s.raw(), 1, MPFR_RNDN);
  mpfr_div(t, t, w, MPFR_RNDN);
  mpfr_add(acc, acc, t, MPFR_RNDN);

  // corrections: term_j = B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1}
  mpfr_set(poch, s.raw(), MPFR_RNDN);              // (s)_1
  mpfr_mul_si(npow, npow, N, MPFR_RNDN);           // N^{-s+1}
  mpfr_set_si(nm2, N, MPFR_RNDN);
  mpfr_sqr(nm2, nm2, MPFR_RNDN);
  mpfr_ui_div(nm2, 1, nm2, MPFR_RNDN);             // N^{-2}
  mpz_class fact2j(1);                              // (2j)!
  bern.ensure(2 * static_cast<unsigned long>(std::max(p_start, 8L)) + 4);
  bool certified = false;
  long p_used = 0;
  for (long j = 1; j <= p_cap; ++j) {
    fact2j *= 2 * j - 1;
    fact2j *= 2 * j;
    mpfr_mul(npow, npow, nm2, MPFR_RNDN);          // N^{-s-2j+1}
    const mpq_class& b = bern.get(2 * static_cast<unsigned long>(j));
    mpfr_set_q(t, b.get_mpq_t(), MPFR_RNDN);
    mpfr_div_z(t, t, fact2j.get_mpz_t(), MPFR_RNDN);
    mpfr_mul(t, t, poch, MPFR_RNDN);
    mpfr_mul(t, t, npow, MPFR_RNDN);
    // validity needs s + 2j + 1 > 0 before the omitted-term bound applies
    double s_d = mpfr_get_d(s.raw(), MPFR_RNDN);
    if (j >= p_start && s_d + 2 * j + 1 > 0) {
      // |t| is the candidate first-omitted term if we stop before adding it
      mpfr_abs(bound, t, MPFR_RNDN);
      long e2 = mpfr_zero_p(bound) ? -(1L << 40) : mpfr_get_exp(bound);
      double log10_t = static_cast<double>(e2) * 0.30102999566398120;
      if (log10_t < bound_log10) {
        certified = true;
        p_used = j - 1;
        break;
      }
    }
    mpfr_add(acc, acc, t, MPFR_RNDN);
    // (s)_{2j+1} = (s)_{2j-1} * (s+2j-1)(s+2j)
    mpfr_add_si(w, s.raw(), 2 * j - 1, MPFR_RNDN);
    mpfr_mul(poch, poch, w, MPFR_RNDN);
    mpfr_add_si(w, s.raw(), 2 * j, MPFR_RNDN);
    mpfr_mul(poch, poch, w, MPFR_RNDN);
    if (2 * static_cast<unsigned long>(j) + 4 >= 2 * static_cast<unsigned long>(p_cap)) {
      bern.ensure(2 * static_cast<unsigned long>(p_cap) + 4);
    }
  }
  (void)p_used;
  BigReal r(work_digits);
  mpfr_set(r.raw(), acc, MPFR_RNDN);
  mpfr_clears(acc, w, t, poch, npow, nm2, bound, static_cast<mpfr_ptr>(nullptr));
  if (!certified) {
    throw PrecisionInfeasible("zeta remainder bound not met within correction cap");
  }
  return r;
}

}  // namespace

BigReal zeta_abs(const BigReal& s, long abs_digits, BernoulliCache& bern) {
  if (mpfr_cmp_ui(s.raw(), 1) == 0) throw PoleError("zeta evaluated at s = 1");
  // Near the pole the result is ~1/(s-1); absolute accuracy then needs the
  // working mantissa to cover the blown-up integer part as well.
  long pole_boost = 0;
  {
    mpq_class sm1 = s.to_mpq() - 1;
    double l10 = log10_mpq(sm1);
    if (l10 < 0) pole_boost = static_cast<long>(std::ceil(-l10)) + 1;
  }
  long work = abs_digits + guard_digits(abs_digits) + pole_boost;
  double s_d = mpfr_get_d(s.raw(), MPFR_RNDN);
  // keep s/(2*pi*N) well under 1 or the correction terms stall before the
  // remainder bound is met
  long N = static_cast<long>(0.545 * static_cast<double>(abs_digits) +
                             0.55 * std::max(s_d, 0.0)) +
           8;
  long p0 = N;
  long p_min_validity = s_d < 0 ? static_cast<long>(-s_d / 2) + 2 : 1;
  long p_cap = 4 * std::max(p0, p_min_validity) + 64;
  bern.ensure(2 * static_cast<unsigned long>(std::min(p_cap, 2 * p0 + 8)));
  BigReal z = em_sum(s, work, N, std::max(1L, p_min_validity), p_cap,
                     -static_cast<double>(abs_digits) - 0.5, bern);
  z.set_acc_digits(abs_digits);
  return z;
}

BigReal zeta_real(const BigReal& s, long target_digits, BernoulliCache& bern) {
  if (target_digits < 1) throw ConfigError("target_digits must be >= 1");
  long abs_digits = target_digits + 4;
  for (int attempt = 0; attempt < 3; ++attempt) {
    BigReal z = zeta_abs(s, abs_digits, bern);
    if (z.is_zero() || abs(z) < BigReal::from_mpq(mpq_class(1, pow10_z(
          static_cast<unsigned long>(std::max(1L, abs_digits - 2)))), 24)) {
      // indistinguishable from zero at this absolute accuracy
      z.set_acc_digits(0);
      return z;
    }
    long mag = z.ilog10_abs();  // value in [10^mag, 10^{mag+1})
    long sig = abs_digits + mag;  // significant digits implied by abs bound
    if (sig >= target_digits + 1) {
      z.set_acc_digits(target_digits);
      return z;
    }
    abs_digits += target_digits + 1 - sig;
  }
  throw PrecisionInfeasible("zeta_real could not reach requested significant digits");
}

BigReal zeta_real(const BigReal& s, long target_digits) {
  thread_local BernoulliCache bern;
  return zeta_real(s, target_digits, bern);
}

BigReal zeta_real(const mpq_class& s, long target_digits) {
  long pole_boost = 0;
  mpq_class sm1 = s - 1;
  if (sgn(sm1) != 0) {
    double l10 = log10_mpq(sm1);
    if (l10 < 0) pole_boost = static_cast<long>(std::ceil(-l10)) + 1;
  }
  const long work =
      target_digits + guard_digits(target_digits) + pole_boost + 8;
  return zeta_real(BigReal::from_mpq(s, work), target_digits);
}

BigReal phi(const BigReal& s, long target_digits, BernoulliCache& bern) {
  if (target_digits < 1) throw ConfigError("target_digits must be >= 1");
  if (mpfr_cmp_ui(s.raw(), 1) == 0) {
    BigReal one = BigReal::from_long(1, target_digits + guard_digits(target_digits));
    return one;
  }
  long work = target_digits + guard_digits(target_digits);
  BigReal sw = s;
  if (sw.work_digits() < work) {
    BigReal tmp(work);
    mpfr_set(tmp.raw(), s.raw(), MPFR_RNDN);
    tmp.set_acc_digits(work);
    sw = tmp;
  }
  BigReal sm1 = sw - BigReal::from_long(1, work);
  double extra = 0.0;
  if (!sm1.is_zero()) extra = std::max(0.0, std::ceil(log10_mpq(sm1.to_mpq())));
  BigReal z = zeta_abs(sw, target_digits + 4 + static_cast<long>(extra), bern);
  BigReal r = z * sm1;
  r.set_acc_digits(target_digits);
  return r;
}

BigReal phi(const BigReal& s, long target_digits) {
  thread_local BernoulliCache bern;
  return phi(s, target_digits, bern);
}

BigReal phi(const mpq_class& s, long target_digits) {
  long pole_boost = 0;
  mpq_class sm1 = s - 1;
  if (sgn(sm1) != 0) {
    double l10 = log10_mpq(sm1);
    if (l10 < 0) pole_boost = static_cast<long>(std::ceil(-l10)) + 1;
  }
  const long work =
      target_digits + guard_digits(target_digits) + pole_boost + 8;
  return phi(BigReal::from_mpq(s, work), target_digits);
}

}  // namespace stieltjes
