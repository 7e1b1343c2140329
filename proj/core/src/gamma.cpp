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

#include "stieltjes/gamma.hpp"

#include <mpfr.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <fstream>
#include <sstream>

#include "stieltjes/bernoulli.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/rational.hpp"
#include "stieltjes/zeta.hpp"

namespace stieltjes {
namespace {

constexpr long double kNegInf = -1.0e30L;

long double log10_add(long double a, long double b) {
  if (a < b) std::swap(a, b);
  if (b <= kNegInf) return a;
  return a + std::log10(1.0L + std::pow(10.0L, b - a));
}

// Upper bound on log10|x| from the binary exponent; kNegInf for zero.
long double log10_upper(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return kNegInf;
  return static_cast<long double>(mpfr_get_exp(x)) * 0.3010299956639812L;
}

long double log10_lower(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return kNegInf;
  return static_cast<long double>(mpfr_get_exp(x) - 1) * 0.3010299956639812L;
}

// Per-n running sum with the k0 stopping rule and the honest error ledger:
// node noise magnified through the binomial/Stirling weights, plus the
// largest neglected term.
class GammaAccum {
 public:
  GammaAccum(long n, long work, long node_acc, long double noise_pad,
             long extend_past)
      : n_(n),
        node_acc_(node_acc),
        noise_pad_(noise_pad),
        extend_past_(extend_past),
        work_(work),
        acc_(BigReal::from_long(0, work)) {}

  bool done() const { return done_; }

  // term = beta_nk * alpha_k, already signed; alpha_log = log10|alpha_k|.
  void feed(long k, mpfr_srcptr term, long double alpha_log, bool alpha_dead) {
    if (done_) return;
    if (closed_) {
      mpfr_add(acc_.raw(), acc_.raw(), term, MPFR_RNDN);
      if (k >= add_until_) done_ = true;
      return;
    }
    mpfr_add(acc_.raw(), acc_.raw(), term, MPFR_RNDN);
    const long double tl = log10_upper(term);
    last_ = tl;
    if (tl > peak_) peak_ = tl;
    // alpha_k carries ~2^k * 10^-node_acc of node noise; the beta weight
    // multiplying it is |term|/|alpha_k|.
    long double beta_log = (alpha_log <= kNegInf) ? kNegInf : tl - alpha_log;
    if (beta_log > kNegInf)
      noise_ = log10_add(noise_, beta_log + 0.3010299956639812L * k -
                                     node_acc_ + noise_pad_);
    const long double acc_log = log10_upper(acc_.raw());
    bool below = alpha_dead || tl < noise_ - 0.5L ||
                 (acc_log > kNegInf && tl < acc_log - (work_ - 6));
    if (!below) {
      below_run_ = 0;
      last_sig_ = k;
      return;
    }
    ++below_run_;
    if (alpha_dead || below_run_ >= 3) {
      closed_ = true;
      k0_ = last_sig_ > 0 ? last_sig_ : k;
      trunc_ = last_ + 0.5L;
      add_until_ = k + extend_past_;
      if (extend_past_ <= 0) done_ = true;
    }
  }

  // Flush when the alpha series ran out before the stopping rule fired.
  void exhaust(long k_last) {
    if (closed_) {
      done_ = true;
      return;
    }
    closed_ = true;
    done_ = true;
    k0_ = k_last;
    trunc_ = last_ + 0.7L;
  }

  StieltjesValue finish(const mpq_class& eps) const {
    StieltjesValue v;
    v.n = n_;
    v.eps = eps;
    v.k0 = k0_;
    const long double gl = log10_lower(acc_.raw());
    const long double err = log10_add(noise_, trunc_);
    long claimed = 0;
    if (gl > kNegInf && err < gl)
      claimed = static_cast<long>(std::floor(gl - err)) - 1;
    claimed = std::min(claimed, work_ - 4);
    if (claimed < 1)
      throw PrecisionInfeasible("gamma_" + std::to_string(n_) +
                                ": error model certifies no digits at this "
                                "precision/eps");
    v.claimed_acc = claimed;
    BigReal val = acc_;
    val.set_acc_digits(claimed);
    v.value = val.canonical(claimed);
    return v;
  }

 private:
  long n_;
  long node_acc_;
  long double noise_pad_;
  long extend_past_;
  long work_;
  BigReal acc_;
  long double peak_ = kNegInf;
  long double noise_ = kNegInf;
  long double last_ = kNegInf;
  long double trunc_ = kNegInf;
  long below_run_ = 0;
  long last_sig_ = 0;
  long k0_ = 0;
  long add_until_ = LONG_MAX;
  bool closed_ = false;
  bool done_ = false;
};

std::vector<BigReal> beta_prefactors(long n_max, const mpq_class& eps,
                                     long work) {
  // pe[n] = n! / eps^(n+1), exact until the final rounding
  std::vector<BigReal> pe;
  pe.reserve(n_max + 1);
  mpq_class inv_eps = mpq_class(1) / eps;
  mpq_class p_acc = inv_eps;
  mpz_class nfact(1);
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) {
      nfact *= n;
      p_acc *= inv_eps;
    }
    mpq_class c = p_acc * mpq_class(nfact);
    pe.push_back(BigReal::from_mpq(c, work));
  }
  return pe;
}

}  // namespace

GammaPlan plan_gamma_run(long n_max, long target_digits,
                         const mpq_class& eps) {
  if (n_max < 0) throw ConfigError("n_max must be >= 0");
  if (target_digits < 1) throw ConfigError("target_digits must be >= 1");
  if (sgn(eps) <= 0) throw ConfigError("eps must be positive");

  const double L = -log10_mpq(eps);  // digits lost per unit step, roughly
  const double floor_rate = 0.30 * (L + 0.30);
  if (floor_rate <= 0.02)
    throw PrecisionInfeasible(
        "eps is too large for the alpha series to decay");
  const double kstar = std::exp((0.7 * L + 0.13) / 0.12);
  auto decay_digits = [&](double k) {
    // cumulative log10 drop of |alpha| by index k (calibrated model)
    if (k < 2) return 0.0;
    if (k <= kstar) return k * (L + 0.34 - 0.12 * std::log(k));
    return kstar * (L + 0.34 - 0.12 * std::log(kstar)) +
           (k - kstar) * floor_rate;
  };

  const double head = decay_digits(static_cast<double>(n_max) + 1.0);
  const double need = static_cast<double>(target_digits) + 4.0;
  long lo = n_max + 8, hi = lo;
  while (0.93 * (decay_digits(static_cast<double>(hi)) - head) < need) {
    hi *= 2;
    if (hi > 2000000)
      throw PrecisionInfeasible("alpha cutoff exceeds the supported range");
  }
  while (lo + 1 < hi) {
    long mid = lo + (hi - lo) / 2;
    if (0.93 * (decay_digits(static_cast<double>(mid)) - head) >= need)
      hi = mid;
    else
      lo = mid;
  }

  GammaPlan plan;
  plan.k_cut = hi;
  plan.node_count = hi + 17;
  const double beta_mag =
      (n_max + 1) * std::max(L, 0.0) +
      n_max * std::log10(std::max(std::log(static_cast<double>(hi)), 1.0));
  plan.node_acc = target_digits + guard_digits(target_digits) +
                  static_cast<long>(std::ceil(0.302 * plan.node_count)) +
                  static_cast<long>(std::ceil(beta_mag)) + 12;
  if (plan.node_count > 500000 || plan.node_acc > 2000000)
    throw PrecisionInfeasible("requested accuracy needs an unsupported "
                              "node table size");
  return plan;
}

std::vector<StieltjesValue> gamma_batch(long n_max, const AlphaSeries& alphas,
                                        long extend_past) {
  if (n_max < 0) throw ConfigError("n_max must be >= 0");
  const long k_max = alphas.k_max();
  if (k_max < n_max + 1)
    throw InsufficientNodes("alpha series too short for n_max=" +
                            std::to_string(n_max));

  const long w = alphas.node_acc + 16;
  const double eps_d = mpq_get_d(alphas.eps.get_mpq_t());
  const long double noise_pad = static_cast<long double>(
      std::log10(3.5 * (1.0 + static_cast<double>(k_max) * eps_d + 1.0)));

  std::vector<BigReal> pe = beta_prefactors(n_max, alphas.eps, w);
  std::vector<GammaAccum> states;
  states.reserve(n_max + 1);
  for (long n = 0; n <= n_max; ++n)
    states.emplace_back(n, w, alphas.node_acc, noise_pad, extend_past);

  StirlingRowStream row(n_max + 1);
  BigReal invfact = BigReal::from_long(1, w);
  BigReal t1 = BigReal::from_long(0, w), t2 = t1, t3 = t1;

  long k_last = 0;
  for (long k = 1; k <= k_max; ++k) {
    row.advance();
    mpfr_div_ui(invfact.raw(), invfact.raw(), static_cast<unsigned long>(k),
                MPFR_RNDN);
    bool any_open = false;
    for (long n = 0; n <= n_max; ++n)
      if (!states[n].done()) any_open = true;
    if (!any_open) break;
    k_last = k;

    const BigReal& al = alphas.alpha[k];
    const long double alpha_log = log10_upper(al.raw());
    const bool alpha_dead = al.acc_digits() <= 0;
    mpfr_mul(t1.raw(), al.raw(), invfact.raw(), MPFR_RNDN);

    const long n_hi = std::min(n_max, k - 1);
    for (long n = 0; n <= n_hi; ++n) {
      if (states[n].done()) continue;
      mpfr_mul(t2.raw(), t1.raw(), pe[n].raw(), MPFR_RNDN);
      mpfr_mul_z(t3.raw(), t2.raw(), row.at(n + 1).get_mpz_t(), MPFR_RNDN);
      if ((n + k) & 1) mpfr_neg(t3.raw(), t3.raw(), MPFR_RNDN);
      states[n].feed(k, t3.raw(), alpha_log, alpha_dead);
    }
  }

  std::vector<StieltjesValue> out;
  out.reserve(n_max + 1);
  for (long n = 0; n <= n_max; ++n) {
    if (!states[n].done()) states[n].exhaust(k_last);
    out.push_back(states[n].finish(alphas.eps));
  }
  return out;
}

StieltjesValue gamma_n(long n, const AlphaSeries& alphas,
                       const StirlingTriangle& stirling) {
  if (n < 0) throw ConfigError("n must be >= 0");
  const long k_max = std::min(alphas.k_max(), stirling.k_max());
  if (k_max < n + 1)
    throw InsufficientNodes("alpha series/Stirling triangle too short for n=" +
                            std::to_string(n));

  const long w = alphas.node_acc + 16;
  const double eps_d = mpq_get_d(alphas.eps.get_mpq_t());
  const long double noise_pad = static_cast<long double>(
      std::log10(3.5 * (1.0 + static_cast<double>(k_max) * eps_d + 1.0)));

  std::vector<BigReal> pe = beta_prefactors(n, alphas.eps, w);
  GammaAccum state(n, w, alphas.node_acc, noise_pad, 0);

  BigReal invfact = BigReal::from_long(1, w);
  BigReal t1 = BigReal::from_long(0, w), t3 = t1;
  long k_last = 0;
  for (long k = 1; k <= k_max && !state.done(); ++k) {
    mpfr_div_ui(invfact.raw(), invfact.raw(), static_cast<unsigned long>(k),
                MPFR_RNDN);
    if (k <= n) continue;
    k_last = k;
    const BigReal& al = alphas.alpha[k];
    mpfr_mul(t1.raw(), al.raw(), invfact.raw(), MPFR_RNDN);
    mpfr_mul(t1.raw(), t1.raw(), pe[n].raw(), MPFR_RNDN);
    mpfr_mul_z(t3.raw(), t1.raw(), stirling.at(k, n + 1).get_mpz_t(),
               MPFR_RNDN);
    if ((n + k) & 1) mpfr_neg(t3.raw(), t3.raw(), MPFR_RNDN);
    state.feed(k, t3.raw(), log10_upper(al.raw()), al.acc_digits() <= 0);
  }
  if (!state.done()) state.exhaust(k_last);
  return state.finish(alphas.eps);
}

BigReal gamma_direct_oracle(long n, long m, long target_digits) {
  if (n < 0 || m < 1) throw ConfigError("oracle needs n >= 0, m >= 1");
  if (target_digits < 1) throw ConfigError("target_digits must be >= 1");
  const long work = target_digits + guard_digits(target_digits) +
                    static_cast<long>(std::log10(static_cast<double>(m))) + 9;
  BigReal acc = BigReal::from_long(0, work);
  BigReal kf = acc, lk = acc, p = acc;
  for (long k = 1; k <= m; ++k) {
    mpfr_set_si(kf.raw(), k, MPFR_RNDN);
    mpfr_log(lk.raw(), kf.raw(), MPFR_RNDN);
    mpfr_pow_ui(p.raw(), lk.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_div_ui(p.raw(), p.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_add(acc.raw(), acc.raw(), p.raw(), MPFR_RNDN);
  }
  mpfr_set_si(kf.raw(), m, MPFR_RNDN);
  mpfr_log(lk.raw(), kf.raw(), MPFR_RNDN);
  mpfr_pow_ui(p.raw(), lk.raw(), static_cast<unsigned long>(n + 1), MPFR_RNDN);
  mpfr_div_ui(p.raw(), p.raw(), static_cast<unsigned long>(n + 1), MPFR_RNDN);
  mpfr_sub(acc.raw(), acc.raw(), p.raw(), MPFR_RNDN);
  acc.set_acc_digits(target_digits);
  return acc;
}

std::pair<BigReal, BigReal> A_k_crosscheck(long k, long target_digits) {
  if (k < 0) throw ConfigError("k must be >= 0");
  if (target_digits < 1) throw ConfigError("target_digits must be >= 1");
  const long work = target_digits + guard_digits(target_digits) +
                    static_cast<long>(std::ceil(0.302 * k)) + 12;

  BigReal sum1 = BigReal::from_long(0, work);
  BigReal t = sum1;
  mpz_class binom;
  for (long j = 0; j <= k; ++j) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                 static_cast<unsigned long>(j));
    BigReal z = zeta_real(mpq_class(2 * j + 2), work);
    mpfr_mul_z(t.raw(), z.raw(), binom.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_ui(t.raw(), t.raw(), static_cast<unsigned long>(2 * j + 1),
                MPFR_RNDN);
    if (j & 1)
      mpfr_sub(sum1.raw(), sum1.raw(), t.raw(), MPFR_RNDN);
    else
      mpfr_add(sum1.raw(), sum1.raw(), t.raw(), MPFR_RNDN);
  }

  BigReal sum2 = BigReal::from_long(0, work);
  BigReal twopi2 = BigReal::pi(work);
  mpfr_mul_ui(twopi2.raw(), twopi2.raw(), 2, MPFR_RNDN);
  mpfr_sqr(twopi2.raw(), twopi2.raw(), MPFR_RNDN);  // (2 pi)^2
  BigReal pw = twopi2;
  BernoulliCache bern;
  mpz_class fact(2);  // (2j+2)! starting at j=0
  for (long j = 0; j <= k; ++j) {
    if (j > 0) {
      mpfr_mul(pw.raw(), pw.raw(), twopi2.raw(), MPFR_RNDN);
      fact *= (2 * j + 1);
      fact *= (2 * j + 2);
    }
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                 static_cast<unsigned long>(j));
    BigReal b = BigReal::from_mpq(bern.get(2 * j + 2), work);
    mpfr_mul(t.raw(), b.raw(), pw.raw(), MPFR_RNDN);
    mpfr_div_z(t.raw(), t.raw(), fact.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_z(t.raw(), t.raw(), binom.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_ui(t.raw(), t.raw(), static_cast<unsigned long>(2 * j + 1),
                MPFR_RNDN);
    mpfr_add(sum2.raw(), sum2.raw(), t.raw(), MPFR_RNDN);
  }
  mpfr_div_ui(sum2.raw(), sum2.raw(), 2, MPFR_RNDN);

  sum1.set_acc_digits(target_digits);
  sum2.set_acc_digits(target_digits);
  return {sum1, sum2};
}

void save_stieltjes(const StieltjesValue& v, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << "# stieltjes n=" << v.n << " eps=" << v.eps.get_num() << "/"
    << v.eps.get_den() << " k0=" << v.k0 << " acc=" << v.claimed_acc << "\n";
  f << v.value.to_decimal(v.claimed_acc) << "\n";
  f.flush();
  if (!f) throw std::runtime_error("short write to " + path);
}

StieltjesValue load_stieltjes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CacheCorrupt("cannot open stieltjes value " + path);
  std::string header, body;
  if (!std::getline(f, header) || !std::getline(f, body))
    throw CacheCorrupt("truncated stieltjes value " + path);
  std::istringstream hs(header);
  std::string hash, tag, ntok, epstok, k0tok, acctok;
  hs >> hash >> tag >> ntok >> epstok >> k0tok >> acctok;
  if (hash != "#" || tag != "stieltjes" || ntok.rfind("n=", 0) != 0 ||
      epstok.rfind("eps=", 0) != 0 || k0tok.rfind("k0=", 0) != 0 ||
      acctok.rfind("acc=", 0) != 0)
    throw CacheCorrupt("bad stieltjes header in " + path);
  StieltjesValue v;
  try {
    v.n = std::stol(ntok.substr(2));
    v.eps = parse_rational(epstok.substr(4));
    v.k0 = std::stol(k0tok.substr(3));
    v.claimed_acc = std::stol(acctok.substr(4));
    if (v.n < 0 || v.k0 < 0 || v.claimed_acc < 1)
      throw CacheCorrupt("bad stieltjes header in " + path);
    v.value =
        BigReal::from_decimal(body, v.claimed_acc + 10, v.claimed_acc);
  } catch (const CacheCorrupt&) {
    throw;
  } catch (const std::exception&) {
    throw CacheCorrupt("bad stieltjes record in " + path);
  }
  return v;
}

}  // namespace stieltjes
