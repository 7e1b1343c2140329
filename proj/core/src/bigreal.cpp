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

#include "stieltjes/bigreal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "stieltjes/errors.hpp"

namespace stieltjes {

long digits_to_bits(long digits) {
  if (digits < 1) digits = 1;
  // ceil(digits * log2(10)) with an integer-safe fixed-point multiplier.
  unsigned long long d = static_cast<unsigned long long>(digits);
  unsigned long long bits = (d * 3321928095ULL + 999999999ULL) / 1000000000ULL;
  return static_cast<long>(bits) + 8;
}

namespace {
long clamp_acc(long acc, long work) { return std::max(0L, std::min(acc, work)); }
}  // namespace

BigReal::BigReal() : work_digits_(20), acc_digits_(0) {
  mpfr_init2(v_, digits_to_bits(work_digits_));
  mpfr_set_nan(v_);
}

BigReal::BigReal(long work_digits)
    : work_digits_(std::max(1L, work_digits)), acc_digits_(0) {
  mpfr_init2(v_, digits_to_bits(work_digits_));
  mpfr_set_nan(v_);
}

BigReal::BigReal(const BigReal& o) : work_digits_(o.work_digits_), acc_digits_(o.acc_digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept
    : work_digits_(o.work_digits_), acc_digits_(o.acc_digits_) {
  v_[0] = o.v_[0];
  mpfr_init2(o.v_, MPFR_PREC_MIN);
  mpfr_set_nan(o.v_);
  o.acc_digits_ = 0;
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    work_digits_ = o.work_digits_;
    acc_digits_ = o.acc_digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    work_digits_ = o.work_digits_;
    acc_digits_ = o.acc_digits_;
  }
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_long(long v, long work_digits) {
  BigReal r(work_digits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  r.acc_digits_ = r.work_digits_;
  return r;
}

BigReal BigReal::from_mpz(const mpz_class& v, long work_digits) {
  BigReal r(work_digits);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  r.acc_digits_ = r.work_digits_;
  return r;
}

BigReal BigReal::from_mpq(const mpq_class& v, long work_digits) {
  BigReal r(work_digits);
  mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
  r.acc_digits_ = r.work_digits_;
  return r;
}

BigReal BigReal::from_double(double v, long work_digits) {
  BigReal r(work_digits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  r.acc_digits_ = r.work_digits_;
  return r;
}

BigReal BigReal::from_decimal(std::string_view dec, long work_digits, long acc_digits) {
  BigReal r(work_digits);
  std::string s(dec);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw ConfigError("unparseable decimal value: '" + s + "'");
  }
  if (acc_digits < 0) {
    long sig = 0;
    bool seen_nonzero = false;
    for (char c : s) {
      if (c == 'e' || c == 'E') break;
      if (!std::isdigit(static_cast<unsigned char>(c))) continue;
      if (c != '0') seen_nonzero = true;
      if (seen_nonzero) ++sig;
    }
    if (!seen_nonzero) sig = 1;  // "0", "0.0", ...
    acc_digits = sig;
  }
  r.acc_digits_ = clamp_acc(acc_digits, r.work_digits_);
  return r;
}

BigReal BigReal::pi(long work_digits) {
  BigReal r(work_digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  r.acc_digits_ = r.work_digits_;
  return r;
}

void BigReal::set_acc_digits(long a) { acc_digits_ = clamp_acc(a, work_digits_); }

mpq_class BigReal::to_mpq() const {
  if (!mpfr_number_p(v_)) throw ConfigError("to_mpq on non-finite value");
  if (mpfr_zero_p(v_)) return mpq_class(0);
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
  mpq_class q(mant);
  if (e >= 0) {
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= shift;
  } else {
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= shift;
  }
  q.canonicalize();
  return q;
}

std::string BigReal::to_decimal(long sig_digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_zero_p(v_)) return "0";
  sig_digits = std::max(1L, sig_digits);
  mpfr_exp_t e10 = 0;
  char* digits = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(sig_digits), v_, MPFR_RNDN);
  if (digits == nullptr) throw std::runtime_error("mpfr_get_str failed");
  std::string d(digits);
  mpfr_free_str(digits);
  bool neg = !d.empty() && d[0] == '-';
  std::string mant = neg ? d.substr(1) : d;
  // mant is sig_digits digits; value = 0.mant * 10^e10.
  std::string out;
  if (e10 >= -7 && e10 <= 44) {
    if (e10 <= 0) {
      out = "0." + std::string(static_cast<size_t>(-e10), '0') + mant;
    } else if (static_cast<size_t>(e10) >= mant.size()) {
      out = mant + std::string(static_cast<size_t>(e10) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<size_t>(e10)) + "." + mant.substr(static_cast<size_t>(e10));
    }
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(e10 - 1);
  }
  return neg ? "-" + out : out;
}

double BigReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

int BigReal::sign() const {
  if (mpfr_zero_p(v_)) return 0;
  return mpfr_signbit(v_) ? -1 : 1;
}

long BigReal::ilog10_abs() const {
  if (mpfr_zero_p(v_) || !mpfr_number_p(v_)) {
    throw ConfigError("ilog10_abs of zero or non-finite value");
  }
  mpfr_t t;
  mpfr_init2(t, 96);
  mpfr_abs(t, v_, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDN);
  mpfr_floor(t, t);
  long r = mpfr_get_si(t, MPFR_RNDN);
  mpfr_clear(t);
  return r;
}

BigReal BigReal::canonical(long sig_digits) const {
  long work = std::max(sig_digits + 10, 20L);
  BigReal r = from_decimal(to_decimal(sig_digits), work, sig_digits);
  return r;
}

namespace {
inline long res_work(const BigReal& a, const BigReal& b) {
  return std::max(a.work_digits(), b.work_digits());
}
inline long res_acc(const BigReal& a, const BigReal& b, long work) {
  return std::max(0L, std::min({a.acc_digits(), b.acc_digits(), work}));
}
}  // namespace

#define STLJ_BINOP(op, fn)                                          \
  BigReal operator op(const BigReal& a, const BigReal& b) {        \
    BigReal r(res_work(a, b));                                      \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                       \
    r.set_acc_digits(res_acc(a, b, r.work_digits()));               \
    return r;                                                       \
  }

STLJ_BINOP(+, mpfr_add)
STLJ_BINOP(-, mpfr_sub)
STLJ_BINOP(*, mpfr_mul)
STLJ_BINOP(/, mpfr_div)
#undef STLJ_BINOP

BigReal operator-(const BigReal& a) {
  BigReal r(a.work_digits());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  r.set_acc_digits(a.acc_digits());
  return r;
}

BigReal& BigReal::operator+=(const BigReal& b) { return *this = *this + b; }
BigReal& BigReal::operator-=(const BigReal& b) { return *this = *this - b; }
BigReal& BigReal::operator*=(const BigReal& b) { return *this = *this * b; }
BigReal& BigReal::operator/=(const BigReal& b) { return *this = *this / b; }

int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()); }

#define STLJ_UNFN(name, fn)                        \
  BigReal name(const BigReal& x) {                 \
    BigReal r(x.work_digits());                    \
    fn(r.raw(), x.raw(), MPFR_RNDN);               \
    r.set_acc_digits(x.acc_digits());              \
    return r;                                      \
  }

STLJ_UNFN(abs, mpfr_abs)
STLJ_UNFN(log, mpfr_log)
STLJ_UNFN(log2, mpfr_log2)
STLJ_UNFN(exp, mpfr_exp)
#undef STLJ_UNFN

BigReal floor(const BigReal& x) {
  BigReal r(x.work_digits());
  mpfr_floor(r.raw(), x.raw());
  r.set_acc_digits(x.acc_digits());
  return r;
}

BigReal pow_si(const BigReal& base, long e) {
  BigReal r(base.work_digits());
  mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
  r.set_acc_digits(base.acc_digits());
  return r;
}

BigReal pow_mpq(const BigReal& base, const mpq_class& e) {
  BigReal r(base.work_digits());
  BigReal ee = BigReal::from_mpq(e, base.work_digits());
  mpfr_pow(r.raw(), base.raw(), ee.raw(), MPFR_RNDN);
  r.set_acc_digits(base.acc_digits());
  return r;
}

BigReal mul_mpz(const BigReal& a, const mpz_class& m) {
  BigReal r(a.work_digits());
  mpfr_mul_z(r.raw(), a.raw(), m.get_mpz_t(), MPFR_RNDN);
  r.set_acc_digits(a.acc_digits());
  return r;
}

BigReal div_mpz(const BigReal& a, const mpz_class& d) {
  BigReal r(a.work_digits());
  mpfr_div_z(r.raw(), a.raw(), d.get_mpz_t(), MPFR_RNDN);
  r.set_acc_digits(a.acc_digits());
  return r;
}

}  // namespace stieltjes
