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

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

namespace stieltjes {

// Binary precision needed to hold `digits` significant decimal digits, plus
// headroom so decimal->binary->decimal round-trips are identities.
long digits_to_bits(long digits);

// Arbitrary-precision real with accuracy bookkeeping.
//
// work_digits: working precision (decimal digits backing the binary mantissa).
// acc_digits:  significant decimal digits the producer certifies as trusted;
//              0 <= acc_digits <= work_digits. Arithmetic propagates the
//              pessimistic min of operand accuracies; certified producers
//              (zeta evaluation, gamma assembly, ...) overwrite it with a
//              value derived from their own error bounds.
class BigReal {
 public:
  BigReal();
  explicit BigReal(long work_digits);
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  static BigReal from_long(long v, long work_digits);
  static BigReal from_mpz(const mpz_class& v, long work_digits);
  static BigReal from_mpq(const mpq_class& v, long work_digits);
  static BigReal from_double(double v, long work_digits);
  // Parses "[-]ddd[.ddd][e[+-]xx]" with correct rounding. acc_digits is set to
  // the count of significant digits in the string unless overridden.
  static BigReal from_decimal(std::string_view dec, long work_digits, long acc_digits = -1);
  static BigReal pi(long work_digits);

  long work_digits() const { return work_digits_; }
  long acc_digits() const { return acc_digits_; }
  void set_acc_digits(long a);

  // Exact value as a rational (every finite BigReal is dyadic).
  mpq_class to_mpq() const;
  // Correctly rounded decimal string with `sig_digits` significant digits.
  // Fixed-point form for moderate exponents, scientific otherwise.
  std::string to_decimal(long sig_digits) const;
  double to_double() const;

  int sign() const;  // -1, 0, +1
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_nan() const { return mpfr_nan_p(v_); }
  // floor(log10 |x|); x must be nonzero.
  long ilog10_abs() const;

  // Round-trips the value through its `sig_digits`-digit decimal form so that
  // in-memory use and file round-trips see identical bits.
  BigReal canonical(long sig_digits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);

  BigReal& operator+=(const BigReal& b);
  BigReal& operator-=(const BigReal& b);
  BigReal& operator*=(const BigReal& b);
  BigReal& operator/=(const BigReal& b);

  friend int cmp(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, const BigReal& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }

 private:
  mpfr_t v_;
  long work_digits_;
  long acc_digits_;
};

BigReal abs(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log2(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal pow_si(const BigReal& base, long e);
// base^(p/q) for base > 0.
BigReal pow_mpq(const BigReal& base, const mpq_class& e);
BigReal mul_mpz(const BigReal& a, const mpz_class& m);
BigReal div_mpz(const BigReal& a, const mpz_class& d);

}  // namespace stieltjes
