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

#include <mpfr.h>

#include "doctest.h"
#include "oracle_values.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/zeta.hpp"
#include "test_util.hpp"

using namespace stieltjes;
using testutil::agree_digits;
using testutil::ref;

namespace {
// Independent evaluation through the mpfr library routine.
BigReal mpfr_zeta_at(const mpq_class& s, long digits) {
  BigReal arg = BigReal::from_mpq(s, digits + 20);
  BigReal out(digits + 20);
  mpfr_zeta(out.raw(), arg.raw(), MPFR_RNDN);
  out.set_acc_digits(digits);
  return out;
}
}  // namespace

TEST_CASE("zeta(2) against frozen digits and pi^2/6") {
  BigReal z = zeta_real(mpq_class(2), 60);
  CHECK(agree_digits(z, ref(oracle::kZeta2_55), 53));
  BigReal p = BigReal::pi(90);
  BigReal pi2_6 = p * p / BigReal::from_long(6, 90);
  CHECK(agree_digits(z, pi2_6, 55));
}

TEST_CASE("zeta(3) and zeta(3/2) against frozen digits") {
  CHECK(agree_digits(zeta_real(mpq_class(3), 45), ref(oracle::kZeta3_40), 38));
  CHECK(agree_digits(zeta_real(mpq_class(3, 2), 45), ref(oracle::kZeta3Half_40),
                     38));
}

TEST_CASE("zeta on and left of the critical line") {
  CHECK(agree_digits(zeta_real(mpq_class(1, 2), 45), ref(oracle::kZetaHalf_40),
                     38));
  CHECK(agree_digits(zeta_real(mpq_class(-1, 2), 45),
                     ref(oracle::kZetaMinusHalf_40), 38));
  // zeta(0) = -1/2 and zeta(-1) = -1/12 exactly.
  CHECK(agree_digits(zeta_real(mpq_class(0), 40),
                     BigReal::from_mpq(mpq_class(-1, 2), 160), 38));
  CHECK(agree_digits(zeta_real(mpq_class(-1), 40),
                     BigReal::from_mpq(mpq_class(-1, 12), 160), 38));
}

TEST_CASE("zeta matches the mpfr library on a grid") {
  BernoulliCache bern;
  for (int num = -7; num <= 39; num += 2) {
    mpq_class s(num, 4);  // skip s = 1 (num = 4 is even, never hit)
    CAPTURE(num);
    BigReal ours = zeta_real(s, 50);
    BigReal theirs = mpfr_zeta_at(s, 60);
    CHECK(agree_digits(ours, theirs, 45));
  }
}

TEST_CASE("requesting more digits refines, does not disturb, the prefix") {
  mpq_class s(11, 10);
  BigReal lo = zeta_real(s, 40);
  BigReal hi = zeta_real(s, 80);
  CHECK(agree_digits(lo, hi, 38));
}

TEST_CASE("pole is rejected") {
  CHECK_THROWS_AS(zeta_real(mpq_class(1), 30), PoleError);
}

TEST_CASE("phi removes the pole: phi(1) = 1 and phi(1.5) matches") {
  BigReal at1 = phi(mpq_class(1), 50);
  CHECK(agree_digits(at1, BigReal::from_long(1, 200), 48));
  // phi(3/2) = (1/2) zeta(3/2).
  CHECK(agree_digits(phi(mpq_class(3, 2), 45), ref(oracle::kHalfZeta3Half_40),
                     38));
}

TEST_CASE("phi BigReal overload agrees with the rational overload") {
  BernoulliCache bern;
  mpq_class s(21, 20);
  BigReal a = phi(s, 45);
  BigReal b = phi(BigReal::from_mpq(s, 200), 45, bern);
  CHECK(agree_digits(a, b, 42));
}

TEST_CASE("guard_digits floor and growth") {
  CHECK(guard_digits(1) == 10);
  CHECK(guard_digits(100) == 10);
  CHECK(guard_digits(101) == 11);
  CHECK(guard_digits(1000) >= 100);
}
