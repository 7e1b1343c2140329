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

#include "doctest.h"
#include "stieltjes/bernoulli.hpp"

using namespace stieltjes;

namespace {
mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}
}  // namespace

TEST_CASE("first Bernoulli numbers") {
  BernoulliCache bern;
  CHECK(bern.get(0) == mpq_class(1));
  CHECK(bern.get(1) == mpq_class(-1, 2));
  CHECK(bern.get(2) == mpq_class(1, 6));
  CHECK(bern.get(4) == mpq_class(-1, 30));
  CHECK(bern.get(6) == mpq_class(1, 42));
  CHECK(bern.get(8) == mpq_class(-1, 30));
  CHECK(bern.get(10) == mpq_class(5, 66));
  CHECK(bern.get(12) == mpq_class(-691, 2730));
}

TEST_CASE("odd Bernoulli numbers past B_1 vanish") {
  BernoulliCache bern;
  for (unsigned long n = 3; n <= 41; n += 2) CHECK(bern.get(n) == 0);
}

TEST_CASE("defining recurrence: sum_{j=0}^{m} C(m+1,j) B_j = 0") {
  BernoulliCache bern;
  bern.ensure(40);
  for (unsigned long m = 1; m <= 40; ++m) {
    mpq_class acc = 0;
    for (unsigned long j = 0; j <= m; ++j) {
      acc += mpq_class(binom(m + 1, j)) * bern.get(j);
    }
    CAPTURE(m);
    CHECK(acc == 0);
  }
}

TEST_CASE("ensure is idempotent and get is stable across growth") {
  BernoulliCache bern;
  mpq_class b12 = bern.get(12);
  bern.ensure(80);
  bern.ensure(80);
  CHECK(bern.get(12) == b12);
  CHECK(bern.get(12) == mpq_class(-691, 2730));
  // B_20 = -174611/330
  CHECK(bern.get(20) == mpq_class(-174611, 330));
}
