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

#include <stdexcept>

#include "doctest.h"
#include "stieltjes/rational.hpp"
#include "stieltjes/stirling.hpp"

using namespace stieltjes;

TEST_CASE("triangle base values (signed, first kind)") {
  StirlingTriangle t(6);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(2, 1) == -1);
  CHECK(t.at(3, 1) == 2);
  CHECK(t.at(3, 2) == -3);
  CHECK(t.at(4, 2) == 11);
  CHECK(t.at(5, 3) == 35);
  CHECK(t.at(6, 3) == -225);
  CHECK(t.at(6, 6) == 1);
  // outside-row entries are zero
  CHECK(t.at(4, 0) == 0);
  CHECK(t.at(4, 5) == 0);
  CHECK_THROWS_AS(t.at(7, 1), std::out_of_range);
}

TEST_CASE("rows are coefficients of the falling factorial") {
  // sum_i s(k,i) x^i = x (x-1) ... (x-k+1), checked exactly at integer x.
  StirlingTriangle t(6);
  for (long k = 0; k <= 6; ++k) {
    for (long x = -3; x <= 8; ++x) {
      mpz_class lhs = 0, xpow = 1;
      for (long i = 0; i <= k; ++i) {
        lhs += t.at(k, i) * xpow;
        xpow *= x;
      }
      mpz_class rhs = 1;
      for (long j = 0; j < k; ++j) rhs *= (x - j);
      CAPTURE(k);
      CAPTURE(x);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("absolute row sums are factorials") {
  StirlingTriangle t(12);
  for (long k = 0; k <= 12; ++k) {
    mpz_class s = 0;
    for (long i = 0; i <= k; ++i) s += abs(t.at(k, i));
    CHECK(s == factorial(static_cast<unsigned long>(k)));
  }
}

TEST_CASE("row stream reproduces the triangle under a column cap") {
  const long i_cap = 9;
  StirlingTriangle t(40);
  StirlingRowStream rs(i_cap);
  CHECK(rs.k() == 0);
  CHECK(rs.at(0) == 1);
  for (long k = 1; k <= 40; ++k) {
    rs.advance();
    CHECK(rs.k() == k);
    for (long i = 0; i <= i_cap; ++i) {
      CAPTURE(k);
      CAPTURE(i);
      CHECK(rs.at(i) == t.at(k, i));
    }
  }
}

TEST_CASE("recurrence holds inside the triangle") {
  StirlingTriangle t(20);
  for (long k = 2; k <= 20; ++k) {
    for (long i = 1; i <= k; ++i) {
      CHECK(t.at(k, i) == t.at(k - 1, i - 1) - (k - 1) * t.at(k - 1, i));
    }
  }
}
