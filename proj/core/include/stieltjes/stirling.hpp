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

#include <vector>

namespace stieltjes {

// Signed Stirling numbers of the first kind, s(k, i), built exactly from
// s(k, i) = s(k-1, i-1) - (k-1) s(k-1, i), s(0, 0) = 1.
//
// The full triangle is quadratic in memory; use it for small k only. The
// streaming variant below keeps one row truncated to a fixed column range
// and is what the high-order machinery iterates with.
class StirlingTriangle {
 public:
  explicit StirlingTriangle(long k_max);

  long k_max() const { return k_max_; }

  // s(k, i); zero outside 0 <= i <= k. k must be within the triangle.
  const mpz_class& at(long k, long i) const;

 private:
  long k_max_;
  std::vector<std::vector<mpz_class>> rows_;
  mpz_class zero_;
};

// One row s(k, 0..i_cap) at a time, advanced in place. Columns above i_cap
// are dropped; the capped recurrence never reads them.
class StirlingRowStream {
 public:
  explicit StirlingRowStream(long i_cap);

  long k() const { return k_; }
  long i_cap() const { return i_cap_; }

  // s(k(), i); zero outside 0 <= i <= min(k(), i_cap()).
  const mpz_class& at(long i) const;

  void advance();

 private:
  long i_cap_;
  long k_ = 0;
  std::vector<mpz_class> row_;
  mpz_class zero_;
  mpz_class tmp_;
};

}  // namespace stieltjes
