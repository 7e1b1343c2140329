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

// Exact Bernoulli numbers, convention B_1 = -1/2. Odd indices >= 3 are zero
// and never stored. Even values come from the integer tangent-number
// triangle; entirely exact-rational, no floating intermediates.
class BernoulliCache {
 public:
  // B_n as an exact rational. Grows the cache as needed.
  const mpq_class& get(unsigned long n);
  // Ensures B_0..B_n are available (amortizes the triangle recomputation).
  void ensure(unsigned long n);

 private:
  void grow(unsigned long even_count);
  std::vector<mpq_class> even_;  // even_[m] = B_{2m}
  mpq_class b1_{-1, 2};
  mpq_class zero_{0};
};

}  // namespace stieltjes
