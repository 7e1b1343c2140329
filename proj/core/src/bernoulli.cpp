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

#include "stieltjes/bernoulli.hpp"

#include <algorithm>

#include "stieltjes/rational.hpp"

namespace stieltjes {

const mpq_class& BernoulliCache::get(unsigned long n) {
  if (n == 1) return b1_;
  if (n % 2 == 1) return zero_;
  ensure(n);
  return even_[n / 2];
}

void BernoulliCache::ensure(unsigned long n) {
  unsigned long need = n / 2 + 1;
  if (even_.size() < need) grow(std::max(need, even_.size() * 2));
}

void BernoulliCache::grow(unsigned long even_count) {
  // Tangent numbers T_1..T_m by the in-place triangle recurrence, then
  // B_{2k} = (-1)^(k-1) * 2k * T_k / (4^k (4^k - 1)).
  unsigned long m = even_count;  // need T_1..T_{m-1} for B_2..B_{2(m-1)}
  std::vector<mpz_class> t(m + 1);
  if (m >= 1) t[1] = 1;
  for (unsigned long k = 2; k <= m; ++k) t[k] = t[k - 1] * (k - 1);
  for (unsigned long k = 2; k <= m; ++k) {
    for (unsigned long j = k; j <= m; ++j) {
      t[j] = t[j - 1] * (j - k) + t[j] * (j - k + 2);
    }
  }
  even_.assign(even_count, mpq_class(0));
  even_[0] = 1;
  for (unsigned long k = 1; k < even_count; ++k) {
    mpz_class four_k = pow_z(4, k);
    mpz_class den = four_k * (four_k - 1);
    mpq_class b(mpz_class(2 * k) * t[k], den);
    b.canonicalize();
    if (k % 2 == 0) b = -b;
    even_[k] = b;
  }
}

}  // namespace stieltjes
