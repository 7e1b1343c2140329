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

#include "stieltjes/alpha.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "stieltjes/errors.hpp"

namespace stieltjes {

AlphaSeries alpha_coeffs(const PhiTable& table, long k_max) {
  if (k_max < 0) throw ConfigError("alpha series needs k_max >= 0");
  if (k_max >= table.count())
    throw InsufficientNodes("alpha_" + std::to_string(k_max) + " needs " +
                            std::to_string(k_max + 1) + " nodes, table has " +
                            std::to_string(table.count()));

  AlphaSeries out;
  out.eps = table.eps;
  out.node_acc = table.node_acc;
  out.alpha.reserve(k_max + 1);

  // Accumulate above the binomial growth so rounding stays below the
  // inherent node-noise floor.
  const long work =
      table.node_acc + static_cast<long>(std::ceil(0.30103 * k_max)) + 16;

  std::vector<mpz_class> binom{mpz_class(1)};
  binom.reserve(k_max + 1);
  BigReal acc = BigReal::from_long(0, work);
  BigReal term = acc;

  for (long k = 0; k <= k_max; ++k) {
    if (k > 0) {
      binom.push_back(1);
      for (long j = k - 1; j >= 1; --j) binom[j] += binom[j - 1];
    }
    mpfr_set_zero(acc.raw(), 1);
    for (long j = 0; j <= k; ++j) {
      mpfr_mul_z(term.raw(), table.nodes[j].raw(), binom[j].get_mpz_t(),
                 MPFR_RNDN);
      if (j & 1)
        mpfr_sub(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
      else
        mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
    }
    BigReal a = BigReal::from_long(0, work);
    mpfr_set(a.raw(), acc.raw(), MPFR_RNDN);
    long ak = table.node_acc - static_cast<long>(std::ceil(0.30103 * k)) - 2;
    a.set_acc_digits(std::max(0L, ak));
    out.alpha.push_back(std::move(a));
  }
  return out;
}

}  // namespace stieltjes
