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

#include "stieltjes/bigreal.hpp"
#include "stieltjes/phi_table.hpp"

namespace stieltjes {

// Forward differences of the node table:
//   alpha[k] = sum_{j=0..k} (-1)^j C(k,j) phi(1 + j*eps).
//
// The alternating sum cancels: |alpha_k| shrinks fast while the binomial
// weights grow like 2^k, so alpha[k] keeps roughly
// node_acc - ceil(k*log10(2)) - 2 certified digits. Each element's
// acc_digits() records that honestly (clamped at zero once the value is
// pure noise).
struct AlphaSeries {
  mpq_class eps;
  long node_acc = 0;
  std::vector<BigReal> alpha;

  long k_max() const { return static_cast<long>(alpha.size()) - 1; }
};

AlphaSeries alpha_coeffs(const PhiTable& table, long k_max);

}  // namespace stieltjes
