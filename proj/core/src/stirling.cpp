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

#include "stieltjes/stirling.hpp"

#include <algorithm>
#include <stdexcept>

#include "stieltjes/errors.hpp"

namespace stieltjes {

StirlingTriangle::StirlingTriangle(long k_max) : k_max_(k_max), zero_(0) {
  if (k_max < 0) throw ConfigError("Stirling triangle needs k_max >= 0");
  rows_.resize(k_max + 1);
  rows_[0] = {mpz_class(1)};
  for (long k = 1; k <= k_max; ++k) {
    rows_[k].resize(k + 1);
    const auto& prev = rows_[k - 1];
    rows_[k][0] = 0;
    for (long i = 1; i < k; ++i)
      rows_[k][i] = prev[i - 1] - (k - 1) * prev[i];
    rows_[k][k] = 1;
  }
}

const mpz_class& StirlingTriangle::at(long k, long i) const {
  if (k < 0 || k > k_max_)
    throw std::out_of_range("Stirling row out of range");
  if (i < 0 || i > k) return zero_;
  return rows_[k][i];
}

StirlingRowStream::StirlingRowStream(long i_cap) : i_cap_(i_cap), zero_(0) {
  if (i_cap < 0) throw ConfigError("Stirling row cap must be >= 0");
  row_.resize(i_cap + 1);
  row_[0] = 1;
}

const mpz_class& StirlingRowStream::at(long i) const {
  if (i < 0 || i > i_cap_ || i > k_) return zero_;
  return row_[i];
}

void StirlingRowStream::advance() {
  const long km1 = k_;
  long top = std::min(k_ + 1, i_cap_);
  for (long i = top; i >= 1; --i) {
    // in place, descending: row_[i-1] still holds the previous row
    tmp_ = row_[i];
    tmp_ *= km1;
    row_[i] = row_[i - 1] - tmp_;
  }
  row_[0] *= -km1;
  ++k_;
}

}  // namespace stieltjes
