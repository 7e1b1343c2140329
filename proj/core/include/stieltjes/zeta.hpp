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

#include "stieltjes/bernoulli.hpp"
#include "stieltjes/bigreal.hpp"

namespace stieltjes {

// Guard-digit policy shared by all certified producers.
inline long guard_digits(long target) {
  long tenth = (target + 9) / 10;
  return tenth > 10 ? tenth : 10;
}

// zeta(s) for real s != 1 by split summation plus Bernoulli corrections with
// a runtime-verified remainder bound (|remainder| <= first omitted term).
// Certifies absolute error <= 10^-(abs_digits).
BigReal zeta_abs(const BigReal& s, long abs_digits, BernoulliCache& bern);

// zeta(s) with acc_digits >= target_digits (significant). Throws PoleError at
// s = 1, PrecisionInfeasible if the remainder bound cannot be met.
BigReal zeta_real(const BigReal& s, long target_digits, BernoulliCache& bern);
BigReal zeta_real(const BigReal& s, long target_digits);
BigReal zeta_real(const mpq_class& s, long target_digits);

// phi(s) = (s-1) * zeta(s), regular at the pole with phi(1) = 1.
BigReal phi(const BigReal& s, long target_digits, BernoulliCache& bern);
BigReal phi(const BigReal& s, long target_digits);
BigReal phi(const mpq_class& s, long target_digits);

}  // namespace stieltjes
