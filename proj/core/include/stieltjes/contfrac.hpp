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

#include <string>
#include <utility>
#include <vector>

#include "stieltjes/bigreal.hpp"

namespace stieltjes {

enum class CfTermination { accuracy_limit, nmax_limit, exact_rational };

// Regular continued fraction [a0; a1, a2, ...]. Every quotient emitted is
// stable: recomputing from anywhere inside the input's uncertainty interval
// yields the same value, so nothing past the precision horizon leaks in.
struct ContinuedFraction {
  mpz_class a0;
  std::vector<mpz_class> quotients;  // a_1..a_l, all >= 1
  long source_acc = 0;               // trusted digits of the input
  CfTermination terminated_by = CfTermination::accuracy_limit;

  long size() const { return static_cast<long>(quotients.size()); }
};

// Exact convergents P_k/Q_k, k = 0..l, from the standard recurrence seeded
// P_{-1}=1, Q_{-1}=0, P_0=a0, Q_0=1.
struct ConvergentSeq {
  std::vector<std::pair<mpz_class, mpz_class>> pairs;

  long size() const { return static_cast<long>(pairs.size()); }
};

// r - floor(r). Accuracy follows the decimal point: absolute precision is
// unchanged, so the significant count shifts by the lost integer digits.
BigReal frac_part(const BigReal& r);

// Expansion of a real known to source_acc digits. Quotients come from a
// joint Euclid walk on [r - u, r + u] (u = half a unit in the last trusted
// digit) and stop at the first disagreement, at Q_k^2 > 10^source_acc, or
// at nmax when given (nmax <= 0 means no quotient-count limit).
ContinuedFraction contfrac(const BigReal& r, long nmax = 0);

// Exact rational input: plain Euclid, canonical form (final quotient >= 2),
// terminated_by = exact_rational.
ContinuedFraction contfrac(const mpq_class& r, long nmax = 0);

ConvergentSeq convergents(const ContinuedFraction& cf);

// One structured text record per fraction:
//   { "n": <index or label>, "acc": <digits>, "a": [a0, a1, ...] }
// Quotients that do not fit in 64 bits are written as decimal strings; the
// loader accepts both and round-trips exactly.
void save_contfrac(const ContinuedFraction& cf, long index,
                   const std::string& path);
void save_contfrac(const ContinuedFraction& cf, const std::string& label,
                   const std::string& path);
ContinuedFraction load_contfrac(const std::string& path,
                                std::string* id = nullptr);

}  // namespace stieltjes
