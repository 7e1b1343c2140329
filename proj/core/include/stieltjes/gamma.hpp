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

#include "stieltjes/alpha.hpp"
#include "stieltjes/bigreal.hpp"
#include "stieltjes/stirling.hpp"

namespace stieltjes {

// One generalized Euler constant gamma_n (gamma_0 is the Euler-Mascheroni
// constant), with the truncation index and the certified digit count that
// the error model stands behind.
struct StieltjesValue {
  long n = 0;
  mpq_class eps;
  long k0 = 0;
  long claimed_acc = 0;
  BigReal value = BigReal::from_long(0, 16);
};

// Sizing for a whole run: how far the alpha series must reach and how
// accurate the nodes feeding it have to be so every gamma_0..gamma_n_max
// comes out with target_digits certified. Derived from the calibrated
// alpha-decay model; the pipeline re-plans if the delivered accuracy falls
// short.
struct GammaPlan {
  long k_cut = 0;       // alpha index the runs are expected to stop below
  long node_count = 0;  // phi nodes to tabulate (includes saturation slack)
  long node_acc = 0;    // digits per node
};

GammaPlan plan_gamma_run(long n_max, long target_digits, const mpq_class& eps);

// gamma_n = sum_{k>n} beta_nk alpha_k with
// beta_nk = (-1)^(n+k) (n!/k!) s(k, n+1) / eps^(n+1). The sum stops at the
// first k where terms sink below the alpha noise floor (the k0 rule);
// claimed_acc combines the largest neglected term with the accumulated
// alpha error. Throws a precision error when fewer than 1 digit certifies.
//
// extend_past keeps adding terms past the stopping index (the reported k0
// and claimed_acc are frozen at the stop) — exists so saturation can be
// exercised directly.
std::vector<StieltjesValue> gamma_batch(long n_max, const AlphaSeries& alphas,
                                        long extend_past = 0);

StieltjesValue gamma_n(long n, const AlphaSeries& alphas,
                       const StirlingTriangle& stirling);

// Slowly converging historical series for gamma_n: the m-th partial sum of
//   sum_k (ln k)^n / k  -  (ln m)^(n+1)/(n+1).
// A low-accuracy independent reference, not a certified value; its distance
// from gamma_n shrinks like (ln m)^n/(2m).
BigReal gamma_direct_oracle(long n, long m, long target_digits);

// a_k = sum_j (-1)^j C(k,j) (2j+1) zeta(2j+2) evaluated both through the
// zeta engine and through the closed Bernoulli form
// (1/2) sum_j C(k,j) (2j+1) (2pi)^(2j+2) B_{2j+2}/(2j+2)!.
// Returns the two independently computed values.
std::pair<BigReal, BigReal> A_k_crosscheck(long k, long target_digits);

// Text persistence: "# stieltjes n=<n> eps=<p>/<q> k0=<k0> acc=<acc>" then
// the decimal string at claimed_acc digits.
void save_stieltjes(const StieltjesValue& v, const std::string& path);
StieltjesValue load_stieltjes(const std::string& path);

}  // namespace stieltjes
