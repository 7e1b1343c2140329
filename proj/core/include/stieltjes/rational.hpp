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
#include <string_view>

namespace stieltjes {

// Parses "p/q" or "p" into a canonical positive rational.
mpq_class parse_rational(std::string_view s);
// "p/q" (always with denominator, canonical form).
std::string rational_str(const mpq_class& q);

mpz_class factorial(unsigned long n);
mpz_class pow_z(const mpz_class& base, unsigned long e);
// 10^e as an exact integer.
mpz_class pow10_z(unsigned long e);

// log10 of |q|, as a double (for planning; q != 0).
double log10_mpq(const mpq_class& q);
double log10_mpz(const mpz_class& z);

}  // namespace stieltjes
