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

#include "stieltjes/rational.hpp"

#include <cmath>

#include "stieltjes/errors.hpp"

namespace stieltjes {

mpq_class parse_rational(std::string_view s) {
  std::string str(s);
  if (str.empty()) throw ConfigError("empty rational");
  try {
    mpq_class q(str, 10);
    if (sgn(q.get_den()) == 0) throw ConfigError("zero denominator: '" + str + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ConfigError("unparseable rational: '" + str + "'");
  }
}

std::string rational_str(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class pow10_z(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

double log10_mpz(const mpz_class& z) {
  signed long exp2 = 0;
  double m = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log10(std::fabs(m)) + static_cast<double>(exp2) * 0.30102999566398120;
}

double log10_mpq(const mpq_class& q) {
  return log10_mpz(q.get_num()) - log10_mpz(q.get_den());
}

}  // namespace stieltjes
