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

#include "stieltjes/contfrac.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/rational.hpp"

namespace stieltjes {

using ordered_json = nlohmann::ordered_json;

BigReal frac_part(const BigReal& r) {
  if (r.is_nan()) throw ConfigError("frac_part of NaN");
  if (r.is_zero()) return r;
  const long pos = r.ilog10_abs() + 1 - r.acc_digits();
  BigReal f = r - floor(r);
  long acc;
  if (f.is_zero())
    acc = std::max(0L, -pos);
  else
    acc = std::max(0L, f.ilog10_abs() + 1 - pos);
  f.set_acc_digits(acc);
  return f;
}

ContinuedFraction contfrac(const BigReal& r, long nmax) {
  if (r.is_nan()) throw ConfigError("cannot expand NaN");
  const long acc = r.acc_digits();
  if (acc < 1) throw ConfigError("input carries no certified digits");

  ContinuedFraction cf;
  cf.source_acc = acc;

  const mpq_class rq = r.to_mpq();
  // half a unit in the last trusted decimal digit
  const long e = r.is_zero() ? 0 : r.ilog10_abs() + 1;
  mpq_class u;
  if (e - acc >= 0)
    u = mpq_class(pow10_z(e - acc)) / 2;
  else
    u = mpq_class(1, mpz_class(2 * pow10_z(acc - e)));
  const mpq_class lo_q = rq - u;
  const mpq_class hi_q = rq + u;

  // Joint Euclid on the interval, integer pairs only (no gcd churn):
  // lo = n1/d1, hi = n2/d2.
  mpz_class n1 = lo_q.get_num(), d1 = lo_q.get_den();
  mpz_class n2 = hi_q.get_num(), d2 = hi_q.get_den();
  mpz_class a1, r1, a2, r2, q_prev(0), q_cur(1), tmp, qsq;
  const mpz_class bound = pow10_z(acc);

  bool first = true;
  for (;;) {
    if (!first && nmax > 0 && cf.size() >= nmax) {
      cf.terminated_by = CfTermination::nmax_limit;
      return cf;
    }
    mpz_fdiv_qr(a1.get_mpz_t(), r1.get_mpz_t(), n1.get_mpz_t(),
                d1.get_mpz_t());
    mpz_fdiv_qr(a2.get_mpz_t(), r2.get_mpz_t(), n2.get_mpz_t(),
                d2.get_mpz_t());
    if (a1 != a2) break;  // quotient not determined by the precision
    if (first) {
      cf.a0 = a1;
      first = false;
    } else {
      cf.quotients.push_back(a1);
      tmp = a1 * q_cur + q_prev;
      q_prev = q_cur;
      q_cur = tmp;
      qsq = q_cur * q_cur;
      if (qsq > bound) break;  // 1/Q^2 below the input accuracy
    }
    if (sgn(r1) == 0 || sgn(r2) == 0) break;  // endpoint hit an integer
    // invert the fractional interval [r1/d1, r2/d2]
    tmp = d1;
    n1 = d2;
    d1 = r2;
    n2 = tmp;
    d2 = r1;
  }
  if (first) {
    // uncertainty straddles an integer: report the center's floor alone
    mpz_fdiv_q(cf.a0.get_mpz_t(), rq.get_num().get_mpz_t(),
               rq.get_den().get_mpz_t());
  }
  cf.terminated_by = CfTermination::accuracy_limit;
  return cf;
}

ContinuedFraction contfrac(const mpq_class& r, long nmax) {
  ContinuedFraction cf;
  mpq_class rc = r;
  rc.canonicalize();
  cf.source_acc = static_cast<long>(
      mpz_sizeinbase(rc.get_num().get_mpz_t(), 10) +
      mpz_sizeinbase(rc.get_den().get_mpz_t(), 10));

  mpz_class n = rc.get_num(), d = rc.get_den(), a, rem;
  mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  cf.a0 = a;
  while (sgn(rem) != 0) {
    if (nmax > 0 && cf.size() >= nmax) {
      cf.terminated_by = CfTermination::nmax_limit;
      return cf;
    }
    n = d;
    d = rem;
    mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    cf.quotients.push_back(a);
  }
  // canonical form: Euclid already guarantees the final quotient >= 2 when
  // the expansion is nontrivial, but normalize defensively.
  if (!cf.quotients.empty() && cf.quotients.back() == 1 &&
      cf.quotients.size() >= 2) {
    cf.quotients.pop_back();
    cf.quotients.back() += 1;
  } else if (cf.quotients.size() == 1 && cf.quotients.back() == 1) {
    cf.quotients.pop_back();
    cf.a0 += 1;
  }
  cf.terminated_by = CfTermination::exact_rational;
  return cf;
}

ConvergentSeq convergents(const ContinuedFraction& cf) {
  ConvergentSeq seq;
  seq.pairs.reserve(cf.size() + 1);
  mpz_class p_prev(1), q_prev(0), p = cf.a0, q(1), tp, tq;
  seq.pairs.emplace_back(p, q);
  for (const auto& a : cf.quotients) {
    tp = a * p + p_prev;
    tq = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = tp;
    q = tq;
    seq.pairs.emplace_back(p, q);
  }
  return seq;
}

namespace {

void push_quotient(ordered_json& arr, const mpz_class& z) {
  if (z.fits_slong_p())
    arr.push_back(static_cast<std::int64_t>(z.get_si()));
  else
    arr.push_back(z.get_str());
}

void save_impl(const ContinuedFraction& cf, ordered_json id,
               const std::string& path) {
  ordered_json j;
  j["n"] = std::move(id);
  j["acc"] = cf.source_acc;
  ordered_json arr = ordered_json::array();
  push_quotient(arr, cf.a0);
  for (const auto& a : cf.quotients) push_quotient(arr, a);
  j["a"] = std::move(arr);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << j.dump() << "\n";
  f.flush();
  if (!f) throw std::runtime_error("short write to " + path);
}

mpz_class quotient_from_json(const ordered_json& v) {
  if (v.is_number_integer()) return mpz_class(v.get<std::int64_t>());
  if (v.is_string()) return mpz_class(v.get<std::string>());
  throw CacheCorrupt("continued-fraction quotient has a bad type");
}

}  // namespace

void save_contfrac(const ContinuedFraction& cf, long index,
                   const std::string& path) {
  save_impl(cf, ordered_json(index), path);
}

void save_contfrac(const ContinuedFraction& cf, const std::string& label,
                   const std::string& path) {
  save_impl(cf, ordered_json(label), path);
}

ContinuedFraction load_contfrac(const std::string& path, std::string* id) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CacheCorrupt("cannot open continued fraction " + path);
  ordered_json j;
  try {
    f >> j;
  } catch (const std::exception&) {
    throw CacheCorrupt("bad continued-fraction record in " + path);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("acc") ||
      !j.contains("a") || !j["a"].is_array() || j["a"].empty() ||
      !j["acc"].is_number_integer())
    throw CacheCorrupt("bad continued-fraction record in " + path);

  ContinuedFraction cf;
  try {
    cf.source_acc = j["acc"].get<long>();
    const auto& arr = j["a"];
    cf.a0 = quotient_from_json(arr[0]);
    cf.quotients.reserve(arr.size() - 1);
    for (std::size_t i = 1; i < arr.size(); ++i) {
      mpz_class a = quotient_from_json(arr[i]);
      if (a < 1) throw CacheCorrupt("nonpositive quotient in " + path);
      cf.quotients.push_back(std::move(a));
    }
    if (id) *id = j["n"].is_string() ? j["n"].get<std::string>() : j["n"].dump();
  } catch (const CacheCorrupt&) {
    throw;
  } catch (const std::exception&) {
    throw CacheCorrupt("bad continued-fraction record in " + path);
  }
  if (cf.source_acc < 0)
    throw CacheCorrupt("bad continued-fraction record in " + path);
  return cf;
}

}  // namespace stieltjes
