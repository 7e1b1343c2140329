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

#include "stieltjes/phi_table.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "stieltjes/bernoulli.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/rational.hpp"
#include "stieltjes/worker_pool.hpp"
#include "stieltjes/zeta.hpp"

namespace stieltjes {
namespace {

// Block sizes are fixed so block boundaries (and therefore every rounding
// sequence) do not depend on the worker count.
constexpr long kNodeBlock = 16;
constexpr long kCorrBlock = 8;
constexpr long kPowBlock = 64;

struct EmJointPlan {
  long n = 0;       // main-sum length
  long p = 0;       // planned tail terms
  long p_hard = 0;  // runtime cap before giving up
};

// Smallest p with 2p*log10(2*pi*e*N / (2p + s_max)) >= digits, i.e. the
// first Euler-Maclaurin tail term drops below 10^-digits. Returns -1 when
// the tail stops shrinking before that (N too small for this accuracy).
long solve_terms(long n, double digits, double s_max) {
  const double c = 2.0 * M_PI * M_E * static_cast<double>(n);
  long p = 8;
  for (;;) {
    double q = 2.0 * p + s_max;
    if (q / (2.0 * M_PI * n) > 0.72) return -1;
    if (2.0 * p * std::log10(c / q) >= digits) break;
    p *= 2;
  }
  long lo = p / 2, hi = p;
  while (lo + 1 < hi) {
    long mid = lo + (hi - lo) / 2;
    double q = 2.0 * mid + s_max;
    if (2.0 * mid * std::log10(c / q) >= digits && q / (2.0 * M_PI * n) <= 0.72)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

EmJointPlan plan_joint(double need_digits, double s_max) {
  // Peak accuracy of the tail at fixed N is about 2*pi*log10(e)*N digits;
  // scan a few multiples of that floor and keep the cheapest split. The
  // main sum costs ~2.4 multiplies per node per k (ladder plus amortized
  // block-start power), the tail ~4 per term.
  const double base = need_digits / 2.7288;
  EmJointPlan best;
  double best_cost = 0;
  for (double f : {1.25, 1.6, 2.1, 2.8, 3.7}) {
    long n = static_cast<long>(
        std::ceil(std::max({base * f, s_max / 4.0, 16.0})));
    long p = solve_terms(n, need_digits, s_max);
    if (p < 0) continue;
    double cost = 2.4 * static_cast<double>(n) + 4.0 * static_cast<double>(p);
    if (best.n == 0 || cost < best_cost) {
      best_cost = cost;
      best.n = n;
      best.p = p;
    }
  }
  if (best.n == 0)
    throw PrecisionInfeasible(
        "no Euler-Maclaurin split reaches the requested node accuracy");
  long div_guard =
      static_cast<long>((0.9 * 2.0 * M_PI * best.n - s_max) / 2.0);
  best.p_hard = std::min(2 * best.p + 64, std::max(best.p, div_guard));
  return best;
}

}  // namespace

PhiTable tabulate_phi_nodes(const mpq_class& eps, long count,
                            long target_digits, int workers) {
  if (count < 1) throw ConfigError("node count must be >= 1");
  if (sgn(eps) <= 0) throw ConfigError("eps must be positive");
  if (target_digits < 1) throw ConfigError("target_digits must be >= 1");

  PhiTable out;
  out.eps = eps;
  out.eps.canonicalize();
  out.node_acc = target_digits;

  std::vector<BigReal> nodes(count, BigReal::from_long(0, target_digits + 10));
  {
    BigReal one = BigReal::from_long(1, target_digits + 10);
    one.set_acc_digits(target_digits);
    nodes[0] = one.canonical(target_digits);
  }
  if (count == 1) {
    out.nodes = std::move(nodes);
    return out;
  }

  mpq_class smax_q = 1 + (count - 1) * out.eps;
  const double s_max = mpq_get_d(smax_q.get_mpq_t());
  const double mag_pad = std::max(0.0, std::ceil(std::log10(s_max + 1.0)));
  // zeta grows like 1/(s-1) at the leftmost node; the work precision has to
  // carry that magnitude even though phi itself stays O(s_max).
  const double pole_pad = std::max(0.0, std::ceil(-log10_mpq(out.eps)));

  const double a_chk = static_cast<double>(target_digits) + 3.0 + mag_pad;
  const long work = target_digits + guard_digits(target_digits) +
                    static_cast<long>(mag_pad + pole_pad) + 12;

  const EmJointPlan plan = plan_joint(a_chk, s_max);
  const long n_sum = plan.n;

  // B_{2i}/(2i)! snapshot, shared read-only by all workers.
  std::vector<BigReal> bf;
  bf.reserve(plan.p_hard + 1);
  bf.push_back(BigReal::from_long(0, work));
  {
    BernoulliCache bern;
    bern.ensure(2 * plan.p_hard);
    mpz_class fact(1);
    for (long i = 1; i <= plan.p_hard; ++i) {
      fact *= 2 * i - 1;
      fact *= 2 * i;
      bf.push_back(div_mpz(BigReal::from_mpq(bern.get(2 * i), work), fact));
    }
  }

  // v[k] = k^(-eps); the node ladder multiplies these up.
  std::vector<BigReal> v(n_sum, BigReal::from_long(0, work));
  BigReal meps = BigReal::from_mpq(-out.eps, work);
  parallel_blocks(workers, n_sum - 1, kPowBlock, [&](long lo, long hi) {
    BigReal kf = BigReal::from_long(0, work);
    for (long i = lo; i < hi; ++i) {
      long k = i + 1;
      mpfr_set_si(kf.raw(), k, MPFR_RNDN);
      mpfr_pow(v[k].raw(), kf.raw(), meps.raw(), MPFR_RNDN);
    }
  });

  // Main sums: zsum[j] = sum_{k<n_sum} k^(-s_j), built blockwise with a
  // ladder in j. Each block restarts from an exact power so the result is
  // independent of how blocks are scheduled.
  std::vector<BigReal> zsum(count, BigReal::from_long(1, work));
  parallel_blocks(workers, count - 1, kNodeBlock, [&](long lo, long hi) {
    BigReal w = BigReal::from_long(0, work);
    for (long k = 2; k < n_sum; ++k) {
      mpfr_pow_ui(w.raw(), v[k].raw(), static_cast<unsigned long>(lo + 1),
                  MPFR_RNDN);
      mpfr_div_ui(w.raw(), w.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
      for (long j = lo + 1; j <= hi; ++j) {
        mpfr_add(zsum[j].raw(), zsum[j].raw(), w.raw(), MPFR_RNDN);
        if (j < hi) mpfr_mul(w.raw(), w.raw(), v[k].raw(), MPFR_RNDN);
      }
    }
  });

  // Tail corrections and assembly, certified per node by the first omitted
  // term.
  BigReal nf = BigReal::from_long(n_sum, work);
  BigReal invn2 = BigReal::from_long(1, work) /
                  (BigReal::from_long(n_sum, work) * BigReal::from_long(n_sum, work));
  parallel_blocks(workers, count - 1, kCorrBlock, [&](long lo, long hi) {
    BigReal sf = BigReal::from_long(0, work);
    BigReal sm1 = sf, s_n = sf, npow = sf, poch = sf, term = sf, acc = sf,
            t2 = sf;
    for (long j = lo + 1; j <= hi; ++j) {
      mpq_class sm1_q = j * out.eps;
      mpq_class s_q = sm1_q + 1;
      mpfr_set_q(sf.raw(), s_q.get_mpq_t(), MPFR_RNDN);
      mpfr_set_q(sm1.raw(), sm1_q.get_mpq_t(), MPFR_RNDN);
      mpfr_neg(t2.raw(), sf.raw(), MPFR_RNDN);
      mpfr_pow(s_n.raw(), nf.raw(), t2.raw(), MPFR_RNDN);  // N^(-s)
      mpfr_mul(npow.raw(), s_n.raw(), nf.raw(), MPFR_RNDN);  // N^(1-s)
      mpfr_div(acc.raw(), npow.raw(), sm1.raw(), MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), zsum[j].raw(), MPFR_RNDN);
      mpfr_div_ui(t2.raw(), s_n.raw(), 2, MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), t2.raw(), MPFR_RNDN);

      mpfr_div(npow.raw(), s_n.raw(), nf.raw(), MPFR_RNDN);  // N^(-s-1)
      mpfr_set(poch.raw(), sf.raw(), MPFR_RNDN);              // (s)_1
      bool certified = false;
      for (long i = 1; i <= plan.p_hard; ++i) {
        mpfr_mul(term.raw(), bf[i].raw(), poch.raw(), MPFR_RNDN);
        mpfr_mul(term.raw(), term.raw(), npow.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
        bool below =
            mpfr_zero_p(term.raw()) ||
            static_cast<double>(mpfr_get_exp(term.raw())) * 0.301029995663981 <
                -a_chk;
        if (below) {
          certified = true;
          break;
        }
        mpfr_add_ui(t2.raw(), sf.raw(), static_cast<unsigned long>(2 * i - 1),
                    MPFR_RNDN);
        mpfr_mul(poch.raw(), poch.raw(), t2.raw(), MPFR_RNDN);
        mpfr_add_ui(t2.raw(), sf.raw(), static_cast<unsigned long>(2 * i),
                    MPFR_RNDN);
        mpfr_mul(poch.raw(), poch.raw(), t2.raw(), MPFR_RNDN);
        mpfr_mul(npow.raw(), npow.raw(), invn2.raw(), MPFR_RNDN);
      }
      if (!certified)
        throw PrecisionInfeasible(
            "Euler-Maclaurin tail failed to certify node accuracy");

      mpfr_mul(acc.raw(), acc.raw(), sm1.raw(), MPFR_RNDN);  // phi = (s-1) zeta
      BigReal val = BigReal::from_long(0, work);
      mpfr_set(val.raw(), acc.raw(), MPFR_RNDN);
      val.set_acc_digits(target_digits);
      nodes[j] = val.canonical(target_digits);
    }
  });

  out.nodes = std::move(nodes);
  return out;
}

void save_phi_table(const PhiTable& t, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << "# phi eps=" << t.eps.get_num() << "/" << t.eps.get_den()
    << " count=" << t.count() << " acc=" << t.node_acc << "\n";
  for (const auto& n : t.nodes) f << n.to_decimal(t.node_acc) << "\n";
  f.flush();
  if (!f) throw std::runtime_error("short write to " + path);
}

PhiTable load_phi_table(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CacheCorrupt("cannot open phi table " + path);
  std::string header;
  if (!std::getline(f, header)) throw CacheCorrupt("empty phi table " + path);
  std::istringstream hs(header);
  std::string hash, tag, epstok, counttok, acctok;
  hs >> hash >> tag >> epstok >> counttok >> acctok;
  if (hash != "#" || tag != "phi" || epstok.rfind("eps=", 0) != 0 ||
      counttok.rfind("count=", 0) != 0 || acctok.rfind("acc=", 0) != 0)
    throw CacheCorrupt("bad phi table header in " + path);

  PhiTable t;
  long count = 0;
  try {
    t.eps = parse_rational(epstok.substr(4));
    count = std::stol(counttok.substr(6));
    t.node_acc = std::stol(acctok.substr(4));
  } catch (const std::exception&) {
    throw CacheCorrupt("bad phi table header in " + path);
  }
  if (count < 1 || t.node_acc < 1)
    throw CacheCorrupt("bad phi table header in " + path);

  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    try {
      t.nodes.push_back(
          BigReal::from_decimal(line, t.node_acc + 10, t.node_acc));
    } catch (const std::exception&) {
      throw CacheCorrupt("bad node value in " + path);
    }
  }
  if (t.count() != count) throw CacheCorrupt("phi table truncated: " + path);
  return t;
}

}  // namespace stieltjes
