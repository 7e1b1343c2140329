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

#include "stieltjes/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <locale>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stieltjes/alpha.hpp"
#include "stieltjes/cache.hpp"
#include "stieltjes/cfstats.hpp"
#include "stieltjes/contfrac.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/normality.hpp"
#include "stieltjes/phi_table.hpp"

namespace stieltjes {

namespace fs = std::filesystem;

RunCounters& RunCounters::operator+=(const RunCounters& o) {
  phi_nodes += o.phi_nodes;
  gammas += o.gammas;
  cfs += o.cfs;
  stats += o.stats;
  normalities += o.normalities;
  reports += o.reports;
  cache_hits += o.cache_hits;
  replans += o.replans;
  timings.insert(timings.end(), o.timings.begin(), o.timings.end());
  return *this;
}

namespace {

void validate(const RunConfig& cfg) {
  if (cfg.n_max < 0) throw ConfigError("n-max must be >= 0");
  if (cfg.target_digits < 1) throw ConfigError("digits must be >= 1");
  if (sgn(cfg.eps) <= 0) throw ConfigError("eps must be positive");
  if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
  if (cfg.cache_dir.empty()) throw ConfigError("cache directory not set");
  if (cfg.base < 2 || cfg.base > 36) throw ConfigError("base must be in [2,36]");
  if (cfg.kgram < 1) throw ConfigError("kgram must be >= 1");
  if (cfg.m_start < 1) throw ConfigError("m-start must be >= 1");
  if (!cfg.stop_accuracy && cfg.nmax_quotients < 1)
    throw ConfigError("nmax stop policy needs a positive quotient cap");
}

// Per-config namespace inside the cache dir so runs with different eps or
// digits never collide on file names.
std::string run_tag(const RunConfig& cfg) {
  std::ostringstream os;
  os << "e" << cfg.eps.get_num() << "-" << cfg.eps.get_den() << "-d" << cfg.target_digits;
  return os.str();
}

std::string cf_kind(const RunConfig& cfg) {
  return cfg.stop_accuracy ? std::string("cf")
                           : "cf-nmax" + std::to_string(cfg.nmax_quotients);
}
std::string stats_kind(const RunConfig& cfg) {
  return cf_kind(cfg) + "-stats-m" + std::to_string(cfg.m_start);
}
std::string digits_kind(const RunConfig& cfg) {
  return "digits-b" + std::to_string(cfg.base) + "-k" + std::to_string(cfg.kgram);
}

CacheKey gamma_key(const RunConfig& cfg, long n) {
  return {"gamma", n, cfg.eps, cfg.target_digits};
}
CacheKey cf_key(const RunConfig& cfg, long n) {
  return {cf_kind(cfg), n, cfg.eps, cfg.target_digits};
}
CacheKey stats_key(const RunConfig& cfg, long n) {
  return {stats_kind(cfg), n, cfg.eps, cfg.target_digits};
}
CacheKey digits_key(const RunConfig& cfg, long n) {
  return {digits_kind(cfg), n, cfg.eps, cfg.target_digits};
}

// Locale-independent fixed formatting with 6 decimals.
std::string fmt6(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}
std::string fmt6e(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::scientific << std::setprecision(6) << v;
  return os.str();
}

struct StageTimer {
  RunCounters& c;
  std::string name;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  StageTimer(RunCounters& counters, std::string stage) : c(counters), name(std::move(stage)) {}
  ~StageTimer() {
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.timings.emplace_back(name, dt);
  }
};

struct Ctx {
  const RunConfig& cfg;
  CacheIndex cache;
  RunCounters counters;
  std::string tag;
  std::vector<std::optional<StieltjesValue>> gam;
  std::vector<std::optional<ContinuedFraction>> cfs;

  explicit Ctx(const RunConfig& c)
      : cfg(c),
        cache(c.cache_dir),
        tag(run_tag(c)),
        gam(static_cast<std::size_t>(c.n_max) + 1),
        cfs(static_cast<std::size_t>(c.n_max) + 1) {
    fs::create_directories(c.cache_dir / tag);
  }

  fs::path abs_of(const std::string& rel) const { return cfg.cache_dir / rel; }
};

PhiTable ensure_phi(Ctx& ctx, const GammaPlan& plan) {
  StageTimer t(ctx.counters, "tabulate");
  CacheKey key{"phi", plan.node_count, ctx.cfg.eps, plan.node_acc};
  if (auto p = ctx.cache.lookup(key)) {
    PhiTable table = load_phi_table(p->string());
    if (table.count() != plan.node_count || table.node_acc != plan.node_acc ||
        table.eps != ctx.cfg.eps) {
      throw CacheCorrupt("node table " + p->string() + " does not match its index entry");
    }
    ++ctx.counters.cache_hits;
    return table;
  }
  PhiTable table =
      tabulate_phi_nodes(ctx.cfg.eps, plan.node_count, plan.node_acc, ctx.cfg.workers);
  std::string rel = ctx.tag + "/phi_" + std::to_string(plan.node_count) + "_" +
                    std::to_string(plan.node_acc) + ".txt";
  save_phi_table(table, ctx.abs_of(rel).string());
  ctx.cache.put(key, rel);
  ctx.counters.phi_nodes += plan.node_count;
  return table;
}

// Loads gamma_n from the cache into ctx.gam[n]; returns false when absent.
bool load_cached_gamma(Ctx& ctx, long n) {
  auto p = ctx.cache.lookup(gamma_key(ctx.cfg, n));
  if (!p) return false;
  StieltjesValue v = load_stieltjes(p->string());
  if (v.n != n || v.eps != ctx.cfg.eps || v.claimed_acc < ctx.cfg.target_digits) {
    throw CacheCorrupt("stieltjes record " + p->string() + " does not match its index entry");
  }
  ctx.gam[static_cast<std::size_t>(n)] = std::move(v);
  ++ctx.counters.cache_hits;
  return true;
}

void ensure_gammas(Ctx& ctx) {
  StageTimer t(ctx.counters, "stieltjes");
  std::vector<long> missing;
  for (long n = 0; n <= ctx.cfg.n_max; ++n) {
    if (!load_cached_gamma(ctx, n)) missing.push_back(n);
  }
  if (missing.empty()) return;

  GammaPlan plan = plan_gamma_run(ctx.cfg.n_max, ctx.cfg.target_digits, ctx.cfg.eps);
  for (int attempt = 0;; ++attempt) {
    PhiTable table = ensure_phi(ctx, plan);
    AlphaSeries alphas = alpha_coeffs(table, table.count() - 1);
    std::vector<StieltjesValue> vals = gamma_batch(ctx.cfg.n_max, alphas);
    long min_claimed = vals[0].claimed_acc;
    for (const auto& v : vals) min_claimed = std::min(min_claimed, v.claimed_acc);
    if (min_claimed >= ctx.cfg.target_digits) {
      for (long n : missing) {
        std::string rel = ctx.tag + "/gamma_" + std::to_string(n) + ".txt";
        save_stieltjes(vals[static_cast<std::size_t>(n)], ctx.abs_of(rel).string());
        ctx.cache.put(gamma_key(ctx.cfg, n), rel);
        ctx.gam[static_cast<std::size_t>(n)] = vals[static_cast<std::size_t>(n)];
        ++ctx.counters.gammas;
      }
      return;
    }
    if (attempt >= 2) {
      throw PrecisionInfeasible("claimed accuracy " + std::to_string(min_claimed) +
                                " still below target " +
                                std::to_string(ctx.cfg.target_digits) + " after replanning");
    }
    // The calibrated plan fell short (it is a model, not a bound): widen it.
    ++ctx.counters.replans;
    long deficit = ctx.cfg.target_digits - min_claimed;
    plan.node_acc += deficit + 16;
    plan.k_cut += plan.k_cut / 8 + 16;
    plan.node_count = plan.k_cut + 17;
    if (plan.node_count > 500000 || plan.node_acc > 2000000) {
      throw PrecisionInfeasible("replanned node table exceeds the supported size");
    }
  }
}

const StieltjesValue& need_gamma(Ctx& ctx, long n, const char* consumer) {
  auto& slot = ctx.gam[static_cast<std::size_t>(n)];
  if (!slot && !load_cached_gamma(ctx, n)) {
    throw ConfigError(std::string(consumer) +
                      " stage requires stieltjes artifacts; run the stieltjes stage first "
                      "(missing n=" + std::to_string(n) + ")");
  }
  return *slot;
}

const ContinuedFraction& need_cf(Ctx& ctx, long n, const char* consumer) {
  auto& slot = ctx.cfs[static_cast<std::size_t>(n)];
  if (!slot) {
    auto p = ctx.cache.lookup(cf_key(ctx.cfg, n));
    if (!p) {
      throw ConfigError(std::string(consumer) +
                        " stage requires continued-fraction artifacts; run the cf stage "
                        "first (missing n=" + std::to_string(n) + ")");
    }
    std::string id;
    slot = load_contfrac(p->string(), &id);
    ++ctx.counters.cache_hits;
  }
  return *slot;
}

void ensure_cfs(Ctx& ctx) {
  StageTimer t(ctx.counters, "cf");
  for (long n = 0; n <= ctx.cfg.n_max; ++n) {
    CacheKey key = cf_key(ctx.cfg, n);
    if (auto p = ctx.cache.lookup(key)) {
      ++ctx.counters.cache_hits;
      continue;
    }
    const StieltjesValue& v = need_gamma(ctx, n, "cf");
    long nmax = ctx.cfg.stop_accuracy ? 0 : ctx.cfg.nmax_quotients;
    ContinuedFraction cf = contfrac(frac_part(abs(v.value)), nmax);
    std::string rel = ctx.tag + "/" + cf_kind(ctx.cfg) + "_" + std::to_string(n) + ".json";
    save_contfrac(cf, n, ctx.abs_of(rel).string());
    ctx.cache.put(key, rel);
    ctx.cfs[static_cast<std::size_t>(n)] = std::move(cf);
    ++ctx.counters.cfs;
  }
}

void ensure_stats(Ctx& ctx) {
  StageTimer t(ctx.counters, "stats");
  for (long n = 0; n <= ctx.cfg.n_max; ++n) {
    CacheKey key = stats_key(ctx.cfg, n);
    if (ctx.cache.lookup(key)) {
      ++ctx.counters.cache_hits;
      continue;
    }
    const ContinuedFraction& cf = need_cf(ctx, n, "stats");
    CFStatsReport rep = cf_stats(cf, 10, ctx.cfg.m_start);
    std::string rel = ctx.tag + "/" + stats_kind(ctx.cfg) + "_" + std::to_string(n) + ".json";
    save_cf_stats(rep, n, ctx.abs_of(rel).string());
    ctx.cache.put(key, rel);
    ++ctx.counters.stats;
  }
}

void ensure_normality(Ctx& ctx) {
  StageTimer t(ctx.counters, "normality");
  for (long n = 0; n <= ctx.cfg.n_max; ++n) {
    CacheKey key = digits_key(ctx.cfg, n);
    if (ctx.cache.lookup(key)) {
      ++ctx.counters.cache_hits;
      continue;
    }
    const StieltjesValue& v = need_gamma(ctx, n, "normality");
    std::string digits = whole_number_digits(v.value);
    DigitStats d1 = digit_freq(digits, ctx.cfg.base);
    DigitStats dk = kgram_freq(digits, ctx.cfg.kgram, ctx.cfg.base);
    std::string rel = ctx.tag + "/" + digits_kind(ctx.cfg) + "_" + std::to_string(n) + ".json";
    save_digit_stats(d1, dk, n, ctx.abs_of(rel).string());
    ctx.cache.put(key, rel);
    ++ctx.counters.normalities;
  }
}

// Writes a report only when its bytes change, so reruns leave digests and
// the rewrite counter untouched.
void write_report(Ctx& ctx, const fs::path& p, const std::string& content,
                  std::vector<fs::path>& written) {
  bool same = false;
  if (fs::exists(p)) {
    try {
      same = read_file(p) == content;
    } catch (const std::exception&) {
      same = false;
    }
  }
  if (!same) {
    write_file_atomic(p, content);
    ++ctx.counters.reports;
  }
  written.push_back(p);
}

std::vector<fs::path> emit_core(Ctx& ctx) {
  StageTimer t(ctx.counters, "report");
  const RunConfig& cfg = ctx.cfg;
  std::vector<CFStatsReport> stats;
  std::vector<DigitStats> d1s, dks;
  for (long n = 0; n <= cfg.n_max; ++n) {
    auto ps = ctx.cache.lookup(stats_key(cfg, n));
    if (!ps) {
      throw ConfigError("report stage requires stats artifacts; run the stats stage first "
                        "(missing n=" + std::to_string(n) + ")");
    }
    stats.push_back(load_cf_stats(ps->string()));
    auto pd = ctx.cache.lookup(digits_key(cfg, n));
    if (!pd) {
      throw ConfigError("report stage requires digit-statistics artifacts; run the "
                        "normality stage first (missing n=" + std::to_string(n) + ")");
    }
    auto [d1, dk] = load_digit_stats(pd->string());
    d1s.push_back(std::move(d1));
    dks.push_back(std::move(dk));
  }

  fs::path outdir = cfg.cache_dir / ctx.tag / "reports";
  fs::create_directories(outdir);
  std::vector<fs::path> written;
  const double k0 = khinchin_constant(18).to_double();
  const double l0 = levy_constant(18).to_double();

  {  // per-digit frequencies and their offset encoding
    std::ostringstream os;
    os << "# single-digit frequencies, base=" << cfg.base << "\n"
       << "n\tdigit\tn_digits\tfreq\tdev\toffset\n";
    double u = 1.0 / cfg.base;
    for (long n = 0; n <= cfg.n_max; ++n) {
      const DigitStats& d = d1s[static_cast<std::size_t>(n)];
      for (int a = 0; a < cfg.base; ++a) {
        double h = d.freq(static_cast<std::size_t>(a));
        os << n << "\t" << a << "\t" << d.n_digits << "\t" << fmt6(h) << "\t"
           << fmt6(u - h) << "\t" << fmt6(a * u + (u - h)) << "\n";
      }
    }
    write_report(ctx, outdir / "fig1.tsv", os.str(), written);
  }
  {  // largest partial quotient per constant
    std::ostringstream os;
    os << "# largest partial quotient (log10) per constant\n"
       << "n\tl\tmax_quotient_log10\n";
    for (long n = 0; n <= cfg.n_max; ++n) {
      const CFStatsReport& r = stats[static_cast<std::size_t>(n)];
      os << n << "\t" << r.l << "\t" << fmt6(r.max_quotient_log10) << "\n";
    }
    write_report(ctx, outdir / "fig2.tsv", os.str(), written);
  }
  {  // geometric-mean endpoint vs the Khinchin constant
    std::ostringstream os;
    os << "# K(l) at the stop index; K0=" << fmt6(k0) << "\n"
       << "n\tk_final\tabs_err\n";
    for (long n = 0; n <= cfg.n_max; ++n) {
      const CFStatsReport& r = stats[static_cast<std::size_t>(n)];
      os << n << "\t" << fmt6(r.k_final) << "\t" << fmt6(std::fabs(r.k_final - k0)) << "\n";
    }
    write_report(ctx, outdir / "fig3.tsv", os.str(), written);
  }
  {
    std::ostringstream os;
    os << "# sign changes of K(m)-K0 past m_start=" << cfg.m_start << "\n" << "n\ts_k\n";
    for (long n = 0; n <= cfg.n_max; ++n)
      os << n << "\t" << stats[static_cast<std::size_t>(n)].s_k << "\n";
    write_report(ctx, outdir / "fig4.tsv", os.str(), written);
  }
  {
    std::ostringstream os;
    os << "# closest approach of K(m) to K0\n" << "n\tm\tdistance\n";
    for (long n = 0; n <= cfg.n_max; ++n) {
      const CFStatsReport& r = stats[static_cast<std::size_t>(n)];
      os << n << "\t" << r.k_closest_m << "\t" << fmt6e(r.k_closest) << "\n";
    }
    write_report(ctx, outdir / "fig5.tsv", os.str(), written);
  }
  {
    std::ostringstream os;
    os << "# Q_m^(1/m) at the stop index; L0=" << fmt6(l0) << "\n" << "n\tl_final\tabs_err\n";
    for (long n = 0; n <= cfg.n_max; ++n) {
      const CFStatsReport& r = stats[static_cast<std::size_t>(n)];
      os << n << "\t" << fmt6(r.l_final) << "\t" << fmt6(std::fabs(r.l_final - l0)) << "\n";
    }
    write_report(ctx, outdir / "fig6.tsv", os.str(), written);
  }
  {
    std::ostringstream os;
    os << "# sign changes of L(m)-L0 past m_start=" << cfg.m_start << "\n" << "n\ts_l\n";
    for (long n = 0; n <= cfg.n_max; ++n)
      os << n << "\t" << stats[static_cast<std::size_t>(n)].s_l << "\n";
    write_report(ctx, outdir / "fig7.tsv", os.str(), written);
  }
  {
    std::ostringstream os;
    os << "# closest approach of L(m) to L0\n" << "n\tm\tdistance\n";
    for (long n = 0; n <= cfg.n_max; ++n) {
      const CFStatsReport& r = stats[static_cast<std::size_t>(n)];
      os << n << "\t" << r.l_closest_m << "\t" << fmt6e(r.l_closest) << "\n";
    }
    write_report(ctx, outdir / "fig8.tsv", os.str(), written);
  }
  {  // pooled quotient-value histogram against the limiting density
    GaussKuzminHist pooled;
    pooled.counts.assign(10, 0);
    for (const CFStatsReport& r : stats) pooled += r.gk;
    std::ostringstream os;
    os << "# pooled partial-quotient densities over n=0.." << cfg.n_max << "\n"
       << "k\tempirical\ttheory\n";
    double covered = 0.0;
    for (long k = 1; k <= pooled.k_max; ++k) {
      double th = gauss_kuzmin_density(k);
      covered += th;
      os << k << "\t" << fmt6(pooled.empirical(k)) << "\t" << fmt6(th) << "\n";
    }
    os << "tail\t" << fmt6(pooled.tail_empirical()) << "\t" << fmt6(1.0 - covered) << "\n";
    write_report(ctx, outdir / "fig9.tsv", os.str(), written);
  }
  {  // worst k-gram deviations across the collection
    std::vector<DeviationRow> rows = deviation_report(dks);
    std::ostringstream os;
    os << "# worst k-gram deviation from uniform, base=" << cfg.base << " k=" << cfg.kgram
       << "\n"
       << "pattern\tmax_dev\targmax_n\n";
    for (const DeviationRow& r : rows)
      os << r.pattern << "\t" << fmt6e(r.max_dev) << "\t" << r.argmax << "\n";
    write_report(ctx, outdir / "table1.tsv", os.str(), written);
  }
  return written;
}

}  // namespace

RunCounters run_stage(const RunConfig& cfg, Stage stage) {
  validate(cfg);
  Ctx ctx(cfg);
  switch (stage) {
    case Stage::tabulate: {
      GammaPlan plan = plan_gamma_run(cfg.n_max, cfg.target_digits, cfg.eps);
      ensure_phi(ctx, plan);
      break;
    }
    case Stage::stieltjes:
      ensure_gammas(ctx);
      break;
    case Stage::cf:
      ensure_cfs(ctx);
      break;
    case Stage::stats:
      ensure_stats(ctx);
      break;
    case Stage::normality:
      ensure_normality(ctx);
      break;
    case Stage::report:
      emit_core(ctx);
      break;
  }
  return ctx.counters;
}

RunCounters run_pipeline(const RunConfig& cfg) {
  validate(cfg);
  Ctx ctx(cfg);
  ensure_gammas(ctx);
  ensure_cfs(ctx);
  ensure_stats(ctx);
  ensure_normality(ctx);
  emit_core(ctx);
  return ctx.counters;
}

std::vector<fs::path> emit_reports(const RunConfig& cfg) {
  validate(cfg);
  Ctx ctx(cfg);
  return emit_core(ctx);
}

VerifyReport verify_precision(const RunConfig& cfg) {
  validate(cfg);
  Ctx ctx(cfg);

  VerifyReport report;
  std::set<long> pick = {0, cfg.n_max, cfg.n_max / 2, cfg.n_max / 4, (3 * cfg.n_max) / 4};
  if (cfg.n_max >= 1) pick.insert(1);
  for (long n : pick) {
    if (n >= 0 && n <= cfg.n_max) report.sampled.push_back(n);
  }
  std::sort(report.sampled.begin(), report.sampled.end());
  report.sampled.erase(std::unique(report.sampled.begin(), report.sampled.end()),
                       report.sampled.end());

  // Cached artifacts under test. Missing ones mean no completed run exists.
  std::vector<StieltjesValue> cached_g;
  std::vector<ContinuedFraction> cached_cf;
  for (long n : report.sampled) {
    auto pg = ctx.cache.lookup(gamma_key(cfg, n));
    auto pc = ctx.cache.lookup(cf_key(cfg, n));
    if (!pg || !pc) {
      throw ConfigError("verify requires a completed run for this configuration "
                        "(missing artifacts for n=" + std::to_string(n) + ")");
    }
    cached_g.push_back(load_stieltjes(pg->string()));
    cached_cf.push_back(load_contfrac(pc->string()));
  }

  // Independent recomputation at elevated precision and halved eps.
  long n_top = report.sampled.back();
  mpq_class eps2 = cfg.eps / 2;
  long digits2 = cfg.target_digits + 40;
  GammaPlan plan = plan_gamma_run(n_top, digits2, eps2);
  PhiTable table = tabulate_phi_nodes(eps2, plan.node_count, plan.node_acc, cfg.workers);
  AlphaSeries alphas = alpha_coeffs(table, table.count() - 1);
  std::vector<StieltjesValue> fresh = gamma_batch(n_top, alphas);

  for (std::size_t i = 0; i < report.sampled.size(); ++i) {
    long n = report.sampled[i];
    const StieltjesValue& old_v = cached_g[i];
    const StieltjesValue& new_v = fresh[static_cast<std::size_t>(n)];
    bool ok = true;

    // Every claimed digit must survive: compare rounded strings, falling back
    // to a one-ulp interval test to ignore rounding-boundary flips.
    std::string s_old = old_v.value.to_decimal(old_v.claimed_acc);
    std::string s_new = new_v.value.to_decimal(old_v.claimed_acc);
    if (s_old != s_new) {
      BigReal diff = abs(old_v.value - new_v.value);
      long ulp_exp = old_v.value.ilog10_abs() + 1 - old_v.claimed_acc;
      BigReal tol = pow_si(BigReal::from_long(10, 32), ulp_exp);
      if (!(diff < tol)) ok = false;
    }

    if (ok) {
      long nmax = cfg.stop_accuracy ? 0 : cfg.nmax_quotients;
      ContinuedFraction cf2 = contfrac(frac_part(abs(new_v.value)), nmax);
      const ContinuedFraction& cf1 = cached_cf[i];
      if (cf1.a0 != cf2.a0 || cf2.size() < cf1.size()) {
        ok = false;
      } else {
        for (long q = 0; q < cf1.size(); ++q) {
          if (cf1.quotients[static_cast<std::size_t>(q)] !=
              cf2.quotients[static_cast<std::size_t>(q)]) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) report.failed.push_back(n);
  }
  return report;
}

}  // namespace stieltjes
