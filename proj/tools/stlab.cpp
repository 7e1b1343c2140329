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

// stlab: computes Stieltjes constants to requested accuracy, expands them
// into continued fractions, and runs quotient/digit statistics, with all
// artifacts kept in a content-addressed cache.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stieltjes/cache.hpp"
#include "stieltjes/cfstats.hpp"
#include "stieltjes/contfrac.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/normality.hpp"
#include "stieltjes/pipeline.hpp"
#include "stieltjes/rational.hpp"

namespace {

struct Opts {
  long n_max = 63;
  long digits = 1000;
  std::string eps = "1/10";
  int workers = 1;
  std::string cache_dir = "stlab-cache";
  int base = 10;
  int kgram = 2;
  long m_start = 100;
  std::string stop_policy = "accuracy";
  long nmax = 0;
};

void add_common(CLI::App* cmd, Opts& o) {
  cmd->add_option("--n-max", o.n_max, "Highest constant index n to process");
  cmd->add_option("--digits", o.digits, "Target certified digits per constant");
  cmd->add_option("--eps", o.eps, "Node spacing as an exact rational p/q");
  cmd->add_option("--workers", o.workers, "Worker threads for tabulation");
  cmd->add_option("--cache-dir", o.cache_dir, "Artifact cache directory")
      ->envname("STLAB_CACHE_DIR");
  cmd->add_option("--base", o.base, "Digit-statistics base");
  cmd->add_option("--kgram", o.kgram, "k-gram window for the deviation table");
  cmd->add_option("--m-start", o.m_start, "Burn-in index for running CF statistics");
  cmd->add_option("--stop-policy", o.stop_policy,
                  "CF stop rule: accuracy (precision horizon) or nmax");
  cmd->add_option("--nmax", o.nmax, "Quotient cap for --stop-policy nmax");
}

stieltjes::RunConfig to_config(const Opts& o) {
  stieltjes::RunConfig cfg;
  cfg.n_max = o.n_max;
  cfg.target_digits = o.digits;
  cfg.eps = stieltjes::parse_rational(o.eps);
  cfg.workers = o.workers;
  cfg.cache_dir = o.cache_dir;
  cfg.base = o.base;
  cfg.kgram = o.kgram;
  cfg.m_start = o.m_start;
  if (o.stop_policy == "accuracy") {
    cfg.stop_accuracy = true;
  } else if (o.stop_policy == "nmax") {
    cfg.stop_accuracy = false;
    cfg.nmax_quotients = o.nmax;
  } else {
    throw stieltjes::ConfigError("--stop-policy must be 'accuracy' or 'nmax'");
  }
  return cfg;
}

void print_counters(const stieltjes::RunCounters& c) {
  std::cout << "phi nodes computed: " << c.phi_nodes << "\n"
            << "stieltjes values computed: " << c.gammas << "\n"
            << "continued fractions computed: " << c.cfs << "\n"
            << "stats reports computed: " << c.stats << "\n"
            << "digit records computed: " << c.normalities << "\n"
            << "report files rewritten: " << c.reports << "\n"
            << "cache hits: " << c.cache_hits << "\n"
            << "replans: " << c.replans << "\n";
  for (const auto& [stage, secs] : c.timings) {
    std::fprintf(stderr, "# %s %.2fs\n", stage.c_str(), secs);
  }
}

// --literal mode: diagnose a user-supplied decimal constant without touching
// the cache. Accuracy is taken from the literal's significant digit count.
stieltjes::BigReal parse_literal(const std::string& lit) {
  long work = static_cast<long>(lit.size()) + 16;
  return stieltjes::BigReal::from_decimal(lit, work);
}

int run_literal_cf(const Opts& o, const std::string& lit, const std::string& label,
                   const std::string& out) {
  stieltjes::BigReal v = parse_literal(lit);
  long nmax = o.stop_policy == "nmax" ? o.nmax : 0;
  stieltjes::ContinuedFraction cf =
      stieltjes::contfrac(stieltjes::frac_part(stieltjes::abs(v)), nmax);
  stieltjes::save_contfrac(cf, label, out);
  std::cout << "wrote " << out << " (" << cf.size() << " quotients, source acc "
            << cf.source_acc << ")\n";
  return 0;
}

int run_literal_stats(const Opts& o, const std::string& lit, const std::string& label,
                      const std::string& out) {
  stieltjes::BigReal v = parse_literal(lit);
  long nmax = o.stop_policy == "nmax" ? o.nmax : 0;
  stieltjes::ContinuedFraction cf =
      stieltjes::contfrac(stieltjes::frac_part(stieltjes::abs(v)), nmax);
  stieltjes::CFStatsReport rep = stieltjes::cf_stats(cf, 10, o.m_start);
  stieltjes::save_cf_stats(rep, label, out);
  std::cout << "wrote " << out << " (l=" << rep.l << ", K_final=" << rep.k_final
            << ", L_final=" << rep.l_final << ")\n";
  return 0;
}

int run_literal_normality(const Opts& o, const std::string& lit, const std::string& label,
                          const std::string& out) {
  stieltjes::BigReal v = parse_literal(lit);
  std::string digits = stieltjes::whole_number_digits(v);
  stieltjes::DigitStats d1 = stieltjes::digit_freq(digits, o.base);
  stieltjes::DigitStats dk = stieltjes::kgram_freq(digits, o.kgram, o.base);
  stieltjes::save_digit_stats(d1, dk, label, out);
  std::cout << "wrote " << out << " (" << d1.n_digits << " digits)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stieltjes-constant laboratory: arbitrary-precision gamma_n plus "
               "continued-fraction and digit diagnostics"};
  app.require_subcommand(1);

  Opts o;
  std::string literal, label = "user", out;

  CLI::App* c_run = app.add_subcommand("run", "All stages: tabulate through report");
  CLI::App* c_tab = app.add_subcommand("tabulate", "Tabulate the phi node table");
  CLI::App* c_stj = app.add_subcommand("stieltjes", "Compute gamma_0..gamma_n-max");
  CLI::App* c_cf = app.add_subcommand("cf", "Expand continued fractions");
  CLI::App* c_st = app.add_subcommand("stats", "Khinchin/Levy/Gauss-Kuzmin statistics");
  CLI::App* c_nr = app.add_subcommand("normality", "Digit-frequency statistics");
  CLI::App* c_rp = app.add_subcommand("report", "Emit plot-ready report tables");
  CLI::App* c_vf = app.add_subcommand("verify", "Recompute a sample at higher precision");
  for (CLI::App* c : {c_run, c_tab, c_stj, c_cf, c_st, c_nr, c_rp, c_vf}) add_common(c, o);

  bool print_values = false;
  c_stj->add_flag("--print", print_values, "Print each value to stdout afterwards");
  for (CLI::App* c : {c_cf, c_st, c_nr}) {
    c->add_option("--literal", literal,
                  "Diagnose this decimal constant instead of the cached run");
    c->add_option("--label", label, "Identifier stored in --literal output");
    c->add_option("--out", out, "Output path for --literal mode");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(stieltjes::ExitCode::config);
  }

  try {
    using stieltjes::Stage;
    if (c_vf->parsed()) {
      stieltjes::VerifyReport rep = stieltjes::verify_precision(to_config(o));
      std::cout << "sampled:";
      for (long n : rep.sampled) std::cout << " " << n;
      std::cout << "\n";
      if (!rep.ok()) {
        std::cout << "MISMATCH at n:";
        for (long n : rep.failed) std::cout << " " << n;
        std::cout << "\n";
        return static_cast<int>(stieltjes::ExitCode::verify_failed);
      }
      std::cout << "all claimed digits and quotients reproduced\n";
      return 0;
    }
    if (!literal.empty()) {
      if (out.empty()) out = (c_cf->parsed() ? "cf_" : c_st->parsed() ? "stats_" : "digits_") +
                             label + ".json";
      if (c_cf->parsed()) return run_literal_cf(o, literal, label, out);
      if (c_st->parsed()) return run_literal_stats(o, literal, label, out);
      if (c_nr->parsed()) return run_literal_normality(o, literal, label, out);
      throw stieltjes::ConfigError("--literal applies to cf, stats, and normality");
    }

    stieltjes::RunConfig cfg = to_config(o);
    stieltjes::RunCounters counters;
    if (c_run->parsed()) {
      counters = stieltjes::run_pipeline(cfg);
    } else if (c_tab->parsed()) {
      counters = stieltjes::run_stage(cfg, Stage::tabulate);
    } else if (c_stj->parsed()) {
      counters = stieltjes::run_stage(cfg, Stage::stieltjes);
    } else if (c_cf->parsed()) {
      counters = stieltjes::run_stage(cfg, Stage::cf);
    } else if (c_st->parsed()) {
      counters = stieltjes::run_stage(cfg, Stage::stats);
    } else if (c_nr->parsed()) {
      counters = stieltjes::run_stage(cfg, Stage::normality);
    } else if (c_rp->parsed()) {
      counters = stieltjes::run_stage(cfg, Stage::report);
    }
    print_counters(counters);

    if (print_values && c_stj->parsed()) {
      stieltjes::CacheIndex cache(cfg.cache_dir);
      for (long n = 0; n <= cfg.n_max; ++n) {
        stieltjes::CacheKey key{"gamma", n, cfg.eps, cfg.target_digits};
        if (auto p = cache.lookup(key)) {
          stieltjes::StieltjesValue v = stieltjes::load_stieltjes(p->string());
          std::cout << "gamma_" << n << " = " << v.value.to_decimal(v.claimed_acc)
                    << " (acc " << v.claimed_acc << ", k0 " << v.k0 << ")\n";
        }
      }
    }
    return 0;
  } catch (const stieltjes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
