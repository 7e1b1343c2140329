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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace stieltjes {

// One end-to-end run: constants gamma_0..gamma_n_max at target_digits, their
// continued fractions, quotient statistics, digit statistics, and reports.
struct RunConfig {
  long n_max = 63;
  long target_digits = 1000;
  mpq_class eps = mpq_class(1, 10);
  int workers = 1;
  std::filesystem::path cache_dir;
  int base = 10;        // digit-statistics base
  int kgram = 2;        // k-gram window for the deviation table
  long m_start = 100;   // burn-in for running CF statistics
  bool stop_accuracy = true;  // stop CF expansion at the precision horizon
  long nmax_quotients = 0;    // quotient cap when stop_accuracy is false
};

// What a run actually did. "Computed" counts exclude verified cache hits, so
// a rerun over a warm cache reports all zeros.
struct RunCounters {
  long phi_nodes = 0;    // nodes tabulated
  long gammas = 0;       // Stieltjes values computed and written
  long cfs = 0;          // continued fractions expanded
  long stats = 0;        // CF statistics reports written
  long normalities = 0;  // digit-statistics records written
  long reports = 0;      // report files (re)written with changed bytes
  long cache_hits = 0;
  int replans = 0;       // precision-plan retries during the gamma stage
  std::vector<std::pair<std::string, double>> timings;  // (stage, seconds)

  RunCounters& operator+=(const RunCounters& o);
};

enum class Stage { tabulate, stieltjes, cf, stats, normality, report };

// Runs one stage. tabulate/stieltjes provision their own inputs; the later
// stages require their input artifacts to exist and raise ConfigError naming
// the missing stage otherwise.
RunCounters run_stage(const RunConfig& cfg, Stage stage);

// All stages in order; idempotent over a warm cache.
RunCounters run_pipeline(const RunConfig& cfg);

// Recomputes a sampled subset of constants at elevated precision (+40 digits)
// and halved eps, then compares every claimed digit and every emitted CF
// quotient against the cached artifacts.
struct VerifyReport {
  std::vector<long> sampled;
  std::vector<long> failed;  // n whose digits or quotients changed
  bool ok() const { return failed.empty(); }
};
VerifyReport verify_precision(const RunConfig& cfg);

// Emits plot-ready TSV tables under <cache_dir>/reports; returns the paths.
std::vector<std::filesystem::path> emit_reports(const RunConfig& cfg);

}  // namespace stieltjes
