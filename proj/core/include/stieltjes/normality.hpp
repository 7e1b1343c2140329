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

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stieltjes/bigreal.hpp"

namespace stieltjes {

// k-gram occurrence counts over a digit string in a given base. Frequencies
// are exact rationals count/windows; doubles are provided for reporting.
struct DigitStats {
  int base = 10;
  int k = 1;
  long n_digits = 0;             // symbols consumed
  std::vector<long> counts;      // one slot per pattern, size base^k

  long windows() const { return n_digits - k + 1; }
  mpq_class freq_q(std::size_t pattern) const;
  double freq(std::size_t pattern) const;
};

// Renders pattern index `p` as its k symbols ("07", "95", ...). Bases up to 36
// use 0-9a-z.
std::string pattern_label(std::size_t p, int k, int base);

// Single-symbol frequencies h(a). Throws InvalidSymbol on characters outside
// the base's digit set, ConfigError on an empty string or base < 2.
DigitStats digit_freq(std::string_view digits, int base = 10);

// Frequencies of all length-k windows at stride 1 (count / (len - k + 1)).
DigitStats kgram_freq(std::string_view digits, int k, int base = 10);

// Digit symbols of |v|: integer-part digits followed by fractional digits,
// restricted to the certified prefix. Values below 1 contribute one leading
// "0" for the empty integer part unless lead_zero is false. Requires at least
// one trusted digit.
std::string whole_number_digits(const BigReal& v, bool lead_zero = true);

struct DeviationRow {
  std::string pattern;
  double max_dev = 0.0;    // max |freq - base^-k| across the collection
  std::size_t argmax = 0;  // index of the constant attaining it
};

// Per-pattern worst deviation from the uniform frequency across a collection
// of same-shaped DigitStats. Rows are ordered by pattern index.
std::vector<DeviationRow> deviation_report(const std::vector<DigitStats>& collection);

// JSON record holding one constant's single-digit and k-gram counts; d1 must
// be the k=1 stats of the same digit string as dk. The loader round-trips
// exactly and raises CacheCorrupt on malformed input.
void save_digit_stats(const DigitStats& d1, const DigitStats& dk, long index,
                      const std::string& path);
void save_digit_stats(const DigitStats& d1, const DigitStats& dk,
                      const std::string& label, const std::string& path);
std::pair<DigitStats, DigitStats> load_digit_stats(const std::string& path,
                                                   std::string* id = nullptr);

}  // namespace stieltjes
