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

#include "stieltjes/normality.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "stieltjes/errors.hpp"

namespace stieltjes {

namespace {

int symbol_value(char c, int base) {
  int v = -1;
  if (c >= '0' && c <= '9') v = c - '0';
  else if (c >= 'a' && c <= 'z') v = 10 + (c - 'a');
  if (v < 0 || v >= base) {
    throw InvalidSymbol(std::string("digit string contains '") + c + "' outside base " +
                        std::to_string(base));
  }
  return v;
}

char symbol_char(int v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

std::size_t pattern_count(int base, int k) {
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > 100000000u / static_cast<std::size_t>(base)) {
      throw ConfigError("pattern space base^k too large");
    }
    n *= static_cast<std::size_t>(base);
  }
  return n;
}

}  // namespace

mpq_class DigitStats::freq_q(std::size_t pattern) const {
  if (pattern >= counts.size()) throw std::out_of_range("pattern index");
  long w = windows();
  if (w <= 0) return mpq_class(0);
  mpq_class q(counts[pattern], w);
  q.canonicalize();
  return q;
}

double DigitStats::freq(std::size_t pattern) const { return freq_q(pattern).get_d(); }

std::string pattern_label(std::size_t p, int k, int base) {
  std::string s(static_cast<std::size_t>(k), '0');
  for (int i = k - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = symbol_char(static_cast<int>(p % static_cast<std::size_t>(base)));
    p /= static_cast<std::size_t>(base);
  }
  return s;
}

DigitStats kgram_freq(std::string_view digits, int k, int base) {
  if (base < 2 || base > 36) throw ConfigError("base must be in [2,36]");
  if (k < 1) throw ConfigError("k-gram length must be >= 1");
  if (digits.size() < static_cast<std::size_t>(k)) {
    throw ConfigError("digit string shorter than the window length");
  }
  DigitStats st;
  st.base = base;
  st.k = k;
  st.n_digits = static_cast<long>(digits.size());
  st.counts.assign(pattern_count(base, k), 0);

  // Rolling window index: drop the leading symbol's contribution, shift, add.
  std::size_t head = 1;
  for (int i = 0; i < k - 1; ++i) head *= static_cast<std::size_t>(base);
  std::size_t w = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    int v = symbol_value(digits[i], base);
    if (i >= static_cast<std::size_t>(k)) {
      w -= head * static_cast<std::size_t>(symbol_value(digits[i - static_cast<std::size_t>(k)], base));
    }
    w = w * static_cast<std::size_t>(base) + static_cast<std::size_t>(v);
    if (i + 1 >= static_cast<std::size_t>(k)) ++st.counts[w];
  }
  return st;
}

DigitStats digit_freq(std::string_view digits, int base) { return kgram_freq(digits, 1, base); }

std::string whole_number_digits(const BigReal& v, bool lead_zero) {
  long acc = v.acc_digits();
  if (acc < 1) throw ConfigError("value carries no trusted digits");
  if (v.is_zero()) return "0";

  // Correctly rounded `acc`-digit mantissa; exp10 is the position of the
  // decimal point, value = 0.d1d2... * 10^exp10.
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(acc), v.raw(), MPFR_RNDN);
  if (raw == nullptr) throw std::runtime_error("mpfr_get_str failed");
  std::string mant(raw);
  mpfr_free_str(raw);
  if (!mant.empty() && mant[0] == '-') mant.erase(0, 1);
  long exp10 = static_cast<long>(e);

  std::string out;
  if (exp10 <= 0) {
    // |v| < 1: single zero for the integer part, then the expansion's real
    // leading zeros, then the mantissa.
    if (lead_zero) out += '0';
    out.append(static_cast<std::size_t>(-exp10), '0');
    out += mant;
  } else if (exp10 >= static_cast<long>(mant.size())) {
    // Integer so large that only a digit prefix is certified; emit just that
    // prefix (trailing positions are untrusted, never synthesized as zeros).
    out = mant;
  } else {
    out = mant;  // decimal point sits inside the mantissa; symbols unchanged
  }
  return out;
}

std::vector<DeviationRow> deviation_report(const std::vector<DigitStats>& collection) {
  if (collection.empty()) throw ConfigError("deviation report needs at least one constant");
  int base = collection[0].base;
  int k = collection[0].k;
  std::size_t patterns = collection[0].counts.size();
  for (const DigitStats& st : collection) {
    if (st.base != base || st.k != k || st.counts.size() != patterns) {
      throw ConfigError("deviation report requires uniform base and k");
    }
  }
  double uniform = std::pow(static_cast<double>(base), -k);
  std::vector<DeviationRow> rows(patterns);
  for (std::size_t p = 0; p < patterns; ++p) {
    rows[p].pattern = pattern_label(p, k, base);
    for (std::size_t i = 0; i < collection.size(); ++i) {
      double d = std::fabs(collection[i].freq(p) - uniform);
      if (d > rows[p].max_dev) {
        rows[p].max_dev = d;
        rows[p].argmax = i;
      }
    }
  }
  return rows;
}

namespace {

void save_digits_impl(const DigitStats& d1, const DigitStats& dk,
                      nlohmann::ordered_json id, const std::string& path) {
  if (d1.k != 1 || d1.base != dk.base || d1.n_digits != dk.n_digits) {
    throw ConfigError("digit record needs k=1 and k-gram stats of one string");
  }
  nlohmann::ordered_json j;
  j["n"] = std::move(id);
  j["base"] = d1.base;
  j["n_digits"] = d1.n_digits;
  j["freq1_counts"] = d1.counts;
  j["kgram_k"] = dk.k;
  j["kgram_counts"] = dk.counts;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << j.dump() << "\n";
  f.flush();
  if (!f) throw std::runtime_error("short write to " + path);
}

}  // namespace

void save_digit_stats(const DigitStats& d1, const DigitStats& dk, long index,
                      const std::string& path) {
  save_digits_impl(d1, dk, nlohmann::ordered_json(index), path);
}

void save_digit_stats(const DigitStats& d1, const DigitStats& dk,
                      const std::string& label, const std::string& path) {
  save_digits_impl(d1, dk, nlohmann::ordered_json(label), path);
}

std::pair<DigitStats, DigitStats> load_digit_stats(const std::string& path,
                                                   std::string* id) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CacheCorrupt("cannot open digit record " + path);
  nlohmann::ordered_json j;
  try {
    f >> j;
  } catch (const std::exception&) {
    throw CacheCorrupt("bad digit record in " + path);
  }
  if (!j.is_object() || !j.contains("n"))
    throw CacheCorrupt("bad digit record in " + path);
  DigitStats d1, dk;
  try {
    d1.base = dk.base = j.at("base").get<int>();
    d1.n_digits = dk.n_digits = j.at("n_digits").get<long>();
    d1.k = 1;
    d1.counts = j.at("freq1_counts").get<std::vector<long>>();
    dk.k = j.at("kgram_k").get<int>();
    dk.counts = j.at("kgram_counts").get<std::vector<long>>();
    if (d1.base < 2 || dk.k < 1 ||
        d1.counts.size() != static_cast<std::size_t>(d1.base))
      throw CacheCorrupt("bad digit record in " + path);
    std::size_t want = 1;
    for (int i = 0; i < dk.k; ++i) want *= static_cast<std::size_t>(dk.base);
    if (dk.counts.size() != want)
      throw CacheCorrupt("bad digit record in " + path);
    if (id != nullptr)
      *id = j["n"].is_string() ? j["n"].get<std::string>() : j["n"].dump();
  } catch (const CacheCorrupt&) {
    throw;
  } catch (const std::exception&) {
    throw CacheCorrupt("bad digit record in " + path);
  }
  return {d1, dk};
}

}  // namespace stieltjes
