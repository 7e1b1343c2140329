// Copyright 2026 The stieltjes-lab Authors
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

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle_values.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/normality.hpp"
#include "test_util.hpp"

using namespace stieltjes;

TEST_CASE("single-digit frequencies") {
  DigitStats s = digit_freq("1111");
  CHECK(s.base == 10);
  CHECK(s.k == 1);
  CHECK(s.n_digits == 4);
  CHECK(s.freq(1) == doctest::Approx(1.0));
  CHECK(s.freq(0) == doctest::Approx(0.0));
  CHECK(s.freq_q(1) == mpq_class(1));

  DigitStats u = digit_freq("0123456789");
  for (size_t d = 0; d < 10; ++d) {
    CHECK(u.freq_q(d) == mpq_class(1, 10));
  }
}

TEST_CASE("k-gram frequencies use overlapping windows") {
  DigitStats s = kgram_freq("0101", 2);
  CHECK(s.windows() == 3);
  CHECK(s.freq_q(1) == mpq_class(2, 3));    // "01"
  CHECK(s.freq_q(10) == mpq_class(1, 3));   // "10"
  CHECK(s.freq_q(0) == mpq_class(0));

  // exact frequencies always sum to one
  DigitStats t = kgram_freq(testutil::random_digits(5, 400), 3);
  mpq_class total = 0;
  for (size_t p = 0; p < t.counts.size(); ++p) total += t.freq_q(p);
  CHECK(total == 1);
  CHECK(t.windows() == 398);
}

TEST_CASE("2-gram marginals reproduce single-digit counts") {
  std::string digits = testutil::random_digits(23, 600);
  DigitStats one = digit_freq(digits);
  DigitStats two = kgram_freq(digits, 2);
  // summing pairs over the second symbol counts every digit except the last
  for (long d = 0; d < 10; ++d) {
    long row = 0;
    for (long e = 0; e < 10; ++e) row += two.counts[10 * d + e];
    long expect = one.counts[d] - (digits.back() - '0' == d ? 1 : 0);
    CAPTURE(d);
    CHECK(row == expect);
  }
}

TEST_CASE("non-decimal bases and bad symbols") {
  DigitStats b2 = digit_freq("0110", 2);
  CHECK(b2.freq_q(1) == mpq_class(1, 2));
  CHECK_THROWS_AS(digit_freq("0123", 3), InvalidSymbol);
  CHECK_THROWS_AS(digit_freq("xyz"), InvalidSymbol);
  CHECK_THROWS_AS(kgram_freq("0101", 0), ConfigError);
  CHECK_THROWS_AS(kgram_freq("01", 5, 10), ConfigError);  // window > string
  CHECK_THROWS_AS(kgram_freq(testutil::random_digits(1, 20), 9, 10),
                  ConfigError);  // pattern space cap
}

TEST_CASE("pattern labels are fixed-width") {
  CHECK(pattern_label(7, 2, 10) == "07");
  CHECK(pattern_label(99, 2, 10) == "99");
  CHECK(pattern_label(5, 1, 10) == "5");
  CHECK(pattern_label(3, 2, 2) == "11");
}

TEST_CASE("digit stream of a value keeps only certified symbols") {
  BigReal small = BigReal::from_decimal("0.577215664", 64);
  CHECK(whole_number_digits(small) == "0577215664");
  CHECK(whole_number_digits(small, false) == "577215664");

  BigReal tiny = BigReal::from_decimal("0.0123", 64);
  CHECK(whole_number_digits(tiny) == "00123");
  CHECK(whole_number_digits(tiny, false) == "0123");

  BigReal big = BigReal::from_decimal("111670.9578149410793387893", 64);
  CHECK(whole_number_digits(big) == "1116709578149410793387893");

  // negative sign never reaches the digit stream
  BigReal neg = BigReal::from_decimal("-0.25", 64);
  CHECK(whole_number_digits(neg) == "025");

  // an integer certified to fewer digits than its length yields the prefix
  BigReal coarse = BigReal::from_decimal("123456789", 64, 4);
  CHECK(whole_number_digits(coarse) == "1235");

  CHECK(whole_number_digits(BigReal::from_long(0, 32)) == "0");

  BigReal untrusted = BigReal::from_long(5, 32);
  untrusted.set_acc_digits(0);
  CHECK_THROWS_AS(whole_number_digits(untrusted), ConfigError);
}

TEST_CASE("deviation table finds the worst row per pattern") {
  std::vector<DigitStats> rows;
  rows.push_back(digit_freq("0123456789"));  // uniform
  rows.push_back(digit_freq("0000456789"));  // heavy zeros
  auto dev = deviation_report(rows);
  REQUIRE(dev.size() == 10);
  CHECK(dev[0].pattern == "0");
  CHECK(dev[0].max_dev == doctest::Approx(0.3));  // 4/10 vs 1/10
  CHECK(dev[0].argmax == 1);
  CHECK(dev[5].pattern == "5");
  CHECK(dev[5].max_dev == doctest::Approx(0.0));
  // mixing shapes is refused
  rows.push_back(kgram_freq("0123", 2));
  CHECK_THROWS_AS(deviation_report(rows), ConfigError);
  CHECK_THROWS_AS(deviation_report({}), ConfigError);
}

TEST_CASE("digit records round-trip") {
  testutil::TempDir dir("digio");
  std::string digits = testutil::random_digits(3, 500);
  DigitStats d1 = digit_freq(digits);
  DigitStats dk = kgram_freq(digits, 2);
  std::string p = (dir.path() / "d.json").string();
  save_digit_stats(d1, dk, 7L, p);
  std::string id;
  auto [e1, ek] = load_digit_stats(p, &id);
  CHECK(id == "7");
  CHECK(e1.base == 10);
  CHECK(e1.k == 1);
  CHECK(e1.n_digits == d1.n_digits);
  CHECK(e1.counts == d1.counts);
  CHECK(ek.k == 2);
  CHECK(ek.counts == dk.counts);
  CHECK(ek.n_digits == dk.n_digits);

  // mismatched shapes cannot be written
  DigitStats other = digit_freq("01", 2);
  CHECK_THROWS_AS(save_digit_stats(other, dk, 0L, p), ConfigError);
}

TEST_CASE("malformed digit records are rejected") {
  testutil::TempDir dir("digbad");
  std::string p = (dir.path() / "bad.json").string();
  {
    std::ofstream f(p);
    f << "{\"n\":1,\"base\":10,\"n_digits\":4,\"freq1_counts\":[1,2],"
         "\"kgram_k\":2,\"kgram_counts\":[]}";
  }
  CHECK_THROWS_AS(load_digit_stats(p), CacheCorrupt);
  CHECK_THROWS_AS(load_digit_stats((dir.path() / "none.json").string()),
                  CacheCorrupt);
}
