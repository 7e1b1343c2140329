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

#include <fstream>
#include <string>

#include "doctest.h"
#include "oracle_values.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/phi_table.hpp"
#include "stieltjes/zeta.hpp"
#include "test_util.hpp"

using namespace stieltjes;
using testutil::agree_digits;
using testutil::ref;

TEST_CASE("nodes are phi(1 + j eps)") {
  PhiTable t = tabulate_phi_nodes(mpq_class(1, 10), 11, 60);
  REQUIRE(t.count() == 11);
  CHECK(t.node_acc == 60);
  // j = 0: phi(1) = 1 by continuity.
  CHECK(t.nodes[0].to_decimal(10) == "1.000000000");
  // j = 10: phi(2) = (2-1) zeta(2).
  CHECK(agree_digits(t.nodes[10], ref(oracle::kZeta2_55), 53));
  // j = 5: phi(3/2) = (1/2) zeta(3/2).
  CHECK(agree_digits(t.nodes[5], ref(oracle::kHalfZeta3Half_40), 38));
  // every node agrees with the scalar evaluator
  for (long j = 1; j < t.count(); ++j) {
    CAPTURE(j);
    BigReal direct = phi(mpq_class(1, 10) * j + 1, 60);
    CHECK(agree_digits(t.nodes[j], direct, 55));
  }
}

TEST_CASE("worker count does not change a single digit") {
  PhiTable a = tabulate_phi_nodes(mpq_class(1, 7), 30, 80, 1);
  PhiTable b = tabulate_phi_nodes(mpq_class(1, 7), 30, 80, 3);
  REQUIRE(a.count() == b.count());
  for (long j = 0; j < a.count(); ++j) {
    CAPTURE(j);
    CHECK(a.nodes[j].to_decimal(80) == b.nodes[j].to_decimal(80));
  }
}

TEST_CASE("save/load round-trip preserves all node digits") {
  testutil::TempDir dir("phi");
  PhiTable t = tabulate_phi_nodes(mpq_class(1, 4), 9, 50);
  std::string p = (dir.path() / "phi.txt").string();
  save_phi_table(t, p);
  PhiTable u = load_phi_table(p);
  CHECK(u.eps == t.eps);
  CHECK(u.node_acc == t.node_acc);
  REQUIRE(u.count() == t.count());
  for (long j = 0; j < t.count(); ++j) {
    CHECK(u.nodes[j].to_decimal(50) == t.nodes[j].to_decimal(50));
  }
}

TEST_CASE("corrupted or truncated tables are rejected") {
  testutil::TempDir dir("phicorrupt");
  PhiTable t = tabulate_phi_nodes(mpq_class(1, 4), 5, 40);
  std::string good = (dir.path() / "phi.txt").string();
  save_phi_table(t, good);

  std::string bad_header = (dir.path() / "bad1.txt").string();
  {
    std::ofstream f(bad_header);
    f << "# nonsense\n1.0\n";
  }
  CHECK_THROWS_AS(load_phi_table(bad_header), CacheCorrupt);

  // drop the last node line
  std::string truncated = (dir.path() / "bad2.txt").string();
  {
    std::ifstream in(good);
    std::ofstream out(truncated);
    std::string line;
    long kept = 0;
    while (std::getline(in, line) && kept < 5) {
      out << line << "\n";
      ++kept;
    }
  }
  CHECK_THROWS_AS(load_phi_table(truncated), CacheCorrupt);

  CHECK_THROWS_AS(load_phi_table((dir.path() / "missing.txt").string()),
                  CacheCorrupt);
}

TEST_CASE("invalid tabulation requests") {
  CHECK_THROWS_AS(tabulate_phi_nodes(mpq_class(1, 10), 0, 40), ConfigError);
  CHECK_THROWS_AS(tabulate_phi_nodes(mpq_class(0), 4, 40), ConfigError);
  CHECK_THROWS_AS(tabulate_phi_nodes(mpq_class(-1, 2), 4, 40), ConfigError);
  CHECK_THROWS_AS(tabulate_phi_nodes(mpq_class(1, 10), 4, 0), ConfigError);
}
