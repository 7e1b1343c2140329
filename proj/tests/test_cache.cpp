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

#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "stieltjes/cache.hpp"
#include "stieltjes/errors.hpp"
#include "test_util.hpp"

using namespace stieltjes;
namespace fs = std::filesystem;

namespace {
CacheKey key_of(const std::string& kind, long n, const mpq_class& eps,
                long digits) {
  CacheKey k;
  k.kind = kind;
  k.n = n;
  k.eps = eps;
  k.digits = digits;
  return k;
}
}  // namespace

TEST_CASE("keys serialize canonically") {
  CacheKey k = key_of("gamma", 7, mpq_class(2, 20), 500);
  CHECK(k.str() == "gamma:7:1/10:500");
  CacheKey p = key_of("phi", 120, mpq_class(1, 1000), 800);
  CHECK(p.str() == "phi:120:1/1000:800");
}

TEST_CASE("put then lookup returns the stored file") {
  testutil::TempDir dir("cache");
  CacheIndex idx(dir.path());
  CHECK(idx.size() == 0);

  write_file_atomic(dir.path() / "v.txt", "payload\n");
  CacheKey k = key_of("gamma", 0, mpq_class(1, 10), 100);
  CHECK_FALSE(idx.contains(k));
  idx.put(k, "v.txt");
  CHECK(idx.contains(k));
  auto hit = idx.lookup(k);
  REQUIRE(hit.has_value());
  CHECK(read_file(*hit) == "payload\n");

  // a fresh index over the same directory sees the entry
  CacheIndex idx2(dir.path());
  CHECK(idx2.size() == 1);
  CHECK(idx2.lookup(k).has_value());
}

TEST_CASE("absent keys miss without error") {
  testutil::TempDir dir("cachemiss");
  CacheIndex idx(dir.path());
  CacheKey k = key_of("gamma", 3, mpq_class(1, 10), 100);
  CHECK_FALSE(idx.lookup(k).has_value());
  CHECK_FALSE(idx.contains(k));
}

TEST_CASE("keys are distinct across parameters") {
  testutil::TempDir dir("cachekeys");
  CacheIndex idx(dir.path());
  write_file_atomic(dir.path() / "a.txt", "a");
  write_file_atomic(dir.path() / "b.txt", "b");
  idx.put(key_of("gamma", 1, mpq_class(1, 10), 100), "a.txt");
  idx.put(key_of("gamma", 1, mpq_class(1, 4), 100), "b.txt");
  CHECK(idx.size() == 2);
  CHECK_FALSE(idx.contains(key_of("gamma", 1, mpq_class(1, 10), 200)));
  CHECK_FALSE(idx.contains(key_of("cf", 1, mpq_class(1, 10), 100)));
  auto a = idx.lookup(key_of("gamma", 1, mpq_class(1, 10), 100));
  REQUIRE(a.has_value());
  CHECK(read_file(*a) == "a");
}

TEST_CASE("tampered payloads are detected on lookup") {
  testutil::TempDir dir("cachetamper");
  CacheIndex idx(dir.path());
  write_file_atomic(dir.path() / "v.txt", "original");
  CacheKey k = key_of("gamma", 0, mpq_class(1, 10), 100);
  idx.put(k, "v.txt");
  {
    std::ofstream f(dir.path() / "v.txt", std::ios::trunc);
    f << "tampered";
  }
  CHECK_THROWS_AS(idx.lookup(k), CacheCorrupt);
}

TEST_CASE("missing payloads are detected on lookup") {
  testutil::TempDir dir("cachegone");
  CacheIndex idx(dir.path());
  write_file_atomic(dir.path() / "v.txt", "original");
  CacheKey k = key_of("gamma", 0, mpq_class(1, 10), 100);
  idx.put(k, "v.txt");
  fs::remove(dir.path() / "v.txt");
  CHECK_THROWS_AS(idx.lookup(k), CacheCorrupt);
}

TEST_CASE("malformed index files are rejected") {
  testutil::TempDir dir("cachebadidx");
  {
    std::ofstream f(dir.path() / "index.json");
    f << "{ not json";
  }
  CHECK_THROWS_AS(CacheIndex(dir.path()), CacheCorrupt);
}

TEST_CASE("an index directory is created on demand") {
  testutil::TempDir dir("cachemk");
  fs::path sub = dir.path() / "nested" / "cache";
  CacheIndex idx(sub);
  CHECK(fs::exists(sub));
  write_file_atomic(sub / "x.txt", "x");
  idx.put(key_of("phi", 10, mpq_class(1, 10), 50), "x.txt");
  CHECK(fs::exists(sub / "index.json"));
}

TEST_CASE("atomic writes replace content fully") {
  testutil::TempDir dir("atomic");
  fs::path p = dir.path() / "f.txt";
  write_file_atomic(p, "first version");
  write_file_atomic(p, "second");
  CHECK(read_file(p) == "second");
  CHECK_THROWS(read_file(dir.path() / "absent.txt"));
}

TEST_CASE("puts of nested relative paths work") {
  testutil::TempDir dir("cachenest");
  CacheIndex idx(dir.path());
  fs::create_directories(dir.path() / "e1-10-d100");
  write_file_atomic(dir.path() / "e1-10-d100" / "gamma_0.txt", "z");
  CacheKey k = key_of("gamma", 0, mpq_class(1, 10), 100);
  idx.put(k, "e1-10-d100/gamma_0.txt");
  auto hit = idx.lookup(k);
  REQUIRE(hit.has_value());
  CHECK(read_file(*hit) == "z");
}
