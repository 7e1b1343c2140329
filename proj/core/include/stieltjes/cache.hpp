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
#include <map>
#include <optional>
#include <string>

namespace stieltjes {

// Identity of a cached artifact. Artifacts that are not per-constant (the
// node table, aggregate reports) use n = -1.
struct CacheKey {
  std::string kind;  // "phi", "gamma", "cf", "stats", ...
  long n = -1;
  mpq_class eps = 0;
  long digits = 0;

  std::string str() const;  // canonical "kind:n:p/q:digits"
};

// Content-addressed index over files in one cache directory. The index lives
// in index.json; every entry records the file's SHA-256 at publication time
// and is re-verified on lookup, so a stale or tampered artifact can never be
// reused silently. Not thread-safe; the pipeline mutates it from the
// coordinator only.
class CacheIndex {
 public:
  // Creates dir if needed and loads an existing index. A malformed index file
  // raises CacheCorrupt; an absent one yields an empty index.
  explicit CacheIndex(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  // Absolute path of a verified entry, or nullopt if the key is unknown.
  // A missing file or digest mismatch raises CacheCorrupt.
  std::optional<std::filesystem::path> lookup(const CacheKey& key) const;

  bool contains(const CacheKey& key) const;

  // Registers rel_path (already written inside dir) under key, hashing the
  // current contents, and persists the index.
  void put(const CacheKey& key, const std::string& rel_path);

  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::string rel_path;
    std::string digest;
  };

  void save() const;

  std::filesystem::path dir_;
  std::map<std::string, Entry> entries_;
};

// Writes content to path via a temp file + rename so readers never observe a
// partial artifact.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Reads a whole file; throws std::runtime_error if unreadable.
std::string read_file(const std::filesystem::path& path);

}  // namespace stieltjes
