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

#include "stieltjes/cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/sha256.hpp"

namespace stieltjes {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string CacheKey::str() const {
  mpq_class e = eps;
  e.canonicalize();
  std::ostringstream os;
  os << kind << ":" << n << ":" << e.get_num() << "/" << e.get_den() << ":" << digits;
  return os.str();
}

CacheIndex::CacheIndex(fs::path dir) : dir_(std::move(dir)) {
  fs::create_directories(dir_);
  fs::path idx = dir_ / "index.json";
  if (!fs::exists(idx)) return;
  ordered_json j;
  try {
    j = ordered_json::parse(read_file(idx));
  } catch (const std::exception& e) {
    throw CacheCorrupt("cache index unparsable: " + std::string(e.what()));
  }
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw CacheCorrupt("cache index missing entries array");
  }
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("key") || !e["key"].is_string() ||
        !e.contains("path") || !e["path"].is_string() ||
        !e.contains("sha256") || !e["sha256"].is_string()) {
      throw CacheCorrupt("cache index entry malformed");
    }
    entries_[e["key"].get<std::string>()] =
        Entry{e["path"].get<std::string>(), e["sha256"].get<std::string>()};
  }
}

std::optional<fs::path> CacheIndex::lookup(const CacheKey& key) const {
  auto it = entries_.find(key.str());
  if (it == entries_.end()) return std::nullopt;
  fs::path p = dir_ / it->second.rel_path;
  if (!fs::exists(p)) {
    throw CacheCorrupt("cache entry " + key.str() + " points at missing file " + p.string());
  }
  if (sha256_file_hex(p) != it->second.digest) {
    throw CacheCorrupt("cache entry " + key.str() + " digest mismatch in " + p.string());
  }
  return p;
}

bool CacheIndex::contains(const CacheKey& key) const {
  return entries_.find(key.str()) != entries_.end();
}

void CacheIndex::put(const CacheKey& key, const std::string& rel_path) {
  fs::path p = dir_ / rel_path;
  entries_[key.str()] = Entry{rel_path, sha256_file_hex(p)};
  save();
}

void CacheIndex::save() const {
  ordered_json j;
  j["entries"] = ordered_json::array();
  for (const auto& [k, e] : entries_) {
    ordered_json row;
    row["key"] = k;
    row["path"] = e.rel_path;
    row["sha256"] = e.digest;
    j["entries"].push_back(row);
  }
  write_file_atomic(dir_ / "index.json", j.dump(2) + "\n");
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace stieltjes
