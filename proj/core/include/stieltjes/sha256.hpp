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

#include <filesystem>
#include <string>
#include <string_view>

namespace stieltjes {

// Lowercase hex SHA-256 digest of the bytes.
std::string sha256_hex(std::string_view data);

// Digest of a file's contents; throws std::runtime_error if unreadable.
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace stieltjes
