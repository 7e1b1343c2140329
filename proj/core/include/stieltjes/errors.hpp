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

#include <stdexcept>
#include <string>

namespace stieltjes {

// Exit codes used by the CLI; library errors map onto these.
enum class ExitCode : int {
  ok = 0,
  config = 2,
  precision_infeasible = 3,
  cache_corrupt = 4,
  verify_failed = 5,
};

struct Error : std::runtime_error {
  ExitCode code;
  Error(ExitCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(ExitCode::config, what) {}
};

// The planner or the cutoff rule cannot certify the requested accuracy.
struct PrecisionInfeasible : Error {
  explicit PrecisionInfeasible(const std::string& what)
      : Error(ExitCode::precision_infeasible, what) {}
};

struct CacheCorrupt : Error {
  explicit CacheCorrupt(const std::string& what) : Error(ExitCode::cache_corrupt, what) {}
};

struct VerifyFailed : Error {
  explicit VerifyFailed(const std::string& what) : Error(ExitCode::verify_failed, what) {}
};

// ζ evaluated at its pole.
struct PoleError : Error {
  explicit PoleError(const std::string& what) : Error(ExitCode::config, what) {}
};

// alpha_coeffs asked for more coefficients than the node table supports.
struct InsufficientNodes : Error {
  explicit InsufficientNodes(const std::string& what) : Error(ExitCode::config, what) {}
};

struct InvalidSymbol : Error {
  explicit InvalidSymbol(const std::string& what) : Error(ExitCode::config, what) {}
};

}  // namespace stieltjes
