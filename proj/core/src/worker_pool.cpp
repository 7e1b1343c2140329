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

#include "stieltjes/worker_pool.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "stieltjes/errors.hpp"

namespace stieltjes {

void parallel_blocks(int workers, long count, long block_size,
                     const std::function<void(long, long)>& fn) {
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (block_size < 1) block_size = 1;
  if (count <= 0) return;
  const long n_blocks = (count + block_size - 1) / block_size;
  if (workers == 1 || n_blocks == 1) {
    for (long b = 0; b < n_blocks; ++b) {
      long lo = b * block_size;
      long hi = std::min(count, lo + block_size);
      fn(lo, hi);
    }
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto run = [&] {
    for (;;) {
      long b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= n_blocks) return;
      long lo = b * block_size;
      long hi = std::min(count, lo + block_size);
      try {
        fn(lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> g(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace stieltjes
