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

#include <functional>

namespace stieltjes {

// Dispatches fn(begin, end) over [0, count) in fixed-size index blocks.
// Block boundaries depend only on block_size, so outputs written to
// disjoint, index-addressed slots are identical for any worker count.
// Exceptions from workers are rethrown on the calling thread.
void parallel_blocks(int workers, long count, long block_size,
                     const std::function<void(long, long)>& fn);

}  // namespace stieltjes
