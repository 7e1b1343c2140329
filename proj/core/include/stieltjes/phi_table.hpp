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

#include <string>
#include <vector>

#include "stieltjes/bigreal.hpp"

namespace stieltjes {

// Equally spaced samples of phi(s) = (s-1) zeta(s) at s = 1 + j*eps.
// Nodes are canonicalized to their decimal form at node_acc digits, so the
// in-memory table and its file round-trip are bit-identical.
struct PhiTable {
  mpq_class eps;
  long node_acc = 0;           // uniform certified significant digits
  std::vector<BigReal> nodes;  // nodes[j] = phi(1 + j*eps), j = 0..count-1

  long count() const { return static_cast<long>(nodes.size()); }
};

// Tabulates phi(1 + j*eps) for j = 0..count-1, each certified to
// target_digits. Output is byte-identical for any worker count: work is
// split into fixed-size index blocks whose boundaries do not depend on the
// number of workers.
PhiTable tabulate_phi_nodes(const mpq_class& eps, long count, long target_digits,
                            int workers = 1);

// Text persistence: "# phi eps=<p>/<q> count=<n> acc=<d>" then one decimal
// string per node in index order. save(load(f)) is byte-identical to f.
void save_phi_table(const PhiTable& t, const std::string& path);
PhiTable load_phi_table(const std::string& path);

}  // namespace stieltjes
