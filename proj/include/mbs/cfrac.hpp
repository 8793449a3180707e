// Copyright 2025 The mbs Authors
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

#ifndef MBS_CFRAC_H_
#define MBS_CFRAC_H_

#include <variant>
#include <vector>

#include "mbs/quadsurd.hpp"

namespace mbs {

// Eventually periodic simple continued fraction of a quadratic surd.  The
// first preperiod entry may be any integer; all later entries are >= 1 and
// the period is minimal.
struct CFExpansion {
  std::vector<long> preperiod;
  std::vector<long> period;
};

// Finite expansion of a rational, canonical (last term >= 2 unless the
// expansion is a single integer).
struct FiniteCF {
  std::vector<long> terms;
};

using CFResult = std::variant<CFExpansion, FiniteCF>;

// Expansion by complete quotients with exact cycle detection.
CFResult cf_expand_any(const QuadSurd& x);

// As above but requires an irrational input.
CFExpansion cf_expand(const QuadSurd& x);

// Exact value of an eventually periodic continued fraction.
QuadSurd cf_value(const CFExpansion& e);

QuadSurd cf_value(const FiniteCF& e);

std::string cf_to_string(const CFExpansion& e);

}  // namespace mbs

#endif  // MBS_CFRAC_H_
