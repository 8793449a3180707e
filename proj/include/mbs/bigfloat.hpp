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

#ifndef MBS_BIGFLOAT_H_
#define MBS_BIGFLOAT_H_

#include "mbs/quadsurd.hpp"

namespace mbs {

// Natural log of a positive mpf, computed at the operand's precision via
// binary argument reduction and the atanh series.
mpf_class mpf_ln(const mpf_class& x);

mpf_class mpf_of(const QuadSurd& x, unsigned prec_bits = 256);
mpf_class mpf_of(const Rational& x, unsigned prec_bits = 256);

}  // namespace mbs

#endif  // MBS_BIGFLOAT_H_
