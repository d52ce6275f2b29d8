// Copyright 2026 The gensat Authors.
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

// Exact integer helpers. Wide is a signed 128-bit integer; every helper
// throws DomainError("overflow") rather than wrapping.

#ifndef GENSAT_COMBINATORICS_HPP_
#define GENSAT_COMBINATORICS_HPP_

#include <cstdint>
#include <string>

namespace gensat {

using Wide = __int128;

// C(n, k) for integers n >= 0, k >= 0 (0 when k > n).
Wide binomial(std::int64_t n, std::int64_t k);
// n (n-1) ... (n-k+1).
Wide falling_factorial(std::int64_t n, std::int64_t k);
Wide factorial(std::int64_t k);

Wide checked_add(Wide a, Wide b);
Wide checked_mul(Wide a, Wide b);

std::string to_string(Wide v);
// True when v fits in a signed 64-bit integer.
bool fits_int64(Wide v);

}  // namespace gensat

#endif  // GENSAT_COMBINATORICS_HPP_
