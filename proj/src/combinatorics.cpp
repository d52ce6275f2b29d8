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

#include "gensat/combinatorics.hpp"

#include <algorithm>
#include <limits>

#include "gensat/errors.hpp"

namespace gensat {

Wide checked_add(Wide a, Wide b) {
  Wide out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw DomainError("overflow", "128-bit addition overflow");
  }
  return out;
}

Wide checked_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("overflow", "128-bit multiplication overflow");
  }
  return out;
}

Wide binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) {
    throw DomainError("binomial_domain", "binomial needs n >= 0 and k >= 0");
  }
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i after the multiplication.
    result = checked_mul(result, n - k + i) / i;
  }
  return result;
}

Wide falling_factorial(std::int64_t n, std::int64_t k) {
  if (k < 0) throw DomainError("binomial_domain", "falling factorial needs k >= 0");
  Wide result = 1;
  for (std::int64_t i = 0; i < k; ++i) result = checked_mul(result, n - i);
  return result;
}

Wide factorial(std::int64_t k) { return falling_factorial(k, k); }

std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

bool fits_int64(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace gensat
