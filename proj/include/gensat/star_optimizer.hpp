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

// Stars in star-saturated graphs: s_r(KR_{t,n}(m)) in closed form, the
// difference function D(m) = (r+1)C(m,r) - C(t-1,r), its real root xbar and
// the minimiser m0. Exact values always come from a scan over m; the root is
// a cross-check.

#ifndef GENSAT_STAR_OPTIMIZER_HPP_
#define GENSAT_STAR_OPTIMIZER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gensat/combinatorics.hpp"

namespace gensat {

// x(x-1)...(x-k+1)/k!.
double gen_binom(double x, int k);

// s_r(KR_{t,n}(m)) for t > r >= 2, 0 <= m <= t-1, n-m >= t.
Wide sr_kr_formula(int t, int n, int m, int r);

// Copies of S_r in KR_{t,n}(m), any r >= 1 (r = 1 counts edges). Empty when
// KR_{t,n}(m) does not exist (m = 0 with (t-1)n odd).
std::optional<Wide> kr_star_count(int t, int n, int m, int r);

Wide delta(int m, int r, int t);

// Root of (r+1) gen_binom(x, r) - C(t-1, r) on [r-1, t-1], by bisection.
double xbar(int r, int t);
// Closed form for r = 2.
double r2_xbar(int t);

struct XbarInfo {
  double value = 0;
  // |value - round(value)| < 1e-6 and delta(round(value)) == 0 exactly.
  bool integral = false;
  // ceil(value), using the exact integer when integral.
  int ceiling = 0;
};
XbarInfo xbar_info(int r, int t);

struct M0Result {
  int m0 = 0;
  // m0 + 1 attains the same minimum.
  bool tie = false;
  Wide satnum = 0;
  // values[m] for m = 0..t-1; nullopt where KR does not exist.
  std::vector<std::optional<Wide>> values;
};

// Exact scan over m; smallest minimiser.
M0Result m0(int n, int r, int t);

struct StarStarResult {
  Wide satnum = 0;
  std::optional<M0Result> scan;
  std::string note;
};

// sat_{S_r}(n, S_t); 0 with a note when r >= t.
StarStarResult satnum_star_star(int n, int r, int t);

// t(i) = a(i) + 2 with a(0)=0, a(1)=2, a(i) = 4a(i-1) - a(i-2) + 1.
std::vector<Wide> tie_ts(int i_max);
// 12t^2 - 36t + 33 is a perfect square.
bool is_tie_t(std::int64_t t);

struct M0LowerBounds {
  // (t+1)/2 as numerator/denominator.
  std::int64_t half_num = 0;
  std::int64_t half_den = 1;
  double half_bound = 0;
  // (t-1)/(r+1)^{1/r}.
  double root_bound = 0;
};
M0LowerBounds m0_lower_bounds(int r, int t);

// (t-1)/(r+1)^{1/r}.
double m0_estimate(int r, int t);

}  // namespace gensat

#endif  // GENSAT_STAR_OPTIMIZER_HPP_
