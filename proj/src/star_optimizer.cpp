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

#include "gensat/star_optimizer.hpp"

#include <cmath>

#include "gensat/errors.hpp"

namespace gensat {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("star_parameter", what);
}

std::string str(long long v) { return std::to_string(v); }

void check_kr(int t, int n, int m, int r) {
  require(r >= 1, "need r >= 1");
  require(t > r, "need t > r (got r=" + str(r) + ", t=" + str(t) + ")");
  require(m >= 0 && m <= t - 1, "need 0 <= m <= t-1 (got m=" + str(m) + ")");
  require(n - m >= t, "need n-m >= t (got n=" + str(n) + ", m=" + str(m) + ")");
}

}  // namespace

double gen_binom(double x, int k) {
  require(k >= 0, "generalized binomial needs k >= 0");
  double v = 1;
  for (int i = 0; i < k; ++i) v = v * (x - i) / (i + 1);
  return v;
}

Wide sr_kr_formula(int t, int n, int m, int r) {
  require(r >= 2, "closed form needs r >= 2");
  check_kr(t, n, m, r);
  const bool odd = (static_cast<long long>(t - 1) * (n - m)) % 2 == 1;
  require(!(odd && m == 0), "KR_{t,n}(0) needs (t-1)n even");
  Wide v = checked_add(checked_mul(m, binomial(m - 1 < 0 ? 0 : m - 1, r)),
                       checked_mul(n - m, binomial(t - 1, r)));
  if (odd) v = checked_add(v, binomial(m - 1, r - 1));
  return v;
}

std::optional<Wide> kr_star_count(int t, int n, int m, int r) {
  check_kr(t, n, m, r);
  const Wide excess = static_cast<Wide>(t - 1) * (n - m);
  const bool odd = excess % 2 == 1;
  if (odd && m == 0) return std::nullopt;
  if (r == 1) return checked_add(binomial(m, 2), (excess + 1) / 2);
  return sr_kr_formula(t, n, m, r);
}

Wide delta(int m, int r, int t) {
  require(m >= 0, "need m >= 0");
  require(r >= 2 && t > r, "need t > r >= 2");
  return checked_mul(r + 1, binomial(m, r)) - binomial(t - 1, r);
}

double xbar(int r, int t) {
  require(r >= 2 && t > r, "need t > r >= 2");
  const double target = static_cast<double>(binomial(t - 1, r));
  auto d = [&](double x) { return (r + 1) * gen_binom(x, r) - target; };
  double lo = r - 1;
  double hi = t - 1;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (d(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double r2_xbar(int t) {
  require(t >= 3, "closed form needs t >= 3");
  const double tt = t;
  return 0.5 + std::sqrt(12 * tt * tt - 36 * tt + 33) / 6;
}

XbarInfo xbar_info(int r, int t) {
  XbarInfo info;
  info.value = xbar(r, t);
  const double nearest = std::round(info.value);
  if (std::fabs(info.value - nearest) < 1e-6 &&
      delta(static_cast<int>(nearest), r, t) == 0) {
    info.integral = true;
    info.ceiling = static_cast<int>(nearest);
  } else {
    info.ceiling = static_cast<int>(std::ceil(info.value));
  }
  return info;
}

M0Result m0(int n, int r, int t) {
  require(r >= 1, "need r >= 1");
  require(t > r, "need t > r (got r=" + str(r) + ", t=" + str(t) + ")");
  require(n >= 2 * t - 1, "need n >= 2t-1 (got n=" + str(n) + ", t=" + str(t) + ")");
  M0Result res;
  res.m0 = -1;
  for (int m = 0; m <= t - 1; ++m) {
    res.values.push_back(kr_star_count(t, n, m, r));
    const auto& v = res.values.back();
    if (v && (res.m0 < 0 || *v < res.satnum)) {
      res.m0 = m;
      res.satnum = *v;
    }
  }
  const int next = res.m0 + 1;
  res.tie = next <= t - 1 && res.values[next] && *res.values[next] == res.satnum;
  return res;
}

StarStarResult satnum_star_star(int n, int r, int t) {
  require(t >= 2, "need t >= 2");
  require(r >= 1, "need r >= 1");
  StarStarResult out;
  if (r >= t) {
    out.satnum = 0;
    out.note = "trivially zero: an S_t-saturated graph has maximum degree t-1 < r";
    return out;
  }
  out.scan = m0(n, r, t);
  out.satnum = out.scan->satnum;
  return out;
}

std::vector<Wide> tie_ts(int i_max) {
  require(i_max >= 0, "need i_max >= 0");
  std::vector<Wide> a{0, 2};
  while (static_cast<int>(a.size()) <= i_max) {
    const std::size_t i = a.size();
    a.push_back(checked_add(checked_mul(4, a[i - 1]) - a[i - 2], 1));
  }
  a.resize(static_cast<std::size_t>(i_max) + 1);
  for (Wide& v : a) v += 2;
  return a;
}

bool is_tie_t(std::int64_t t) {
  const Wide q = checked_add(checked_mul(checked_mul(12, t), t) - Wide{36} * t, 33);
  if (q < 0) return false;
  auto root = static_cast<Wide>(std::sqrt(static_cast<long double>(q)));
  while (root * root > q) --root;
  while ((root + 1) * (root + 1) <= q) ++root;
  return root * root == q;
}

M0LowerBounds m0_lower_bounds(int r, int t) {
  require(r >= 2 && t > r, "need t > r >= 2");
  require(t >= 3 && t % 2 == 1, "lower bounds are stated for odd t >= 3");
  M0LowerBounds b;
  if ((t + 1) % 2 == 0) {
    b.half_num = (t + 1) / 2;
  } else {
    b.half_num = t + 1;
    b.half_den = 2;
  }
  b.half_bound = (t + 1) / 2.0;
  b.root_bound = m0_estimate(r, t);
  return b;
}

double m0_estimate(int r, int t) {
  require(r >= 2, "need r >= 2");
  require(t > r, "need t > r (got r=" + str(r) + ", t=" + str(t) + ")");
  return (t - 1) / std::pow(r + 1.0, 1.0 / r);
}

}  // namespace gensat
