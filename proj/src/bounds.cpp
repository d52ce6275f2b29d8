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

#include "gensat/bounds.hpp"

#include <charconv>
#include <cmath>
#include <functional>

#include "gensat/count.hpp"
#include "gensat/errors.hpp"

namespace gensat {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("bound_domain", what);
}

std::string str(long long v) { return std::to_string(v); }

double as_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

const Rational kZero{0};

int sign(const Rational& q) {
  if (q > kZero) return 1;
  if (q < kZero) return -1;
  return 0;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Maximum independent sets of f, as vertex bitsets.
std::vector<VertexSet> maximum_independent_sets(const Graph& f, int alpha) {
  std::vector<VertexSet> out;
  const Graph co = complement(f);
  VertexSet chosen;
  std::function<void(const VertexSet&, int)> rec = [&](const VertexSet& cand,
                                                       int need) {
    if (need == 0) {
      out.push_back(chosen);
      return;
    }
    if (cand.count() < need) return;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      chosen.set(v);
      rec((cand & co.neighbors(v)).above(v), need - 1);
      chosen.reset(v);
    }
  };
  rec(f.vertices(), alpha);
  return out;
}

int get_int(const std::map<std::string, std::string>& params,
            const std::string& name, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw DomainError("missing_parameter", "bound " + name + " needs " + key);
  }
  int v = 0;
  const std::string& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("parameter " + key + " must be an integer", 0);
  }
  return v;
}

}  // namespace

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return str(q.numerator());
  return str(q.numerator()) + "/" + str(q.denominator());
}

double Surd::value() const {
  return as_double(a) + as_double(b) * std::sqrt(as_double(d));
}

int Surd::compare(const Rational& q) const {
  const Rational x = q - a;
  if (b == kZero || d == kZero) return -sign(x);
  if (x < kZero) return 1;
  const Rational lhs = b * b * d;
  const Rational rhs = x * x;
  if (lhs > rhs) return 1;
  if (lhs < rhs) return -1;
  return 0;
}

std::string Surd::text() const {
  return to_string(a) + " + " + to_string(b) + "*sqrt(" + to_string(d) + ")";
}

Wide ehm_value(int n, int t) {
  require(t >= 2, "need t >= 2");
  require(n >= t, "need n >= t (got n=" + str(n) + ", t=" + str(t) + ")");
  return checked_add(checked_mul(n - t + 2, t - 2), binomial(t - 2, 2));
}

Wide cl_value(int n, int r, int t) {
  require(r >= 2 && t > r, "need t > r >= 2");
  require(n >= t, "need n >= t (got n=" + str(n) + ", t=" + str(t) + ")");
  return checked_add(checked_mul(n - t + 2, binomial(t - 2, r - 1)),
                     binomial(t - 2, r));
}

std::int64_t partite_threshold(int r, int t, int c) {
  require(r >= 3 && t >= 3, "need r >= 3 and t >= 3");
  require(c >= 0 && c <= r - 2, "need 0 <= c <= r-2 (got c=" + str(c) + ")");
  const std::int64_t s = r - c;
  return s * ceil_div(t - 1, s - 1) + s;
}

Rational partite_threshold_smooth(int r, int t, int c) {
  require(r >= 3 && t >= 3, "need r >= 3 and t >= 3");
  require(c >= 0 && c <= r - 2, "need 0 <= c <= r-2 (got c=" + str(c) + ")");
  const std::int64_t s = r - c;
  return Rational(s * (t - 1), s - 1) + s;
}

BestC best_c(int r, int t) {
  BestC best;
  best.n1 = -1;
  for (int c = 0; c <= r - 2; ++c) {
    const std::int64_t v = partite_threshold(r, t, c);
    if (best.n1 < 0 || v < best.n1) {
      best.c = c;
      best.n1 = v;
    }
  }
  best.sufficient_n = std::max<std::int64_t>(best.n1, t + 1);
  return best;
}

Rational partite_necessary(int r, int t) {
  require(r >= 3 && t >= 3, "need r >= 3 and t >= 3");
  return Rational(static_cast<std::int64_t>(r) * (t - 1), r - 1);
}

Surd krfree_bound(int r, int t, int m) {
  require(r >= 2, "need r >= 2");
  require(t >= 2, "need t >= 2");
  require(m >= 0 && m <= r, "need 0 <= m <= r (got m=" + str(m) + ")");
  const Rational half(t - 1, 2);
  const Rational disc =
      half * half - Rational(static_cast<std::int64_t>(m) * (r - 1) * (t - m), r);
  require(disc >= kZero, "negative discriminant " + to_string(disc) +
                         " for r=" + str(r) + ", t=" + str(t) + ", m=" + str(m));
  const Rational scale(r, r - 1);
  return Surd{scale * half, scale, disc};
}

Surd krfree_bound_at_r(int r, int t) { return krfree_bound(r, t, r); }

KtThreshold kt_threshold(const Graph& f) {
  require(f.order() >= 1, "pattern must have at least one vertex");
  KtThreshold k;
  k.t = f.order();
  k.alpha = independence_number(f);
  k.u = k.t - k.alpha - 1;
  if (k.alpha == k.t) return k;
  int best = -1;
  for (const VertexSet& s : maximum_independent_sets(f, k.alpha)) {
    (f.vertices() - s).for_each([&](int v) {
      const int links = (f.neighbors(v) & s).count();
      if (best < 0 || links < best) best = links;
    });
  }
  k.d = best;
  k.r_min = k.t - k.alpha + best;
  return k;
}

std::int64_t path_sat_threshold(int t) {
  require(t >= 3, "need t >= 3");
  require(t <= 120, "t too large for 64-bit threshold");
  if (t % 2 == 1) return 3 * (std::int64_t{1} << ((t + 1) / 2 - 1)) - 2;
  return (std::int64_t{1} << (t / 2 + 1)) - 2;
}

SplitPathLeading split_path_leading(int n, int t, int r) {
  require(t >= 4, "need t >= 4");
  require(r >= 1, "need r >= 1");
  SplitPathLeading out;
  out.k = (r + 2) / 2;
  if (r >= 2 * t - 2) {
    out.path_free = true;
    return out;
  }
  require(out.k <= t - 2, "need k = ceil((r+1)/2) <= t-2 (got k=" + str(out.k) + ")");
  require(out.k <= n - t + 2,
          "need k = ceil((r+1)/2) <= n-t+2 (got k=" + str(out.k) + ")");
  const Wide prod = checked_mul(checked_mul(binomial(n - t + 2, out.k),
                                            falling_factorial(t - 2, out.k)),
                                factorial(out.k));
  require(fits_int64(prod), "leading term exceeds 64 bits");
  out.value = Rational(static_cast<std::int64_t>(prod), 2);
  return out;
}

std::vector<std::string> bound_names() {
  return {"ehm",         "cl",          "partite_threshold",
          "partite_threshold_smooth", "best_c", "partite_necessary",
          "krfree",      "krfree_at_r", "kt_threshold",
          "path_sat_threshold", "split_path_leading"};
}

BoundReport evaluate_bound(const std::string& name,
                           const std::map<std::string, std::string>& params) {
  BoundReport rep;
  rep.name = name;
  for (const auto& [k, v] : params) rep.parameters.emplace_back(k, v);
  auto i = [&](const std::string& key) { return get_int(params, name, key); };
  auto has = [&](const std::string& key) { return params.count(key) > 0; };
  auto set_rational = [&](const Rational& q) {
    rep.exact = to_string(q);
    rep.value = as_double(q);
    if (has("n")) rep.satisfied = Rational(i("n")) >= q;
  };
  auto set_surd = [&](const Surd& s) {
    rep.exact = s.text();
    rep.value = s.value();
    if (has("n")) rep.satisfied = s.compare(Rational(i("n"))) <= 0;
  };
  if (name == "ehm") {
    const Wide v = ehm_value(i("n"), i("t"));
    rep.exact = to_string(v);
    rep.value = static_cast<double>(v);
  } else if (name == "cl") {
    const Wide v = cl_value(i("n"), i("r"), i("t"));
    rep.exact = to_string(v);
    rep.value = static_cast<double>(v);
  } else if (name == "partite_threshold") {
    set_rational(Rational(partite_threshold(i("r"), i("t"), i("c"))));
  } else if (name == "partite_threshold_smooth") {
    set_rational(partite_threshold_smooth(i("r"), i("t"), i("c")));
  } else if (name == "best_c") {
    const BestC b = best_c(i("r"), i("t"));
    set_rational(Rational(b.sufficient_n));
    rep.fields = {{"c", str(b.c)},
                  {"n1", str(b.n1)},
                  {"sufficient_n", str(b.sufficient_n)}};
  } else if (name == "partite_necessary") {
    set_rational(partite_necessary(i("r"), i("t")));
  } else if (name == "krfree") {
    set_surd(krfree_bound(i("r"), i("t"), i("m")));
  } else if (name == "krfree_at_r") {
    set_surd(krfree_bound_at_r(i("r"), i("t")));
  } else if (name == "kt_threshold") {
    auto it = params.find("pattern");
    if (it == params.end()) {
      throw DomainError("missing_parameter", "bound kt_threshold needs pattern");
    }
    const KtThreshold k = kt_threshold(Pattern::parse(it->second).graph());
    rep.fields = {{"t", str(k.t)}, {"alpha", str(k.alpha)}, {"u", str(k.u)}};
    if (k.d) {
      rep.fields.emplace_back("d", str(*k.d));
      rep.fields.emplace_back("r_min", str(*k.r_min));
      rep.exact = str(*k.r_min);
      rep.value = *k.r_min;
      if (has("r")) rep.satisfied = i("r") >= *k.r_min;
    } else {
      rep.exact = "undefined";
      rep.note = "pattern has no edges; d is undefined";
    }
  } else if (name == "path_sat_threshold") {
    set_rational(Rational(path_sat_threshold(i("t"))));
  } else if (name == "split_path_leading") {
    const int r = i("r");
    const SplitPathLeading s = split_path_leading(i("n"), i("t"), r);
    rep.fields = {{"k", str(s.k)}};
    if (s.path_free) {
      rep.exact = "0";
      rep.value = 0;
      rep.note = "split graph is P_" + str(r + 1) + "-free";
    } else {
      rep.exact = to_string(s.value);
      rep.value = as_double(s.value);
    }
  } else {
    std::string known;
    for (const auto& b : bound_names()) known += " " + b;
    throw DomainError("unknown_bound", "unknown bound '" + name + "'; known:" + known);
  }
  return rep;
}

}  // namespace gensat
