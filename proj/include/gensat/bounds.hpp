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

// Closed-form bounds and thresholds. Quotients of integers are exact
// rationals; square roots are kept symbolic (a + b*sqrt(d)) so boundary
// comparisons are exact.

#ifndef GENSAT_BOUNDS_HPP_
#define GENSAT_BOUNDS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "gensat/combinatorics.hpp"
#include "gensat/graph.hpp"
#include "gensat/pattern.hpp"

namespace gensat {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);

// a + b*sqrt(d) with b >= 0, d >= 0.
struct Surd {
  Rational a{0};
  Rational b{0};
  Rational d{0};

  double value() const;
  // Exact sign of (this - q): -1, 0 or 1.
  int compare(const Rational& q) const;
  std::string text() const;
};

Wide ehm_value(int n, int t);
Wide cl_value(int n, int r, int t);

// n1(c) = (r-c) ceil((t-1)/(r-c-1)) + r - c.
std::int64_t partite_threshold(int r, int t, int c);
// n2(c) = (r-c)(t-1)/(r-c-1) + r - c.
Rational partite_threshold_smooth(int r, int t, int c);

struct BestC {
  int c = 0;
  std::int64_t n1 = 0;
  // max(n1, t+1): the sufficient order for existence.
  std::int64_t sufficient_n = 0;
};
// Smallest c in [0, r-2] minimising n1(c).
BestC best_c(int r, int t);

// r(t-1)/(r-1).
Rational partite_necessary(int r, int t);

// r/(r-1) ((t-1)/2 + sqrt(((t-1)/2)^2 - m(r-1)(t-m)/r)).
Surd krfree_bound(int r, int t, int m);
Surd krfree_bound_at_r(int r, int t);

struct KtThreshold {
  int t = 0;
  int alpha = 0;
  // Absent when F has no edges (every vertex lies in the independent set).
  std::optional<int> d;
  int u = 0;
  std::optional<int> r_min;
};
KtThreshold kt_threshold(const Graph& f);

std::int64_t path_sat_threshold(int t);

struct SplitPathLeading {
  // True when r >= 2t-2: the split graph has no P_{r+1} at all.
  bool path_free = false;
  int k = 0;
  Rational value{0};
};
SplitPathLeading split_path_leading(int n, int t, int r);

// Uniform report used by the command line.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  // Exact text ("15", "27/2", "3/2 * (11/2 + sqrt(49/4))").
  std::string exact;
  double value = 0;
  // Present when an order n was supplied for a threshold.
  std::optional<bool> satisfied;
  std::vector<std::pair<std::string, std::string>> fields;
  std::string note;
};

std::vector<std::string> bound_names();
BoundReport evaluate_bound(const std::string& name,
                           const std::map<std::string, std::string>& params);

}  // namespace gensat

#endif  // GENSAT_BOUNDS_HPP_
