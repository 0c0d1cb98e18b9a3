// Copyright 2026 The Authors.
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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rigspec/spectral.hpp"

namespace rigspec {

double hong_bound(int n, int m, int delta) {
  if (delta < 1) throw std::invalid_argument("hong_bound: need delta >= 1");
  const double d = delta;
  const double radicand = 2.0 * m - static_cast<double>(n) * d + (d + 1) * (d + 1) / 4;
  if (radicand < 0) throw std::domain_error("hong_bound: negative radicand");
  return (d - 1) / 2 + std::sqrt(radicand);
}

bool hong_equality_shape(const Graph& g) {
  const int n = g.order();
  const int delta = g.min_degree();
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != delta && g.degree(v) != n - 1) return false;
  }
  return true;
}

double f_of_x(int p, int q, double x) {
  if (p < 0 || q < 0 || 2LL * q > static_cast<long long>(p) * (p - 1)) {
    throw std::domain_error("f_of_x: need 0 <= 2q <= p(p-1)");
  }
  if (x < 0 || x > p - 1) throw std::domain_error("f_of_x: need 0 <= x <= p-1");
  const double radicand = 2.0 * q - p * x + (1 + x) * (1 + x) / 4;
  if (radicand < 0) throw std::domain_error("f_of_x: negative radicand");
  return (x - 1) / 2 + std::sqrt(radicand);
}

double edge_lower_bound(int n, int delta) {
  const double nn = n;
  const double d = delta;
  return nn * nn / 2 - (2 * d + 3) * nn / 2 + (d + 1) * (d + 1);
}

BinomialMax lemma27_max(int n, std::span<const int> lower) {
  const int t = static_cast<int>(lower.size()) + 1;
  if (t != 3 && t != 4) throw std::invalid_argument("lemma27_max: t must be 3 or 4");
  if (std::any_of(lower.begin(), lower.end(), [](int a) { return a < 1; })) {
    throw std::invalid_argument("lemma27_max: lower bounds must be positive");
  }
  const int total = std::accumulate(lower.begin(), lower.end(), 0);
  const int largest = *std::max_element(lower.begin(), lower.end());
  if (total + largest > n) {
    throw std::invalid_argument("lemma27_max: infeasible, sum(a) + max(a) > n");
  }
  auto pairs = [](std::int64_t k) { return k * (k - 1) / 2; };
  BinomialMax best;
  best.argmax.assign(lower.begin(), lower.end());
  best.argmax.push_back(n - total);
  for (int part : best.argmax) best.value += pairs(part);
  return best;
}

}  // namespace rigspec
