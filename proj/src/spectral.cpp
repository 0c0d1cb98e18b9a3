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

#include "rigspec/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rigspec {

namespace {

Eigen::MatrixXd dense(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    double off = kind == MatrixKind::kAdjacency ? 1.0 : -1.0;
    m(e.u, e.v) = off;
    m(e.v, e.u) = off;
  }
  if (kind == MatrixKind::kLaplacian) {
    for (int v = 0; v < n; ++v) m(v, v) = g.degree(v);
  }
  return m;
}

SymmetricSpectrum spectrum(const Graph& g, MatrixKind kind) {
  SymmetricSpectrum s;
  s.kind = kind;
  if (g.order() == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense(g, kind),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  s.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

}  // namespace

double SymmetricSpectrum::sum() const {
  return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
}

SymmetricSpectrum adjacency_spectrum(const Graph& g) {
  return spectrum(g, MatrixKind::kAdjacency);
}

SymmetricSpectrum laplacian_spectrum(const Graph& g) {
  return spectrum(g, MatrixKind::kLaplacian);
}

double spectral_radius(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("spectral_radius needs n >= 1");
  return adjacency_spectrum(g).largest();
}

double algebraic_connectivity(const Graph& g) {
  if (g.order() < 2) {
    throw std::invalid_argument("algebraic_connectivity needs n >= 2");
  }
  return laplacian_spectrum(g).eigenvalues[1];
}

QuotientMatrix quotient_matrix(const Graph& g, std::vector<VertexSet> classes) {
  const int n = g.order();
  const int k = static_cast<int>(classes.size());
  std::vector<int> class_of(n, -1);
  for (int c = 0; c < k; ++c) {
    if (classes[c].empty()) throw std::invalid_argument("empty class");
    for (int v : classes[c]) {
      if (v < 0 || v >= n) throw std::invalid_argument("class vertex out of range");
      if (class_of[v] != -1) throw std::invalid_argument("classes overlap");
      class_of[v] = c;
    }
  }
  if (std::find(class_of.begin(), class_of.end(), -1) != class_of.end()) {
    throw std::invalid_argument("classes do not cover V");
  }

  QuotientMatrix q;
  q.entries.assign(k, std::vector<double>(k, 0.0));
  q.equitable = true;
  std::vector<int> row(k);
  for (int c = 0; c < k; ++c) {
    std::vector<long long> block_sum(k, 0);
    std::vector<int> first(k, -1);
    for (int v : classes[c]) {
      std::fill(row.begin(), row.end(), 0);
      for (int w : g.neighbors(v)) ++row[class_of[w]];
      for (int d = 0; d < k; ++d) {
        block_sum[d] += row[d];
        if (first[d] == -1) {
          first[d] = row[d];
        } else if (first[d] != row[d]) {
          q.equitable = false;
        }
      }
    }
    for (int d = 0; d < k; ++d) {
      q.entries[c][d] = static_cast<double>(block_sum[d]) /
                        static_cast<double>(classes[c].size());
    }
  }
  q.classes = std::move(classes);
  return q;
}

std::vector<double> QuotientMatrix::eigenvalues() const {
  const int k = dimension();
  Eigen::MatrixXd s(k, k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      s(r, c) = entries[r][c] *
                std::sqrt(static_cast<double>(classes[r].size()) /
                          static_cast<double>(classes[c].size()));
    }
  }
  s = 0.5 * (s + s.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> bni_classes(int n, int a, int i) {
  if (i < 1 || i >= a || i >= n - a) {
    throw std::invalid_argument("bni_classes: need 1 <= i < a and i < n - a");
  }
  std::vector<VertexSet> classes(4);
  for (int v = 0; v < i; ++v) classes[0].push_back(v);
  for (int v = i; v < a; ++v) classes[1].push_back(v);
  for (int v = a; v < a + i; ++v) classes[2].push_back(v);
  for (int v = a + i; v < n; ++v) classes[3].push_back(v);
  return classes;
}

long double QuarticPoly::operator()(long double x) const {
  long double acc = 0;
  for (std::int64_t c : coeffs) acc = acc * x + static_cast<long double>(c);
  return acc;
}

long double QuarticPoly::derivative(long double x) const {
  long double acc = 0;
  for (int k = 0; k < 4; ++k) {
    acc = acc * x + static_cast<long double>(coeffs[k]) * (4 - k);
  }
  return acc;
}

QuarticPoly char_poly_bni(int n, int a, int i) {
  const std::int64_t N = n;
  const std::int64_t A = a;
  const std::int64_t I = i;
  QuarticPoly p;
  p.n = n;
  p.a = a;
  p.i = i;
  p.within_hypotheses = i >= 2 && a >= i + 1 && n >= 2 * a + 2;
  p.coeffs = {1,
              4 - N,
              A * N - A * A - 3 * N + 5,
              2 * (A * N - A * A - I - N + 1),
              -I * I + I * N - 2 * I};
  return p;
}

double rho_bni(int n, int a, int i) {
  if (i < 1 || i >= a || i >= n - a) {
    throw std::invalid_argument("rho_bni: need 1 <= i < a and i < n - a");
  }
  const QuarticPoly p = char_poly_bni(n, a, i);
  const long double lo = n - a - 2;
  const long double hi = n - 1;

  // All roots are real, so Newton started right of the largest root
  // decreases monotonically onto it.
  long double x = hi;
  bool converged = p(x) == 0;
  for (int iter = 0; iter < 200 && !converged; ++iter) {
    long double slope = p.derivative(x);
    if (!(slope > 0)) break;
    long double next = x - p(x) / slope;
    if (!(next < x) || next <= lo) {
      converged = !(next < x) && next > lo;
      break;
    }
    if (x - next <= 1e-15L * std::fabs(x)) converged = true;
    x = next;
  }
  if (!converged) {
    std::vector<double> values =
        quotient_matrix(build_bni(n, a, i), bni_classes(n, a, i)).eigenvalues();
    x = values.back();
  }
  if (!(x > lo && x <= hi)) {
    throw std::runtime_error("rho_bni: root outside (n - a - 2, n - 1]");
  }
  return static_cast<double>(x);
}

}  // namespace rigspec
