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

#ifndef RIGSPEC_SPECTRAL_HPP_
#define RIGSPEC_SPECTRAL_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rigspec/graph.hpp"

namespace rigspec {

inline constexpr double kEigenTolerance = 1e-10;
inline constexpr double kCrossCheckTolerance = 1e-8;

enum class MatrixKind { kAdjacency, kLaplacian };

/// Full spectrum of A(G) or L(G) = D(G) - A(G), ascending.
struct SymmetricSpectrum {
  MatrixKind kind = MatrixKind::kAdjacency;
  std::vector<double> eigenvalues;

  double largest() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
  double sum() const;
};

SymmetricSpectrum adjacency_spectrum(const Graph& g);
SymmetricSpectrum laplacian_spectrum(const Graph& g);

/// Largest adjacency eigenvalue. Requires n >= 1.
double spectral_radius(const Graph& g);

/// Second-smallest Laplacian eigenvalue. Requires n >= 2.
double algebraic_connectivity(const Graph& g);

/// Quotient of A(G) over a vertex partition: entry (i, j) is the average
/// over v in class i of the number of neighbors of v in class j.
struct QuotientMatrix {
  std::vector<VertexSet> classes;
  std::vector<std::vector<double>> entries;
  /// Every class sees a constant number of neighbors in every class.
  bool equitable = false;

  int dimension() const { return static_cast<int>(classes.size()); }

  /// Eigenvalues, ascending. Always real: scaling by sqrt(|class|)
  /// symmetrizes any adjacency quotient.
  std::vector<double> eigenvalues() const;
};

/// Throws std::invalid_argument unless the classes are nonempty, disjoint
/// and cover V(g).
QuotientMatrix quotient_matrix(const Graph& g, std::vector<VertexSet> classes);

/// The four classes of build_bni(n, a, i): matched vertices of the first
/// clique, the rest of the first clique, matched vertices of the second
/// clique, the rest of the second. Requires 1 <= i < a and i < n - a.
std::vector<VertexSet> bni_classes(int n, int a, int i);

/// Characteristic polynomial of the bni quotient, monic, highest degree
/// first, with exact integer coefficients.
struct QuarticPoly {
  std::array<std::int64_t, 5> coeffs{};
  int n = 0;
  int a = 0;
  int i = 0;
  /// i >= 2, a >= i + 1, n >= 2a + 2.
  bool within_hypotheses = false;

  long double operator()(long double x) const;
  long double derivative(long double x) const;
};

QuarticPoly char_poly_bni(int n, int a, int i);

/// Spectral radius of build_bni(n, a, i) as the largest real root of its
/// quotient polynomial, located by monotone Newton descent from n - 1 and
/// certified to lie in (n - a - 2, n - 1]. Falls back to the quotient
/// eigensolve when Newton stalls. Requires 1 <= i < a and i < n - a (so
/// all four classes are nonempty). Throws std::runtime_error if the root
/// leaves the bracket.
double rho_bni(int n, int a, int i);

/// (d - 1)/2 + sqrt(2m - n d + (d + 1)^2 / 4), d the minimum degree.
/// Throws std::invalid_argument for d < 1, std::domain_error for a
/// negative radicand.
double hong_bound(int n, int m, int delta);

/// True when every degree equals delta, or every degree is delta or n - 1.
bool hong_equality_shape(const Graph& g);

/// (x - 1)/2 + sqrt(2q - p x + (1 + x)^2 / 4), decreasing in x on its
/// domain. Throws std::domain_error outside 2q <= p(p-1), 0 <= x <= p-1,
/// or where the radicand is negative.
double f_of_x(int p, int q, double x);

/// n^2/2 - (2d + 3) n / 2 + (d + 1)^2.
double edge_lower_bound(int n, int delta);

struct BinomialMax {
  std::int64_t value = 0;
  std::vector<int> argmax;
};

/// Maximum of sum C(n_j, 2) over positive (n_1..n_t) summing to n with
/// n_j >= lower[j] for j < t and n_t >= every other part, t = lower.size()+1
/// in {3, 4}. Closed form: attained only at (lower..., n - sum(lower)).
/// Throws std::invalid_argument when t is wrong, some lower[j] < 1, or
/// sum(lower) + max(lower) > n.
BinomialMax lemma27_max(int n, std::span<const int> lower);

}  // namespace rigspec

#endif  // RIGSPEC_SPECTRAL_HPP_
