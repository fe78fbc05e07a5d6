// Copyright 2026 The sphgeo Authors.
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

#ifndef SPHGEO_COUNTS_HPP_
#define SPHGEO_COUNTS_HPP_

// Counting simple closed geodesics on the regular tetrahedron.  A type (p,q)
// is bounded through the quadratic form s = p^2 + pq + q^2: the necessary
// condition is s < g(alpha), the sufficient one compares the edge length
// with a threshold falling in s.

#include <cstdint>
#include <optional>
#include <vector>

#include "sphgeo/finder.hpp"
#include "sphgeo/sphtrig.hpp"

namespace sphgeo {

// All of these take alpha in (pi/3, 2 pi/3) and throw DomainError otherwise.
double f_alpha(double alpha);
double g_alpha(double alpha);
double c1_alpha(double alpha);
double c2_alpha(double alpha);

inline int64_t quadratic_form(int64_t p, int64_t q) { return p * p + p * q + q * q; }

// True iff s(p,q) >= g(alpha): no simple closed geodesic of this type.
// Throws ClassificationError on an invalid pair.
bool necessary_excluded(int p, int q, double alpha);
// True iff the edge length is below 2 arcsin(pi / (sqrt(s) + sqrt(s + 2 pi^2))).
bool sufficient_exists(int p, int q, double alpha);

struct TotientSum {
  int64_t value = 0;
  // value / ((3 / pi^2) x^2)
  double ratio = 0.0;
};

// Sum of phi(n) for n = 1..x.  Throws DomainError for x < 1.
TotientSum totient_sum(int64_t x);
// phi(0..n), from a linear sieve.
std::vector<int32_t> totients(int64_t n);

enum class PsiPredicate {
  kForm,  // p^2 + pq + q^2 < threshold
  kSum,   // p + q < threshold
};

// Coprime pairs with 0 < p <= q meeting the predicate, by brute force.
int64_t psi_count(double threshold, PsiPredicate predicate);

enum class Verdict {
  kNecessaryExcluded,
  kSufficientGuaranteed,
  kSolverFound,
  kSolverNotFound,
  kBeyondDepth,
};

const char* to_string(Verdict v);

struct TypeVerdict {
  GeodesicType type;
  int64_t s = 0;
  bool necessary_excluded = false;
  bool sufficient = false;
  // Set when the targeted search ran.
  std::optional<bool> found;
  Verdict verdict = Verdict::kSolverNotFound;
};

struct CountOptions {
  // Types needing more crossings than this are left unresolved.
  int max_crossings = 1 << 20;
  Tolerances tol;
};

struct CountReport {
  double alpha = 0.0;
  std::vector<GeodesicType> realizable;
  std::vector<GeodesicClass> classes;  // one per realizable type
  int N = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  double f = 0.0;
  double g = 0.0;
  int64_t psi1 = 0;  // s < f
  int64_t psi2 = 0;  // s < g
  // Candidates (s < g) in increasing (s, p) order.
  std::vector<TypeVerdict> verdicts;
  // False when some candidate exceeded max_crossings.
  bool complete = true;
};

// Candidate types are the coprime pairs with s < g(alpha), 0 <= p <= q; each
// is resolved by find_tetra_type.
CountReport count_tetra(double alpha, const CountOptions& opts = {});
CountReport count_tetra(double alpha, int max_crossings);

// Candidate pairs (0 <= p <= q, coprime) with s < bound, sorted by (s, p).
std::vector<GeodesicType> types_below(double bound);

}  // namespace sphgeo

#endif  // SPHGEO_COUNTS_HPP_
