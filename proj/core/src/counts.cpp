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

#include "sphgeo/counts.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sphgeo/solids.hpp"

namespace sphgeo {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > kPi / 3.0 && alpha < 2.0 * kPi / 3.0)) {
    throw DomainError("alpha must lie in (pi/3, 2pi/3)");
  }
}

double half_sin_sq(double alpha) {
  const double s = std::sin(0.5 * alpha);
  return s * s;
}

}  // namespace

double f_alpha(double alpha) {
  check_alpha(alpha);
  const double x = half_sin_sq(alpha);
  const double c = std::cos(alpha);
  return kPi * kPi * c * c / (4.0 * x * (4.0 * x - 1.0));
}

double g_alpha(double alpha) {
  check_alpha(alpha);
  const double x = half_sin_sq(alpha);
  return kPi * kPi * x / (4.0 * x - 1.0);
}

double c1_alpha(double alpha) {
  check_alpha(alpha);
  const double x = half_sin_sq(alpha);
  const double c = std::cos(alpha);
  return 3.0 * c * c / (8.0 * x * (4.0 * x - 1.0));
}

double c2_alpha(double alpha) {
  check_alpha(alpha);
  const double x = half_sin_sq(alpha);
  return 2.0 * x / (4.0 * x - 1.0) + 1.0;
}

bool necessary_excluded(int p, int q, double alpha) {
  const GeodesicType t = make_type(p, q);
  return static_cast<double>(quadratic_form(t.p, t.q)) >= g_alpha(alpha);
}

bool sufficient_exists(int p, int q, double alpha) {
  const GeodesicType t = make_type(p, q);
  check_alpha(alpha);
  const double s = static_cast<double>(quadratic_form(t.p, t.q));
  const double bound = 2.0 * std::asin(kPi / (std::sqrt(s) + std::sqrt(s + 2.0 * kPi * kPi)));
  return tetra_edge(PlanarAngle(alpha)) < bound;
}

std::vector<int32_t> totients(int64_t n) {
  if (n < 0) throw DomainError("totients needs n >= 0");
  std::vector<int32_t> phi(static_cast<size_t>(n) + 1, 0);
  std::vector<int32_t> primes;
  if (n >= 1) phi[1] = 1;
  for (int64_t i = 2; i <= n; ++i) {
    if (phi[i] == 0) {
      phi[i] = static_cast<int32_t>(i - 1);
      primes.push_back(static_cast<int32_t>(i));
    }
    for (int32_t p : primes) {
      const int64_t m = i * p;
      if (m > n) break;
      if (i % p == 0) {
        phi[m] = phi[i] * p;
        break;
      }
      phi[m] = phi[i] * (p - 1);
    }
  }
  return phi;
}

TotientSum totient_sum(int64_t x) {
  if (x < 1) throw DomainError("totient_sum needs x >= 1");
  const auto phi = totients(x);
  TotientSum out;
  out.value = std::accumulate(phi.begin(), phi.end(), int64_t{0});
  const double xd = static_cast<double>(x);
  out.ratio = static_cast<double>(out.value) / (3.0 / (kPi * kPi) * xd * xd);
  return out;
}

int64_t psi_count(double threshold, PsiPredicate predicate) {
  if (!std::isfinite(threshold)) throw DomainError("psi_count threshold must be finite");
  if (threshold <= 0.0) return 0;
  // Both predicates force q below this bound.
  const int64_t q_max = predicate == PsiPredicate::kForm
                            ? static_cast<int64_t>(std::ceil(std::sqrt(threshold / 3.0 * 4.0)))
                            : static_cast<int64_t>(std::ceil(threshold));
  int64_t count = 0;
  for (int64_t q = 1; q <= q_max + 1; ++q) {
    for (int64_t p = 1; p <= q; ++p) {
      const double v = predicate == PsiPredicate::kForm ? static_cast<double>(quadratic_form(p, q))
                                                        : static_cast<double>(p + q);
      if (v >= threshold) break;
      if (std::gcd(p, q) == 1) ++count;
    }
  }
  return count;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kNecessaryExcluded: return "necessary-excluded";
    case Verdict::kSufficientGuaranteed: return "sufficient-guaranteed";
    case Verdict::kSolverFound: return "solver-found";
    case Verdict::kSolverNotFound: return "solver-not-found";
    case Verdict::kBeyondDepth: return "beyond-depth";
  }
  return "unknown";
}

std::vector<GeodesicType> types_below(double bound) {
  std::vector<GeodesicType> out;
  if (!(bound > 0.0)) return out;
  for (int q = 1; static_cast<double>(q) * q < bound; ++q) {
    for (int p = 0; p <= q; ++p) {
      if (static_cast<double>(quadratic_form(p, q)) >= bound) break;
      if (std::gcd(p, q) == 1) out.push_back({p, q});
    }
  }
  std::sort(out.begin(), out.end(), [](const GeodesicType& a, const GeodesicType& b) {
    const int64_t sa = quadratic_form(a.p, a.q);
    const int64_t sb = quadratic_form(b.p, b.q);
    return sa != sb ? sa < sb : a.p < b.p;
  });
  return out;
}

CountReport count_tetra(double alpha, const CountOptions& opts) {
  check_alpha(alpha);
  CountReport r;
  r.alpha = alpha;
  r.f = f_alpha(alpha);
  r.g = g_alpha(alpha);
  r.c1 = c1_alpha(alpha);
  r.c2 = c2_alpha(alpha);
  r.psi1 = psi_count(r.f, PsiPredicate::kForm);
  r.psi2 = psi_count(r.g, PsiPredicate::kForm);

  const SolidSpec spec = build_solid(SolidKind::Tetrahedron, PlanarAngle(alpha));
  SearchOptions search;
  search.tol = opts.tol;
  for (const GeodesicType& t : types_below(r.g)) {
    TypeVerdict v;
    v.type = t;
    v.s = quadratic_form(t.p, t.q);
    v.necessary_excluded = necessary_excluded(t.p, t.q, alpha);
    v.sufficient = sufficient_exists(t.p, t.q, alpha);
    if (t.crossings() > opts.max_crossings) {
      v.verdict = Verdict::kBeyondDepth;
      r.complete = false;
      r.verdicts.push_back(v);
      continue;
    }
    search.max_crossings = t.crossings();
    auto cls = find_tetra_type(spec, t, search);
    v.found = cls.has_value();
    if (cls) {
      v.verdict = v.sufficient ? Verdict::kSufficientGuaranteed : Verdict::kSolverFound;
      r.realizable.push_back(t);
      r.classes.push_back(std::move(*cls));
    } else {
      v.verdict = Verdict::kSolverNotFound;
    }
    r.verdicts.push_back(v);
  }
  r.N = static_cast<int>(r.realizable.size());
  return r;
}

CountReport count_tetra(double alpha, int max_crossings) {
  CountOptions opts;
  opts.max_crossings = max_crossings;
  return count_tetra(alpha, opts);
}

}  // namespace sphgeo
