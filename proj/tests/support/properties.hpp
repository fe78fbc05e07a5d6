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

#ifndef SPHGEO_TESTS_SUPPORT_PROPERTIES_HPP_
#define SPHGEO_TESTS_SUPPORT_PROPERTIES_HPP_

// Randomized property checks shared by the unit and acceptance suites.
// Every check is seeded, so a failure reproduces exactly.

#include <cstdint>
#include <random>
#include <string>

#include "sphgeo/finder.hpp"
#include "sphgeo/solids.hpp"
#include "sphgeo/unfold.hpp"

namespace sphgeo::testing {

struct PropertyOutcome {
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return instances > 0 && failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// Uniform in the admissible interval, kept `margin` away from its ends.
double random_alpha(SolidKind kind, std::mt19937_64& rng, double margin = 0.02);

// A random closed walk of at least 3 crossings (not necessarily primitive).
CrossingSequence random_cycle(const SolidSpec& spec, std::mt19937_64& rng, int max_len = 14);

// Random cyclic shift of seq.
CrossingSequence random_shift(const CrossingSequence& seq, std::mt19937_64& rng);

// Rotation angles of the holonomy of a random cycle and of a random cyclic
// shift agree within 1e-10; reversal inverts it.
PropertyOutcome check_holonomy_conjugacy(SolidKind kind, int instances, uint64_t seed);

// solve(g seq) = g solve(seq) crossing by crossing, within 1e-9.
PropertyOutcome check_symmetry_equivariance(SolidKind kind, int instances, uint64_t seed);

// Deterministic solves; two sequences with the same canonical form give
// paths that agree within 1e-9 after undoing the relating symmetry, shift
// and reversal.
PropertyOutcome check_sequence_uniqueness(SolidKind kind, int instances, uint64_t seed);

// enumerate_classes with and without pruning agree for depth <= max_depth.
PropertyOutcome check_pruning_equivalence(SolidKind kind, int instances, uint64_t seed,
                                          int max_depth = 8);

}  // namespace sphgeo::testing

#endif  // SPHGEO_TESTS_SUPPORT_PROPERTIES_HPP_
