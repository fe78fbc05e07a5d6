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

#include <gtest/gtest.h>

#include "support/properties.hpp"

namespace sphgeo::testing {
namespace {

constexpr int kInstances = 1000;

class PropertyTest : public ::testing::TestWithParam<SolidKind> {};

void expect_ok(const PropertyOutcome& out) {
  EXPECT_EQ(out.instances, kInstances);
  EXPECT_EQ(out.failures, 0) << out.first_failure;
}

TEST_P(PropertyTest, HolonomyConjugacy) {
  expect_ok(check_holonomy_conjugacy(GetParam(), kInstances, 11));
}

TEST_P(PropertyTest, SymmetryEquivariance) {
  expect_ok(check_symmetry_equivariance(GetParam(), kInstances, 12));
}

TEST_P(PropertyTest, SequenceUniqueness) {
  expect_ok(check_sequence_uniqueness(GetParam(), kInstances, 13));
}

TEST_P(PropertyTest, PruningEquivalence) {
  expect_ok(check_pruning_equivalence(GetParam(), kInstances, 14));
}

INSTANTIATE_TEST_SUITE_P(Solids, PropertyTest,
                         ::testing::Values(SolidKind::Tetrahedron, SolidKind::Octahedron,
                                           SolidKind::Cube),
                         [](const auto& info) { return std::string(to_string(info.param)); });

}  // namespace
}  // namespace sphgeo::testing
