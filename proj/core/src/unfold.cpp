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

#include "sphgeo/unfold.hpp"

#include <algorithm>

namespace sphgeo {

CrossingSequence CrossingSequence::from_edges(const SolidSpec& spec,
                                              std::span<const int> edges) {
  const size_t n = edges.size();
  if (n < 2) throw InvalidSequence("a cyclic sequence needs at least two edges");
  std::vector<int> faces(n);
  for (size_t i = 0; i < n; ++i) {
    const int prev = edges[(i + n - 1) % n];
    faces[i] = spec.face_containing(prev, edges[i]);
    if (faces[i] < 0) {
      throw InvalidSequence("consecutive edges " + std::to_string(prev) + " and " +
                            std::to_string(edges[i]) + " do not share a face");
    }
  }
  std::vector<DirectedCrossing> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.push_back({faces[i], edges[i], faces[(i + 1) % n]});
  }
  CrossingSequence seq(std::move(out));
  seq.validate(spec);
  return seq;
}

CrossingSequence CrossingSequence::from_vertex_pairs(
    const SolidSpec& spec, std::span<const std::pair<int, int>> pairs) {
  std::vector<int> edges;
  for (const auto& [a, b] : pairs) {
    const int e = spec.edge_between(a, b);
    if (e < 0) {
      throw InvalidSequence("vertices " + std::to_string(a) + " and " +
                            std::to_string(b) + " are not joined by an edge");
    }
    edges.push_back(e);
  }
  return from_edges(spec, edges);
}

std::vector<int> CrossingSequence::edges() const {
  std::vector<int> out;
  out.reserve(crossings_.size());
  for (const auto& c : crossings_) out.push_back(c.edge);
  return out;
}

CrossingSequence CrossingSequence::reversed() const {
  std::vector<DirectedCrossing> out;
  out.reserve(crossings_.size());
  for (auto it = crossings_.rbegin(); it != crossings_.rend(); ++it) {
    out.push_back(it->reversed());
  }
  return CrossingSequence(std::move(out));
}

CrossingSequence CrossingSequence::rotated(size_t shift) const {
  if (crossings_.empty()) return *this;
  std::vector<DirectedCrossing> out(crossings_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
              out.end());
  return CrossingSequence(std::move(out));
}

CrossingSequence CrossingSequence::mapped(const SymmetryOp& op) const {
  std::vector<DirectedCrossing> out;
  out.reserve(crossings_.size());
  for (const auto& c : crossings_) {
    out.push_back({op.face_perm[c.from_face], op.edge_perm[c.edge], op.face_perm[c.to_face]});
  }
  return CrossingSequence(std::move(out));
}

void CrossingSequence::validate(const SolidSpec& spec) const {
  const size_t n = crossings_.size();
  if (n < 3) throw InvalidSequence("sequence has fewer than 3 crossings");
  for (size_t i = 0; i < n; ++i) {
    const DirectedCrossing& c = crossings_[i];
    if (c.edge < 0 || c.edge >= spec.edge_count() || c.from_face < 0 ||
        c.from_face >= spec.face_count()) {
      throw InvalidSequence("crossing " + std::to_string(i) + " is out of range");
    }
    if (spec.opposite_face(c.from_face, c.edge) != c.to_face) {
      throw InvalidSequence("crossing " + std::to_string(i) + " is not a gluing of the solid");
    }
    const DirectedCrossing& next = crossings_[(i + 1) % n];
    if (next.from_face != c.to_face) {
      throw InvalidSequence("crossings " + std::to_string(i) + " and " +
                            std::to_string((i + 1) % n) + " do not share a face");
    }
    if (next.edge == c.edge) {
      throw InvalidSequence("crossings " + std::to_string(i) + " and " +
                            std::to_string((i + 1) % n) + " reuse the same edge");
    }
  }
}

bool CrossingSequence::is_valid(const SolidSpec& spec) const {
  try {
    validate(spec);
    return true;
  } catch (const InvalidSequence&) {
    return false;
  }
}

bool CrossingSequence::is_primitive() const {
  const size_t n = crossings_.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (size_t i = 0; i + d < n && periodic; ++i) {
      periodic = crossings_[i] == crossings_[i + d];
    }
    if (periodic) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Rotation3 local_step(const SolidSpec& spec, const DirectedCrossing& crossing) {
  const int n = spec.sides();
  const int k = spec.local_edge_of(crossing.from_face, crossing.edge);
  if (k < 0) throw InvalidSequence("edge is not on the from-face");
  const Gluing& g = spec.glued(crossing.from_face, k);
  if (g.face != crossing.to_face) throw InvalidSequence("crossing is not a gluing");
  const auto& c = spec.chart();
  const int j = g.local_edge;
  // The partner edge runs the other way, so its start lands on our end.
  return Rotation3::aligning(c[j].vec(), c[(j + 1) % n].vec(), c[(k + 1) % n].vec(),
                             c[k].vec());
}

Rotation3 step_rotation(const SolidSpec& spec, const Rotation3& placement,
                        const DirectedCrossing& crossing) {
  return placement * local_step(spec, crossing);
}

GreatArc developed_edge(const SolidSpec& spec, const Rotation3& placement,
                        const DirectedCrossing& crossing) {
  const int n = spec.sides();
  const int k = spec.local_edge_of(crossing.from_face, crossing.edge);
  if (k < 0) throw InvalidSequence("edge is not on the from-face");
  const auto& c = spec.chart();
  return GreatArc(SpherePoint::normalized(placement * c[(k + 1) % n].vec()),
                  SpherePoint::normalized(placement * c[k].vec()));
}

Development develop(const SolidSpec& spec, const CrossingSequence& seq) {
  seq.validate(spec);
  Development dev;
  const size_t n = seq.size();
  dev.placements.reserve(n + 1);
  dev.edges.reserve(n + 1);
  dev.placements.push_back(Rotation3::identity());
  for (size_t i = 0; i < n; ++i) {
    dev.edges.push_back(developed_edge(spec, dev.placements[i], seq[i]));
    dev.placements.push_back(step_rotation(spec, dev.placements[i], seq[i]));
  }
  dev.closing = dev.placements.back();
  dev.edges.push_back(developed_edge(spec, dev.closing, seq[0]));
  return dev;
}

Rotation3 holonomy(const SolidSpec& spec, const CrossingSequence& seq) {
  return develop(spec, seq).closing;
}

StepTable::StepTable(const SolidSpec& spec) : sides_(spec.sides()) {
  steps_.reserve(static_cast<size_t>(spec.face_count() * sides_));
  for (int f = 0; f < spec.face_count(); ++f) {
    for (int k = 0; k < sides_; ++k) {
      const Gluing& g = spec.glued(f, k);
      steps_.push_back(local_step(spec, {f, spec.edge_id(f, k), g.face}));
    }
  }
}

const Rotation3& StepTable::step(const SolidSpec& spec, const DirectedCrossing& c) const {
  return step(c.from_face, spec.local_edge_of(c.from_face, c.edge));
}

}  // namespace sphgeo
