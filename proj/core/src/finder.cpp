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

#include "sphgeo/finder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sphgeo/feasibility.hpp"

namespace sphgeo {

namespace {

double wrap_positive(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Angle in (0, pi) between the travel direction and the edge running from
// `from` to `to`, both at the crossing point x.
double incidence_angle(const Vec3& from, const Vec3& to, const Vec3& x, const Vec3& travel) {
  const Vec3 tangent = from.cross(to).normalized().cross(x);
  return std::atan2(tangent.cross(travel).norm(), tangent.dot(travel));
}

}  // namespace

std::optional<GeodesicPath> closed_geodesic(const SolidSpec& spec, const CrossingSequence& seq,
                                            const Tolerances& tol) {
  if (!seq.is_valid(spec)) return std::nullopt;
  const Development dev = develop(spec, seq);
  const size_t n = seq.size();
  const AxisAngle aa = axis_angle(dev.closing);
  if (aa.near_identity) return std::nullopt;

  Vec3 u = aa.axis.vec();
  {
    const double sa = u.dot(dev.edges[0].a().vec());
    const double sb = u.dot(dev.edges[0].b().vec());
    if (sa > 0.0 && sb < 0.0) {
      // travelling positively about u enters the next face
    } else if (sa < 0.0 && sb > 0.0) {
      u = -u;
    } else {
      return std::nullopt;
    }
  }
  const double theta = rotation_angle_about(dev.closing, u);
  if (!(theta > 0.0 && theta < kTwoPi)) return std::nullopt;

  const SpherePoint pole(u);
  const PoleFrame frame(u);
  GeodesicPath path;
  path.seq = seq;
  path.pole = pole;
  path.holonomy_angle = theta;

  std::vector<Vec3> points(n + 1);
  std::vector<double> azimuths(n + 1);
  const auto& chart = spec.chart();
  const int sides = spec.sides();
  for (size_t i = 0; i <= n; ++i) {
    const GreatArc& arc = dev.edges[i];
    if (!(u.dot(arc.a().vec()) > 0.0 && u.dot(arc.b().vec()) < 0.0)) return std::nullopt;
    const auto cross = pole_edge_crossing(pole, arc);
    if (!cross) return std::nullopt;
    if (cross->t <= tol.vertex || cross->t >= 1.0 - tol.vertex) return std::nullopt;
    points[i] = cross->point;
    azimuths[i] = frame.azimuth(cross->point);
    if (i == n) break;

    const DirectedCrossing& c = seq[i];
    const Edge& e = spec.edge(c.edge);
    const auto& from_face = spec.face(c.from_face);
    const int k = spec.local_edge_of(c.from_face, c.edge);
    // Developed arc runs from local vertex k+1 to local vertex k.
    const int arc_start_vertex = from_face[(k + 1) % sides];
    PathCrossing pc;
    pc.edge = c.edge;
    pc.t = arc_start_vertex == e.v0 ? cross->t : 1.0 - cross->t;
    pc.point = cross->point;
    pc.azimuth = azimuths[i];
    const Vec3 travel = u.cross(cross->point);
    auto vertex_pos = [&](int face, const Rotation3& placement, int vertex) {
      const auto& fv = spec.face(face);
      const int idx = static_cast<int>(std::find(fv.begin(), fv.end(), vertex) - fv.begin());
      return Vec3(placement * chart[idx].vec());
    };
    pc.incidence = incidence_angle(vertex_pos(c.from_face, dev.placements[i], e.v0),
                                   vertex_pos(c.from_face, dev.placements[i], e.v1),
                                   cross->point, travel);
    pc.incidence_entered = incidence_angle(vertex_pos(c.to_face, dev.placements[i + 1], e.v0),
                                           vertex_pos(c.to_face, dev.placements[i + 1], e.v1),
                                           cross->point, travel);
    path.crossings.push_back(pc);
  }

  double total = 0.0;
  path.arc_lengths.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const double gap = wrap_positive(azimuths[i + 1] - azimuths[i]);
    if (!(gap > 0.0 && gap < kPi)) return std::nullopt;
    path.arc_lengths.push_back(gap);
    total += gap;
  }
  const double span_error = std::abs(total - theta);
  const double transport_error = (dev.closing * points[0] - points[n]).norm();
  path.total_length = total;
  path.closure_residual = std::max(span_error, transport_error);
  if (path.closure_residual >= tol.closure) return std::nullopt;
  if (!(total < kTwoPi)) return std::nullopt;
  return path;
}

std::optional<GeodesicPath> solve_sequence(const SolidSpec& spec, const CrossingSequence& seq,
                                           const Tolerances& tol) {
  auto path = closed_geodesic(spec, seq, tol);
  if (!path || !is_simple(spec, *path, tol.simplicity)) return std::nullopt;
  return path;
}

bool is_simple(const SolidSpec& spec, const GeodesicPath& path, double tol) {
  const size_t n = path.seq.size();
  if (path.crossings.size() != n) return false;
  const int sides = spec.sides();
  const double perimeter = sides;

  // Boundary position (local edge + fraction) of crossing i seen from face f.
  auto position = [&](int face, size_t i) {
    const PathCrossing& pc = path.crossings[i];
    const int k = spec.local_edge_of(face, pc.edge);
    const Edge& e = spec.edge(pc.edge);
    const double t_local = spec.face(face)[k] == e.v0 ? pc.t : 1.0 - pc.t;
    return k + t_local;
  };
  struct Chord {
    double a;
    double b;
  };
  std::vector<std::vector<Chord>> chords(spec.face_count());
  for (size_t i = 0; i < n; ++i) {
    const int face = path.seq[i].to_face;
    chords[face].push_back({position(face, i), position(face, (i + 1) % n)});
  }
  auto near = [&](double x, double y) {
    const double d = std::abs(x - y);
    return std::min(d, perimeter - d) < tol;
  };
  auto inside = [&](const Chord& c, double x) {
    return wrap_positive((x - c.a) * kTwoPi / perimeter) <
           wrap_positive((c.b - c.a) * kTwoPi / perimeter);
  };
  for (const auto& list : chords) {
    for (size_t i = 0; i < list.size(); ++i) {
      for (size_t j = i + 1; j < list.size(); ++j) {
        const Chord& c = list[i];
        const Chord& d = list[j];
        if (near(c.a, d.a) || near(c.a, d.b) || near(c.b, d.a) || near(c.b, d.b)) return false;
        if (inside(c, d.a) != inside(c, d.b)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Lexicographically least rotation of the list.
std::vector<DirectedCrossing> least_rotation(const std::vector<DirectedCrossing>& v) {
  const size_t n = v.size();
  size_t best = 0;
  for (size_t s = 1; s < n; ++s) {
    for (size_t i = 0; i < n; ++i) {
      const auto& x = v[(s + i) % n];
      const auto& y = v[(best + i) % n];
      if (x < y) {
        best = s;
        break;
      }
      if (y < x) break;
    }
  }
  std::vector<DirectedCrossing> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = v[(best + i) % n];
  return out;
}

}  // namespace

CrossingSequence cycle_normal_form(const CrossingSequence& seq) {
  auto fwd = least_rotation(seq.crossings());
  auto bwd = least_rotation(seq.reversed().crossings());
  return CrossingSequence(std::min(fwd, bwd));
}

Canonicalizer::Canonicalizer(const SolidSpec& spec) : group_(symmetry_group(spec)) {}

CrossingSequence Canonicalizer::canonicalize(const CrossingSequence& seq) const {
  CrossingSequence best = cycle_normal_form(seq);
  for (const SymmetryOp& g : group_) {
    CrossingSequence cand = cycle_normal_form(seq.mapped(g));
    if (cand < best) best = std::move(cand);
  }
  return best;
}

int Canonicalizer::orbit_size(const CrossingSequence& seq) const {
  std::set<CrossingSequence> images;
  for (const SymmetryOp& g : group_) images.insert(cycle_normal_form(seq.mapped(g)));
  return static_cast<int>(images.size());
}

CrossingSequence canonicalize(const SolidSpec& spec, const CrossingSequence& seq) {
  return Canonicalizer(spec).canonicalize(seq);
}

// ---------------------------------------------------------------------------

GeodesicType make_type(int p, int q) {
  if (p < 0 || q < 1 || p > q || std::gcd(p, q) != 1) {
    throw ClassificationError("(" + std::to_string(p) + "," + std::to_string(q) +
                              ") is not a coprime pair with 0 <= p <= q");
  }
  return GeodesicType{p, q};
}

GeodesicType type_from_pair_counts(int a, int b, int c) {
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  if (s[2] != s[0] + s[1]) {
    throw ClassificationError("pair counts " + std::to_string(a) + "," + std::to_string(b) +
                              "," + std::to_string(c) + " do not have the form (p, q, p+q)");
  }
  return make_type(s[0], s[1]);
}

namespace {

// The three pairs of opposite tetrahedron edges, as edge ids.
std::array<std::array<int, 2>, 3> opposite_pairs(const SolidSpec& spec) {
  std::array<std::array<int, 2>, 3> pairs{};
  int found = 0;
  for (int e = 0; e < spec.edge_count(); ++e) {
    for (int f = e + 1; f < spec.edge_count(); ++f) {
      const Edge& a = spec.edge(e);
      const Edge& b = spec.edge(f);
      if (a.v0 != b.v0 && a.v0 != b.v1 && a.v1 != b.v0 && a.v1 != b.v1) {
        if (found < 3) pairs[found] = {e, f};
        ++found;
      }
    }
  }
  if (found != 3) throw ClassificationError("solid is not a tetrahedron");
  return pairs;
}

}  // namespace

GeodesicType classify_tetra_type(const SolidSpec& spec, const GeodesicPath& path) {
  if (spec.kind() != SolidKind::Tetrahedron) {
    throw ClassificationError("type (p,q) is defined for the tetrahedron only");
  }
  std::vector<int> counts(spec.edge_count(), 0);
  for (const auto& c : path.seq.crossings()) ++counts[c.edge];
  std::array<int, 3> pair_counts{};
  const auto pairs = opposite_pairs(spec);
  for (int i = 0; i < 3; ++i) {
    if (counts[pairs[i][0]] != counts[pairs[i][1]]) {
      throw ClassificationError("opposite edges are crossed a different number of times");
    }
    pair_counts[i] = counts[pairs[i][0]];
  }
  return type_from_pair_counts(pair_counts[0], pair_counts[1], pair_counts[2]);
}

ClassTag classify(const SolidSpec& spec, const GeodesicPath& path) {
  const size_t n = path.seq.size();
  switch (spec.kind()) {
    case SolidKind::Tetrahedron:
      try {
        return classify_tetra_type(spec, path);
      } catch (const ClassificationError&) {
        return std::monostate{};
      }
    case SolidKind::Octahedron:
      if (n == 6) return OctaType::kType1;
      if (n == 8) return OctaType::kType2;
      return std::monostate{};
    case SolidKind::Cube: {
      if (n == 4) return CubeType::kType1;
      if (n != 6) return std::monostate{};
      // The hexagon around a vertex pair avoids two vertices; the other
      // six-crossing class touches all eight.
      std::set<int> touched;
      for (const auto& c : path.seq.crossings()) {
        touched.insert(spec.edge(c.edge).v0);
        touched.insert(spec.edge(c.edge).v1);
      }
      return touched.size() == 8 ? CubeType::kType3 : CubeType::kType2;
    }
  }
  return std::monostate{};
}

std::string tag_label(const ClassTag& tag) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "unclassified"; }
    std::string operator()(const GeodesicType& t) const {
      return "type(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
    }
    std::string operator()(OctaType t) const { return t == OctaType::kType1 ? "type1" : "type2"; }
    std::string operator()(CubeType t) const {
      switch (t) {
        case CubeType::kType1: return "type1";
        case CubeType::kType2: return "type2";
        case CubeType::kType3: return "type3";
      }
      return "unclassified";
    }
  };
  return std::visit(Visitor{}, tag);
}

// ---------------------------------------------------------------------------

namespace {

bool on_minor_arc(const GreatArc& arc, const Vec3& p) {
  const Vec3& a = arc.a().vec();
  const Vec3& b = arc.b().vec();
  const Vec3 n = a.cross(b);
  return a.cross(p).dot(n) >= 0.0 && p.cross(b).dot(n) >= 0.0;
}

double point_arc_distance(const Vec3& p, const GreatArc& arc) {
  const Vec3& a = arc.a().vec();
  const Vec3& b = arc.b().vec();
  const Vec3 n = a.cross(b).normalized();
  const Vec3 proj = p - p.dot(n) * n;
  if (proj.norm() > 1e-12 && on_minor_arc(arc, proj.normalized())) {
    return std::asin(std::min(1.0, std::abs(p.dot(n))));
  }
  return std::min(arc_distance(p, a), arc_distance(p, b));
}

double arc_arc_distance(const GreatArc& x, const GreatArc& y) {
  const Vec3 nx = x.a().vec().cross(x.b().vec());
  const Vec3 ny = y.a().vec().cross(y.b().vec());
  const Vec3 line = nx.cross(ny);
  if (line.norm() > 1e-15) {
    const Vec3 p = line.normalized();
    if ((on_minor_arc(x, p) && on_minor_arc(y, p)) || (on_minor_arc(x, -p) && on_minor_arc(y, -p))) {
      return 0.0;
    }
  }
  return std::min({point_arc_distance(x.a().vec(), y), point_arc_distance(x.b().vec(), y),
                   point_arc_distance(y.a().vec(), x), point_arc_distance(y.b().vec(), x)});
}

// Lowest directed crossing: edge 0 entered from its first face.
DirectedCrossing start_crossing(const SolidSpec& spec) {
  const Edge& e = spec.edge(0);
  const int from = std::min(e.faces[0], e.faces[1]);
  return {from, 0, spec.opposite_face(from, 0)};
}

// Depth-first walk over crossing sequences that start with a fixed directed
// crossing.  `on_cycle` sees each primitive closed candidate and returns
// true to stop the walk.
class SequenceWalker {
 public:
  using CycleVisitor = std::function<bool(const CrossingSequence&)>;
  using EdgeFilter = std::function<bool(const std::vector<int>& counts, int depth)>;

  SequenceWalker(const SolidSpec& spec, const SearchOptions& opts, SearchStats* stats)
      : spec_(spec), opts_(opts), stats_(stats), steps_(spec) {}

  void set_exact_length(int length) { exact_length_ = length; }
  void set_edge_filter(EdgeFilter filter) { edge_filter_ = std::move(filter); }

  void run(const CycleVisitor& on_cycle) {
    on_cycle_ = &on_cycle;
    stop_ = false;
    const DirectedCrossing first = start_crossing(spec_);
    counts_.assign(spec_.edge_count(), 0);
    seq_.clear();
    placements_.assign(1, Rotation3::identity());
    arcs_.clear();
    lower_bound_.clear();
    push(first, FeasibleRegion());
  }

 private:
  // Appends the crossing and recurses unless pruned.
  void push(const DirectedCrossing& c, FeasibleRegion region) {
    if (stop_) return;
    if (stats_) ++stats_->nodes;
    const Rotation3& here = placements_.back();
    const GreatArc arc = developed_edge(spec_, here, c);

    ++counts_[c.edge];
    const int depth = static_cast<int>(seq_.size()) + 1;
    bool ok = !edge_filter_ || edge_filter_(counts_, depth);

    double bound = 0.0;
    if (ok && opts_.prune) {
      if (!region.add_crossing(arc)) {
        if (stats_) ++stats_->pruned_feasibility;
        ok = false;
      }
      if (ok) {
        for (size_t j = 0; j < arcs_.size(); ++j) {
          bound = std::max(bound, lower_bound_[j] + arc_arc_distance(arcs_[j], arc));
        }
        if (bound > kTwoPi + 1e-9) {
          if (stats_) ++stats_->pruned_length;
          ok = false;
        }
      }
    }
    if (ok) {
      seq_.push_back(c);
      arcs_.push_back(arc);
      lower_bound_.push_back(bound);
      placements_.push_back(here * steps_.step(spec_, c));
      expand(region);
      placements_.pop_back();
      lower_bound_.pop_back();
      arcs_.pop_back();
      seq_.pop_back();
    }
    --counts_[c.edge];
  }

  void expand(const FeasibleRegion& region) {
    const int depth = static_cast<int>(seq_.size());
    const DirectedCrossing& last = seq_.back();
    const DirectedCrossing& first = seq_.front();
    const int face = last.to_face;

    if (depth >= 3 && face == first.from_face && last.edge != first.edge &&
        (exact_length_ == 0 || depth == exact_length_)) {
      CrossingSequence cand(seq_);
      if (cand.is_primitive()) {
        if (stats_) ++stats_->candidates;
        if ((*on_cycle_)(cand)) {
          stop_ = true;
          return;
        }
      }
    }
    const int limit = exact_length_ > 0 ? exact_length_ : opts_.max_crossings;
    if (depth >= limit) return;

    for (int k = 0; k < spec_.sides() && !stop_; ++k) {
      const int e = spec_.edge_id(face, k);
      if (e == last.edge) continue;
      push({face, e, spec_.glued(face, k).face}, region);
    }
  }

  const SolidSpec& spec_;
  SearchOptions opts_;
  SearchStats* stats_;
  StepTable steps_;
  int exact_length_ = 0;
  EdgeFilter edge_filter_;
  const CycleVisitor* on_cycle_ = nullptr;
  bool stop_ = false;

  std::vector<int> counts_;
  std::vector<DirectedCrossing> seq_;
  std::vector<Rotation3> placements_;
  std::vector<GreatArc> arcs_;
  std::vector<double> lower_bound_;
};

GeodesicClass make_class(const SolidSpec& spec, const Canonicalizer& canon,
                         const CrossingSequence& canonical, const Tolerances& tol) {
  auto rep = solve_sequence(spec, canonical, tol);
  if (!rep) throw std::logic_error("canonical image of a geodesic failed to solve");
  GeodesicClass cls;
  cls.canonical = canonical;
  cls.orbit_size = canon.orbit_size(canonical);
  cls.tag = classify(spec, *rep);
  cls.representative = std::move(*rep);
  return cls;
}

}  // namespace

std::optional<GeodesicClass> solve_class(const SolidSpec& spec, const CrossingSequence& seq,
                                         const Tolerances& tol) {
  if (!solve_sequence(spec, seq, tol)) return std::nullopt;
  const Canonicalizer canon(spec);
  return make_class(spec, canon, canon.canonicalize(seq), tol);
}

std::vector<GeodesicClass> enumerate_classes(const SolidSpec& spec, const SearchOptions& opts,
                                             SearchStats* stats) {
  if (opts.max_crossings < 3) throw DomainError("max_crossings must be at least 3");
  const Canonicalizer canon(spec);
  std::set<CrossingSequence> found;
  SequenceWalker walker(spec, opts, stats);
  walker.run([&](const CrossingSequence& cand) {
    if (solve_sequence(spec, cand, opts.tol)) found.insert(canon.canonicalize(cand));
    return false;
  });
  std::vector<GeodesicClass> out;
  out.reserve(found.size());
  for (const auto& c : found) out.push_back(make_class(spec, canon, c, opts.tol));
  return out;
}

std::vector<GeodesicClass> enumerate_classes(const SolidSpec& spec, int max_crossings) {
  SearchOptions opts;
  opts.max_crossings = max_crossings;
  return enumerate_classes(spec, opts);
}

std::optional<GeodesicClass> find_tetra_type(const SolidSpec& spec, GeodesicType type,
                                             const SearchOptions& opts, SearchStats* stats) {
  if (spec.kind() != SolidKind::Tetrahedron) {
    throw DomainError("find_tetra_type needs a tetrahedron");
  }
  type = make_type(type.p, type.q);
  const auto pairs = opposite_pairs(spec);
  const std::array<int, 3> target{type.p, type.q, type.p + type.q};
  std::array<int, 3> perm{0, 1, 2};
  std::vector<std::array<int, 3>> assignments;
  do {
    assignments.push_back({target[perm[0]], target[perm[1]], target[perm[2]]});
  } while (std::next_permutation(perm.begin(), perm.end()));

  const int length = type.crossings();
  SequenceWalker walker(spec, opts, stats);
  walker.set_exact_length(length);
  walker.set_edge_filter([&](const std::vector<int>& counts, int depth) {
    const bool final = depth == length;
    for (const auto& a : assignments) {
      bool fits = true;
      for (int i = 0; i < 3 && fits; ++i) {
        for (int e : pairs[i]) {
          fits = fits && (final ? counts[e] == a[i] : counts[e] <= a[i]);
        }
      }
      if (fits) return true;
    }
    return false;
  });

  std::optional<CrossingSequence> hit;
  walker.run([&](const CrossingSequence& cand) {
    auto path = solve_sequence(spec, cand, opts.tol);
    if (!path) return false;
    if (classify_tetra_type(spec, *path) != type) return false;
    hit = cand;
    return true;
  });
  if (!hit) return std::nullopt;
  const Canonicalizer canon(spec);
  return make_class(spec, canon, canon.canonicalize(*hit), opts.tol);
}

// ---------------------------------------------------------------------------

namespace {

CrossingSequence from_labels(const SolidSpec& spec, std::initializer_list<std::pair<int, int>> l) {
  std::vector<std::pair<int, int>> pairs(l);
  return CrossingSequence::from_vertex_pairs(spec, pairs);
}

void require_kind(const SolidSpec& spec, SolidKind kind) {
  if (spec.kind() != kind) throw DomainError("construction is for a different solid");
}

}  // namespace

// Vertex ids: octahedron A1..A6 -> 0..5; cube A1..A4 -> 0..3, A'1..A'4 -> 4..7.

CrossingSequence octa_type1_sequence(const SolidSpec& spec) {
  require_kind(spec, SolidKind::Octahedron);
  // A1A2, A2A5, A5A3, A3A4, A4A6, A6A1
  return from_labels(spec, {{0, 1}, {1, 4}, {4, 2}, {2, 3}, {3, 5}, {5, 0}});
}

CrossingSequence octa_type2_sequence(const SolidSpec& spec) {
  require_kind(spec, SolidKind::Octahedron);
  // Midpoints of the square edges, joined across A2A6, A3A5, A4A6, A1A5.
  return from_labels(spec, {{0, 1}, {1, 5}, {1, 2}, {2, 4}, {2, 3}, {3, 5}, {3, 0}, {0, 4}});
}

CrossingSequence cube_type1_sequence(const SolidSpec& spec) {
  require_kind(spec, SolidKind::Cube);
  return from_labels(spec, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

CrossingSequence cube_type2_sequence(const SolidSpec& spec) {
  require_kind(spec, SolidKind::Cube);
  // A'1A'2, A'2A2, A2A3, A3A4, A4A'4, A'4A'1
  return from_labels(spec, {{4, 5}, {5, 1}, {1, 2}, {2, 3}, {3, 7}, {7, 4}});
}

CrossingSequence cube_type3_sequence(const SolidSpec& spec) {
  require_kind(spec, SolidKind::Cube);
  // A2A3, A2A'2, A1A'1, A'1A'4, A'3A'4, A3A4
  return from_labels(spec, {{1, 2}, {1, 5}, {0, 4}, {4, 7}, {6, 7}, {2, 3}});
}

}  // namespace sphgeo
