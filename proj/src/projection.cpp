// Copyright 2026 The Tropicon Authors
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

#include "tropicon/projection.hpp"

#include <string>
#include <utility>

#include "tropicon/errors.hpp"

namespace tropicon {

namespace {

void validate_family(SemifieldKind kind, std::size_t dimension,
                     const std::vector<Vector>& generators, const char* what) {
  if (generators.empty()) {
    throw DimensionMismatch(std::string(what) + " needs at least one generator");
  }
  for (const Vector& g : generators) {
    if (g.kind() != kind) {
      throw KindMismatch(std::string(what) + " generator kind mismatch");
    }
    if (g.size() != dimension) {
      throw DimensionMismatch(std::string(what) + " generator has size " +
                              std::to_string(g.size()) + ", expected " +
                              std::to_string(dimension));
    }
    if (g.has_top()) {
      throw DomainError(std::string(what) +
                        " generators must lie in the ground space (no Top entries)");
    }
  }
}

void require_point(const SemifieldKind kind, std::size_t dimension, const Vector& x) {
  if (x.kind() != kind) throw KindMismatch("point kind does not match family kind");
  if (x.size() != dimension) {
    throw DimensionMismatch("point has size " + std::to_string(x.size()) +
                            ", expected " + std::to_string(dimension));
  }
}

}  // namespace

ModuleBasis::ModuleBasis(SemifieldKind kind, std::size_t dimension,
                         std::vector<Vector> generators)
    : kind_(kind), dimension_(dimension), generators_(std::move(generators)) {
  validate_family(kind_, dimension_, generators_, "module basis");
}

ConvexSet::ConvexSet(SemifieldKind kind, std::size_t dimension,
                     std::vector<Vector> generators)
    : kind_(kind), dimension_(dimension), generators_(std::move(generators)) {
  validate_family(kind_, dimension_, generators_, "convex set");
}

SupportSet family_support(const std::vector<Vector>& generators) {
  if (generators.empty()) return {};
  std::vector<bool> seen(generators[0].size(), false);
  for (const Vector& g : generators) {
    for (std::size_t i : support(g)) seen[i] = true;
  }
  SupportSet out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

Vector project_module(const ModuleBasis& basis, const Vector& x) {
  require_point(basis.kind(), basis.dimension(), x);
  Vector acc = Vector::bottoms(basis.kind(), basis.dimension());
  for (const Vector& w : basis.generators()) {
    acc = voplus(acc, scale(w, vlres(w, x)));
  }
  return acc;
}

ProjectionResult project_convex(const ConvexSet& set, const Vector& y) {
  require_point(set.kind(), set.dimension(), y);
  const Scalar unit = Scalar::one(set.kind());
  Scalar nu = Scalar::bottom(set.kind());
  Vector q = Vector::bottoms(set.kind(), set.dimension());
  for (const Vector& g : set.generators()) {
    const Scalar weight = meet(vlres(g, y), unit);
    nu = oplus(nu, weight);
    q = voplus(q, scale(g, weight));
  }
  return ProjectionResult{std::move(q), std::move(nu)};
}

bool in_down(const ConvexSet& set, const Vector& z) {
  return project_convex(set, z).q == z;
}

bool in_up(const ConvexSet& set, const Vector& z) {
  return project_convex(set, z).nu == Scalar::one(set.kind());
}

bool member(const ConvexSet& set, const Vector& y) {
  const ProjectionResult pr = project_convex(set, y);
  return pr.q == y && pr.nu == Scalar::one(set.kind());
}

Vector proj_point(const ConvexSet& set, const Vector& y) {
  const ProjectionResult pr = project_convex(set, y);
  if (pr.nu.is_bottom()) {
    throw ProjectionUndefined("projection onto the set is undefined: nu = Bottom "
                              "(the point shares no support with the set)");
  }
  return scale(pr.q, inv(pr.nu));
}

}  // namespace tropicon
