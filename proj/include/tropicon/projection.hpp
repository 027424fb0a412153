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

#ifndef TROPICON_PROJECTION_HPP_
#define TROPICON_PROJECTION_HPP_

#include <cstddef>
#include <vector>

#include "tropicon/scalar.hpp"
#include "tropicon/vector.hpp"

namespace tropicon {

// A finitely generated subsemimodule of K^n, given by a nonempty list of
// generators in K^n: the set of all vcomb(generators, alpha) with
// unconstrained weights alpha in K.
class ModuleBasis {
 public:
  ModuleBasis(SemifieldKind kind, std::size_t dimension, std::vector<Vector> generators);

  SemifieldKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<Vector>& generators() const { return generators_; }

 private:
  SemifieldKind kind_;
  std::size_t dimension_;
  std::vector<Vector> generators_;
};

// A finitely generated convex subset of K^n: all vcomb(generators, alpha)
// whose weights additionally satisfy (+) over l of alpha_l = one. Finitely
// generated convex sets are automatically complete, so the projection
// formulas below attain their suprema on the generators.
class ConvexSet {
 public:
  ConvexSet(SemifieldKind kind, std::size_t dimension, std::vector<Vector> generators);

  SemifieldKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<Vector>& generators() const { return generators_; }

  ModuleBasis as_module() const { return ModuleBasis(kind_, dimension_, generators_); }

 private:
  SemifieldKind kind_;
  std::size_t dimension_;
  std::vector<Vector> generators_;
};

// The pair (Q_C(y), nu_C(y)): the best down-approximation of y inside
// Down(C) together with the largest scale at which C reaches up to y.
struct ProjectionResult {
  Vector q;
  Scalar nu;
};

// Union of the generators' supports.
SupportSet family_support(const std::vector<Vector>& generators);

// P_V(x) = (+)_{w in W} w (x) vlres(w, x): the largest element of the
// generated module below x. Idempotent and contracting (P(x) <= x).
Vector project_module(const ModuleBasis& basis, const Vector& x);

// nu = (+)_g (vlres(g, y) /\ one), q = (+)_g g (x) (vlres(g, y) /\ one).
// The supremum over all of C is attained on generators because convex
// weights satisfy alpha <= one.
ProjectionResult project_convex(const ConvexSet& set, const Vector& y);

// z belongs to the shadow Down(C) = {c (x) alpha : c in C, alpha <= one}
// (combinations with weights <= one, NOT the order ideal {z : z <= v}),
// equivalently z is its own down-projection.
bool in_down(const ConvexSet& set, const Vector& z);

// z belongs to the upper set Up(C) = {z : z >= v for some v in C},
// equivalently nu_C(z) = one (valid for finitely generated C).
bool in_up(const ConvexSet& set, const Vector& z);

// y in C  iff  project_convex returns q = y and nu = one.
bool member(const ConvexSet& set, const Vector& y);

// q (x) inv(nu), the projection of y onto C itself; always a member of C.
// Throws ProjectionUndefined when nu = Bottom (y shares no support with C).
Vector proj_point(const ConvexSet& set, const Vector& y);

}  // namespace tropicon

#endif  // TROPICON_PROJECTION_HPP_
