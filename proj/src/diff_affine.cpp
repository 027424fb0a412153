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

#include "tropicon/diff_affine.hpp"

#include <utility>

#include "tropicon/errors.hpp"

namespace tropicon {

namespace {

void require_ground(const Scalar& s, const char* what) {
  if (s.is_top()) {
    throw DomainError(std::string(what) + " must lie in K (Top is not allowed)");
  }
}

void require_ground(const Vector& v, const char* what) {
  if (v.has_top()) {
    throw DomainError(std::string(what) + " must lie in K^n (Top entries are not allowed)");
  }
}

}  // namespace

DiffAffine::DiffAffine(Vector w_prime, Scalar d_prime, Vector w_second, Scalar d_second)
    : w_prime_(std::move(w_prime)),
      d_prime_(std::move(d_prime)),
      w_second_(std::move(w_second)),
      d_second_(std::move(d_second)) {
  if (w_prime_.kind() != w_second_.kind() || w_prime_.kind() != d_prime_.kind() ||
      w_prime_.kind() != d_second_.kind()) {
    throw KindMismatch("difference of affine functions mixes semifields");
  }
  if (w_prime_.size() != w_second_.size()) {
    throw DimensionMismatch("affine coefficient vectors have different lengths");
  }
  require_ground(w_prime_, "affine coefficient vector");
  require_ground(w_second_, "affine coefficient vector");
  require_ground(d_prime_, "affine offset");
  require_ground(d_second_, "affine offset");
}

Scalar eval(const DiffAffine& u, const Vector& x) {
  const Scalar primed = oplus(vdot(u.w_prime(), x), u.d_prime());
  const Scalar second = oplus(vdot(u.w_second(), x), u.d_second());
  return ominus(primed, second);
}

DiffAffine as_diff_affine(const Hyperplane& h) {
  return DiffAffine(h.w_prime(), h.d_prime(), h.w_second(), h.d_second());
}

DiffAffine scale(const DiffAffine& u, const Scalar& alpha) {
  return DiffAffine(scale(u.w_prime(), alpha), otimes(u.d_prime(), alpha),
                    scale(u.w_second(), alpha), otimes(u.d_second(), alpha));
}

Scalar Shape1D::value_at(const Scalar& x) const {
  const SemifieldKind kind = slope.kind();
  switch (shape) {
    case Case::IdenticallyBottom:
      return Scalar::bottom(kind);
    case Case::RayRight:
      if (threshold < x) {
        return otimes(slope, x);
      }
      return Scalar::bottom(kind);
    case Case::Plateau:
      if (x < threshold) {
        return height;
      }
      return Scalar::bottom(kind);
    case Case::Affine:
      return oplus(otimes(slope, x), height);
  }
  throw Error("unreachable 1-D shape");
}

Shape1D classify_1d(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  if (a.kind() != b.kind() || a.kind() != c.kind() || a.kind() != d.kind()) {
    throw KindMismatch("1-D classification mixes semifields");
  }
  require_ground(a, "1-D coefficient");
  require_ground(b, "1-D coefficient");
  require_ground(c, "1-D coefficient");
  require_ground(d, "1-D coefficient");

  const SemifieldKind kind = a.kind();
  Shape1D shape{Shape1D::Case::IdenticallyBottom, Scalar::bottom(kind), Scalar::bottom(kind),
                Scalar::bottom(kind)};
  const bool slope_dominates = c < a;
  const bool offset_dominates = d < b;
  if (slope_dominates && offset_dominates) {
    shape.shape = Shape1D::Case::Affine;
    shape.slope = a;
    shape.height = b;
  } else if (slope_dominates) {
    // The line a x overtakes the ceiling d at lres(a, d) = d - a; below and
    // at the threshold both affine forms tie, so the difference is Bottom.
    shape.shape = Shape1D::Case::RayRight;
    shape.slope = a;
    shape.threshold = lres(a, d);
  } else if (offset_dominates) {
    // The floor b survives until the line c x reaches it at
    // lres(c, b) = b - c (Top when c = Bottom: the plateau never ends).
    shape.shape = Shape1D::Case::Plateau;
    shape.height = b;
    shape.threshold = lres(c, b);
  }
  return shape;
}

Hyperplane level_hyperplane(const DiffAffine& u, const Scalar& t) {
  if (t.kind() != u.kind()) {
    throw KindMismatch("level threshold and function use different semifields");
  }
  require_ground(t, "level threshold");
  // eval(u, x) <= t  iff  <w', x> (+) d' <= <w'', x> (+) d'' (+) t, and an
  // inequality A <= B is the hyperplane A (+) B = B.
  const Scalar d_second = oplus(u.d_second(), t);
  return Hyperplane(voplus(u.w_prime(), u.w_second()), oplus(u.d_prime(), d_second),
                    u.w_second(), d_second);
}

}  // namespace tropicon
