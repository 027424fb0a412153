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

#ifndef TROPICON_DIFF_AFFINE_HPP_
#define TROPICON_DIFF_AFFINE_HPP_

#include <cstdint>

#include "tropicon/scalar.hpp"
#include "tropicon/separation.hpp"
#include "tropicon/vector.hpp"

namespace tropicon {

// A difference of affine functions
//   u(x) = (<w', x> (+) d') (-) (<w'', x> (+) d''),
// total on K^n with values in K. These are the building blocks whose upper
// hulls realize exactly the convex lower semi-continuous functions.
// Coefficients are restricted to K (no Top), which keeps evaluation
// K-valued.
class DiffAffine {
 public:
  DiffAffine(Vector w_prime, Scalar d_prime, Vector w_second, Scalar d_second);

  const Vector& w_prime() const { return w_prime_; }
  const Scalar& d_prime() const { return d_prime_; }
  const Vector& w_second() const { return w_second_; }
  const Scalar& d_second() const { return d_second_; }
  SemifieldKind kind() const { return w_prime_.kind(); }
  std::size_t dimension() const { return w_prime_.size(); }

 private:
  Vector w_prime_;
  Scalar d_prime_;
  Vector w_second_;
  Scalar d_second_;
};

// Exact evaluation via the difference adjoint (-): the primed form when it
// strictly dominates the double-primed one, Bottom otherwise.
Scalar eval(const DiffAffine& u, const Vector& x);

// The coefficient groups of an all-finite hyperplane read as a difference
// of affine functions. For a separating hyperplane this function vanishes
// (evaluates to Bottom) on the contained set and is non-Bottom at the
// separated point. Throws DomainError when the hyperplane carries Top.
DiffAffine as_diff_affine(const Hyperplane& h);

// u (x) alpha on both of its affine forms: (alpha A) (-) (alpha B), which
// equals alpha (x) u for finite alpha.
DiffAffine scale(const DiffAffine& u, const Scalar& alpha);

// The four generic shapes of a one-dimensional difference of affine
// functions u(x) = (a x (+) b) (-) (c x (+) d), determined by the sign
// pattern of a vs c and b vs d. Thresholds follow exact (-) evaluation: at
// the boundary both forms tie and the value is Bottom.
struct Shape1D {
  enum class Case : std::uint8_t {
    // a <= c, b <= d: the primed form never dominates.
    IdenticallyBottom,
    // a > c, b <= d: Bottom up to lres(a, d) = d - a, then the line a x.
    RayRight,
    // a <= c, b > d: the constant b strictly below lres(c, b) = b - c,
    // Bottom from the threshold on (threshold Top when c = Bottom).
    Plateau,
    // a > c, b > d: the affine function a x (+) b everywhere.
    Affine,
  };

  Case shape;
  Scalar slope;      // a (RayRight, Affine)
  Scalar height;     // b (Plateau, Affine)
  Scalar threshold;  // boundary point (RayRight, Plateau)

  // Piecewise value; agrees with eval of the defining DiffAffine for every
  // x in K u {Bottom} (the table's domain).
  Scalar value_at(const Scalar& x) const;
};

// Sign-pattern classification of the 1-D difference (a x (+) b) (-)
// (c x (+) d). Inputs must lie in K (finite or Bottom).
Shape1D classify_1d(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

// The lower level set {x : eval(u, x) <= t} as a normalized affine
// hyperplane: eval(u, x) <= t  iff  <w', x> (+) d' <= <w'', x> (+) d'' (+) t
// by the difference adjunction, folded into the two-sided equality form.
Hyperplane level_hyperplane(const DiffAffine& u, const Scalar& t);

}  // namespace tropicon

#endif  // TROPICON_DIFF_AFFINE_HPP_
