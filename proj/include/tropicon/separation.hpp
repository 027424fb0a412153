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

#ifndef TROPICON_SEPARATION_HPP_
#define TROPICON_SEPARATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropicon/projection.hpp"
#include "tropicon/rational.hpp"
#include "tropicon/scalar.hpp"
#include "tropicon/vector.hpp"

namespace tropicon {

// An affine hyperplane {x : <w', x> (+) d' = <w'', x> (+) d''}. Every
// hyperplane this library emits is normalized — w' >= w'' coordinatewise
// and d' >= d'' — which makes the equality predicate equivalent to the
// inequality <w', x> (+) d' <= <w'', x> (+) d''. Hand-built (e.g.
// deserialized) instances may violate the normalization; is_normalized()
// reports it and verification flags it, but membership stays well-defined.
//
// Coefficients live in Kbar: refined certificates keep them in K (finite or
// Bottom, see all_finite()), while universal certificates may carry Top.
class Hyperplane {
 public:
  Hyperplane(Vector w_prime, Scalar d_prime, Vector w_second, Scalar d_second);

  const Vector& w_prime() const { return w_prime_; }
  const Scalar& d_prime() const { return d_prime_; }
  const Vector& w_second() const { return w_second_; }
  const Scalar& d_second() const { return d_second_; }
  SemifieldKind kind() const { return w_prime_.kind(); }
  std::size_t dimension() const { return w_prime_.size(); }

  // w' >= w'' coordinatewise and d' >= d''.
  bool is_normalized() const;
  // No Top anywhere (Bottom entries are fine: they encode missing terms).
  bool all_finite() const;
  // Linear hyperplane: d' = d'' = Bottom.
  bool is_linear() const;

 private:
  Vector w_prime_;
  Scalar d_prime_;
  Vector w_second_;
  Scalar d_second_;
};

// Exact membership test <w', x> (+) d' = <w'', x> (+) d''.
bool contains(const Hyperplane& h, const Vector& x);

enum class CertificateMode : std::uint8_t { Universal, Refined };

// How the certificate was constructed; enough to replay the derivation.
struct SeparationTrace {
  // The emitted hyperplane swaps the textbook side order so that the
  // dominating side is primed.
  bool orientation_swapped = false;
  // Coordinate fast path: the point is supported at this index while no
  // generator is, and the hyperplane is x_i = Bottom.
  std::optional<std::size_t> coordinate_index;
  // Coordinates kept by support reduction (empty when no reduction ran).
  std::vector<std::size_t> restricted_coords;
  // Filler value substituted for the point's Bottom coordinates, when the
  // perturbation search ran, and how many candidates were tested.
  std::optional<Rational> perturbation_m;
  int perturbation_steps = 0;
  // Whether the affine problem was lifted to a linear one by appending a
  // homogenizing coordinate.
  bool homogenized = false;
};

// A separating hyperplane bundled with what it separates: every generator
// (and hence every combination) lies on the hyperplane, the point does not.
struct SeparationCertificate {
  Hyperplane hyperplane;
  std::vector<Vector> generators;
  // true: generators span a module (unconstrained weights); false: they
  // generate a convex set (weights with (+) alpha = one).
  bool family_is_module = false;
  Vector point;
  CertificateMode mode = CertificateMode::Refined;
  SeparationTrace trace;
};

// The one-formula separating hyperplane with coefficients in Kbar,
//   w' = Q_C(y)^-, d' = nu_C(y)^-, w'' = y^-, d'' = one,
// valid for every non-member y but possibly carrying Top coefficients when
// supp y is not full. Throws PointIsMember when y belongs to C.
SeparationCertificate universal_separate(const ConvexSet& set, const Vector& y);

// Linear separating hyperplane <z^-, x> = <P(z)^-, x> for the module
// generated by the basis, with all coefficients in K. z is obtained from y
// by support reduction plus a perturbation search that fills Bottom
// coordinates with a parameter m descending geometrically; the first m with
// y not below P(z(m)) is kept (deterministic) and recorded in the trace.
// Throws PointInModule when y lies in the module, SeparationFailed if the
// descent exceeds its step cap (cannot happen on rational inputs).
SeparationCertificate separate_module(const ModuleBasis& basis, const Vector& y);

// Affine separating hyperplane with all coefficients in K for a finitely
// generated convex set: support reduction, then homogenization (append a
// final coordinate pinned to one), then module separation, then
// dehomogenization (the final coordinates become d'/d'').
// Throws PointIsMember when y belongs to the set.
SeparationCertificate separate_convex(const ConvexSet& set, const Vector& y);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> issues;
};

// Replays a certificate: (a) every generator lies on the hyperplane,
// (b) `samples` random weighted combinations of the generators lie on it
// (convex weights for set certificates, unconstrained for module ones),
// (c) the separated point does not. Sampling is deterministic for a given
// seed; weights are exact rationals with denominators up to 64.
VerifyReport verify_certificate(const SeparationCertificate& cert, int samples,
                                std::uint64_t seed = 0x5eedULL);

}  // namespace tropicon

#endif  // TROPICON_SEPARATION_HPP_
