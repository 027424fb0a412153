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

#ifndef TROPICON_CONVEX_FUNCTION_HPP_
#define TROPICON_CONVEX_FUNCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropicon/diff_affine.hpp"
#include "tropicon/projection.hpp"
#include "tropicon/scalar.hpp"
#include "tropicon/vector.hpp"

namespace tropicon {

// One sampled point of a function: the argument and the value f(x). Also
// used for supporting-function probes, where `value` is a level strictly
// below f(x).
struct FunctionSample {
  Vector x;
  Scalar value;
};

// A convex function presented as the upper hull of finitely many
// differences of affine functions: f(x) = sup over pieces of eval(u, x).
struct Hull {
  SemifieldKind kind;
  std::size_t dimension;
  std::vector<DiffAffine> pieces;
};

// Pointwise supremum of the pieces; Bottom for an empty hull.
Scalar hull_eval(const Hull& hull, const Vector& x);

// One marked point (z_j, lambda_j) on the graph of a function. lambda_j
// lies in K.
struct GraphPoint {
  Vector z;
  Scalar lambda;
};

// The epigraph of the convex function spanned by finitely many graph
// points: all points (x, mu) with x a convex combination of the z_j and mu
// at least the matching combination of the lambda_j. The upward value rays
// make this convex set infinitely generated, so it gets its own type
// rather than a generator-list ConvexSet.
class EpiSet {
 public:
  EpiSet(SemifieldKind kind, std::size_t dimension, std::vector<GraphPoint> points);

  SemifieldKind kind() const { return kind_; }
  // Dimension n of the argument space; epigraph points live in n + 1
  // coordinates (the value coordinate comes last).
  std::size_t dimension() const { return dimension_; }
  const std::vector<GraphPoint>& points() const { return points_; }

 private:
  SemifieldKind kind_;
  std::size_t dimension_;
  std::vector<GraphPoint> points_;
};

// Best approximation of the point (y, nu) from inside the epigraph. The
// returned q has dimension n + 1. Computed in closed form over the graph
// points: the optimum along each upward ray sits at its base, so
//   s_j  = min(vlres(z_j, y), lres(lambda_j, nu)) /\ 1,
//   nu*  = (+) over j of s_j,
//   q    = ((+) over j of z_j s_j, nu if some vlres(z_j, y) is not Bottom,
//          Bottom otherwise).
ProjectionResult epi_project(const EpiSet& epi, const Vector& y, const Scalar& nu);

// (y, nu) lies on the epigraph, i.e. f(y) <= nu. Equivalent to the
// projection fixing the point with multiplier 1.
bool epi_member(const EpiSet& epi, const Vector& y, const Scalar& nu);

// The function value f(y) = min {nu : (y, nu) on the epigraph}, in
// completed K: Top outside the effective domain (y not reachable by any
// convex combination of the z_j), otherwise the exact bottleneck cost of
// covering y and the weight-normalization requirement by graph points.
Scalar epi_function_value(const EpiSet& epi, const Vector& y);

// A difference of affine functions u with u <= f everywhere and
// eval(u, y) > nu. Preconditions: y in K^n, nu in K, and (y, nu) off the
// epigraph (otherwise PointOnEpigraph). Obtained by separating the lifted
// point (y, nu, 1) from the module spanned by the lifted graph points
// (z_j, lambda_j, 1) and the value-direction unit vector, which makes the
// upward rays finitely generated. The two value-coordinate coefficients of
// the separating hyperplane always agree (MuMismatch guards the
// invariant); when they are finite the hyperplane is normalized by their
// inverse and the value coordinate dropped, and when they are Bottom (y
// supported outside every z_j) the coordinate form is rescaled by
//   alpha = (nu (x) inv(eval(u0, y)) (x) 1) (+) 1
// so that the value at y clears nu with a margin of 1.
DiffAffine supporting_function(const EpiSet& epi, const Vector& y, const Scalar& nu);

// Upper hull of one supporting function per probe (y, nu); every probe
// must satisfy nu < f(y).
Hull hull_from_supports(const EpiSet& epi, const std::vector<FunctionSample>& probes);

// Probes (y, f(y) - delta) for the given arguments; arguments outside the
// effective domain (f(y) = Top) are skipped. delta defaults to 1.
std::vector<FunctionSample> make_probes(const EpiSet& epi, const std::vector<Vector>& points,
                                        const Rational& delta = Rational(1));

// A triple witnessing failure of midpoint convexity:
//   f(x_i alpha (+) x_j beta) > f(x_i) alpha (+) f(x_j) beta
// with alpha (+) beta = 1 and the combination equal to the sampled x_k.
struct ConvexityWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar alpha;
  Scalar beta;
  Scalar lhs;  // f(x_k)
  Scalar rhs;  // f(x_i) alpha (+) f(x_j) beta
};

struct ConvexityReport {
  bool convex = true;
  std::optional<ConvexityWitness> witness;
};

// Sampling check of the convexity inequality over the given graph samples:
// each trial picks (i, j, k), pins alpha = 1 and takes the largest beta
// with x_j beta <= x_k, and tests the inequality whenever the combination
// reproduces x_k exactly. When the number of triples is at most `trials`
// the scan is exhaustive over all of them; otherwise `trials` random
// triples are drawn from the seed. A sampling check, not a decision
// procedure: `convex == true` means no violation was found.
ConvexityReport convexity_check(const std::vector<FunctionSample>& samples, int trials,
                                std::uint64_t seed = 0x5eedULL);

}  // namespace tropicon

#endif  // TROPICON_CONVEX_FUNCTION_HPP_
