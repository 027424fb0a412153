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

#include "tropicon/convex_function.hpp"

#include <random>
#include <utility>

#include "tropicon/errors.hpp"
#include "tropicon/separation.hpp"

namespace tropicon {

namespace {

void require_argument(const EpiSet& epi, const Vector& y) {
  if (y.kind() != epi.kind()) {
    throw KindMismatch("argument and epigraph use different semifields");
  }
  if (y.size() != epi.dimension()) {
    throw DimensionMismatch("argument dimension does not match the epigraph");
  }
}

void require_level(const EpiSet& epi, const Scalar& nu) {
  if (nu.kind() != epi.kind()) {
    throw KindMismatch("level and epigraph use different semifields");
  }
  if (nu.is_top()) {
    throw DomainError("epigraph levels must lie in K (Top is not allowed)");
  }
}

Vector append(const Vector& v, const Scalar& last) {
  std::vector<Scalar> entries = v.entries();
  entries.push_back(last);
  return Vector(v.kind(), std::move(entries));
}

// Rescales the four coefficient groups of u0 so the value at y clears nu:
// alpha = (nu (x) inv(eval(u0, y)) (x) 1) (+) 1 gives
// eval(alpha u0, y) = (nu (x) 1) (+) eval(u0, y) > nu. Requires
// eval(u0, y) finite, which holds whenever y is off the hyperplane u0 came
// from.
DiffAffine clear_level(const DiffAffine& u0, const Vector& y, const Scalar& nu) {
  const SemifieldKind kind = u0.kind();
  const Scalar value = eval(u0, y);
  const Scalar margin = Scalar::finite_canonical(Rational(1), kind);
  const Scalar alpha = oplus(otimes(otimes(nu, inv(value)), margin), Scalar::one(kind));
  return scale(u0, alpha);
}

}  // namespace

Scalar hull_eval(const Hull& hull, const Vector& x) {
  if (x.kind() != hull.kind) {
    throw KindMismatch("argument and hull use different semifields");
  }
  if (x.size() != hull.dimension) {
    throw DimensionMismatch("argument dimension does not match the hull");
  }
  Scalar best = Scalar::bottom(hull.kind);
  for (const DiffAffine& piece : hull.pieces) {
    best = oplus(best, eval(piece, x));
  }
  return best;
}

EpiSet::EpiSet(SemifieldKind kind, std::size_t dimension, std::vector<GraphPoint> points)
    : kind_(kind), dimension_(dimension), points_(std::move(points)) {
  for (const GraphPoint& p : points_) {
    if (p.z.kind() != kind_ || p.lambda.kind() != kind_) {
      throw KindMismatch("graph point does not match the epigraph's semifield");
    }
    if (p.z.size() != dimension_) {
      throw DimensionMismatch("graph point dimension does not match the epigraph");
    }
    if (p.z.has_top() || p.lambda.is_top()) {
      throw DomainError("graph points must lie in K^(n+1) (Top is not allowed)");
    }
  }
}

ProjectionResult epi_project(const EpiSet& epi, const Vector& y, const Scalar& nu) {
  require_argument(epi, y);
  require_level(epi, nu);
  const SemifieldKind kind = epi.kind();
  const Scalar unit = Scalar::one(kind);
  Scalar best = Scalar::bottom(kind);
  Vector q = Vector::bottoms(kind, epi.dimension());
  bool ray_reaches_y = false;
  for (const GraphPoint& p : epi.points()) {
    const Scalar base = vlres(p.z, y);
    const Scalar weight = meet(meet(base, lres(p.lambda, nu)), unit);
    best = oplus(best, weight);
    q = voplus(q, scale(p.z, weight));
    if (!base.is_bottom()) {
      ray_reaches_y = true;
    }
  }
  // Along the ray above a graph point whose base weight is not Bottom the
  // value-coordinate contribution climbs to exactly nu; with no such ray
  // the value coordinate stays Bottom.
  const Scalar q_value = ray_reaches_y ? nu : Scalar::bottom(kind);
  return ProjectionResult{append(q, q_value), best};
}

bool epi_member(const EpiSet& epi, const Vector& y, const Scalar& nu) {
  const ProjectionResult pr = epi_project(epi, y, nu);
  return pr.nu == Scalar::one(epi.kind()) && pr.q == append(y, nu);
}

Scalar epi_function_value(const EpiSet& epi, const Vector& y) {
  require_argument(epi, y);
  const SemifieldKind kind = epi.kind();
  const Scalar unit = Scalar::one(kind);

  // Weights are capped at min(vlres(z_j, y), 1); reaching y needs one
  // weight equal to 1 and, per supported coordinate i, one graph point
  // lifted to touch y_i exactly. Each requirement is priced independently
  // (costs only push the bottleneck maximum up), and a graph point's
  // forced weight is vlres(z_j, y) no matter which coordinate it covers,
  // so the per-requirement minima combine into a feasible weight vector.
  std::vector<Scalar> base;
  base.reserve(epi.points().size());
  Scalar normalizer = Scalar::top(kind);
  bool normalizable = false;
  for (const GraphPoint& p : epi.points()) {
    base.push_back(vlres(p.z, y));
    if (unit <= base.back()) {
      normalizer = meet(normalizer, p.lambda);
      normalizable = true;
    }
  }
  if (!normalizable) {
    return Scalar::top(kind);
  }
  Scalar value = normalizer;
  for (std::size_t i : support(y)) {
    Scalar cheapest = Scalar::top(kind);
    bool covered = false;
    for (std::size_t j = 0; j < epi.points().size(); ++j) {
      const GraphPoint& p = epi.points()[j];
      if (p.z[i].is_bottom()) {
        continue;
      }
      const Scalar lift = lres(p.z[i], y[i]);
      if (lift <= meet(base[j], unit)) {
        cheapest = meet(cheapest, otimes(p.lambda, lift));
        covered = true;
      }
    }
    if (!covered) {
      return Scalar::top(kind);
    }
    value = oplus(value, cheapest);
  }
  return value;
}

DiffAffine supporting_function(const EpiSet& epi, const Vector& y, const Scalar& nu) {
  require_argument(epi, y);
  require_level(epi, nu);
  if (y.has_top()) {
    throw DomainError("supporting-function arguments must lie in K^n");
  }
  const SemifieldKind kind = epi.kind();
  const std::size_t n = epi.dimension();
  const Scalar one = Scalar::one(kind);
  const Scalar bottom = Scalar::bottom(kind);

  if (epi.points().empty()) {
    // f is identically Top: any constant above nu supports it.
    const Scalar margin = Scalar::finite_canonical(Rational(1), kind);
    const Scalar level = oplus(otimes(nu, margin), one);
    return DiffAffine(Vector::bottoms(kind, n), level, Vector::bottoms(kind, n), bottom);
  }
  if (epi_member(epi, y, nu)) {
    throw PointOnEpigraph("the probe lies on the epigraph; no affine function separates it");
  }

  // Fast path: y is supported at a coordinate where every graph point is
  // Bottom. The coordinate function x_i is Bottom on all of them, hence
  // below f, and finite at y; rescaling clears nu.
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i].is_bottom()) {
      continue;
    }
    bool family_bottom = true;
    for (const GraphPoint& p : epi.points()) {
      if (!p.z[i].is_bottom()) {
        family_bottom = false;
        break;
      }
    }
    if (family_bottom) {
      const DiffAffine u0(Vector::unit(kind, n, i), bottom, Vector::bottoms(kind, n), bottom);
      return clear_level(u0, y, nu);
    }
  }

  // Main path: separate the lifted point (y, nu, 1) from the module
  // spanned by the lifted graph points (z_j, lambda_j, 1) and the
  // value-direction unit, which generates the upward rays.
  std::vector<Vector> lifted;
  lifted.reserve(epi.points().size() + 1);
  for (const GraphPoint& p : epi.points()) {
    lifted.push_back(append(append(p.z, p.lambda), one));
  }
  lifted.push_back(Vector::unit(kind, n + 2, n));
  const ModuleBasis basis(kind, n + 2, std::move(lifted));
  const SeparationCertificate inner = separate_module(basis, append(append(y, nu), one));

  const Vector& wp = inner.hyperplane.w_prime();
  const Vector& ws = inner.hyperplane.w_second();
  const Scalar mu_prime = wp[n];
  const Scalar mu_second = ws[n];
  if (mu_prime != mu_second) {
    throw MuMismatch("value-coordinate coefficients of the lifted hyperplane disagree");
  }
  std::vector<Scalar> wp_space(wp.entries().begin(), wp.entries().begin() + n);
  std::vector<Scalar> ws_space(ws.entries().begin(), ws.entries().begin() + n);
  const DiffAffine u0(Vector(kind, std::move(wp_space)), wp[n + 1],
                      Vector(kind, std::move(ws_space)), ws[n + 1]);
  if (!mu_prime.is_bottom()) {
    // Normalize the value coefficient to 1; on graph points both affine
    // forms then tie against lambda_j, forcing eval(u, z_j) <= lambda_j,
    // while at y the primed form strictly dominates nu.
    return scale(u0, inv(mu_prime));
  }
  return clear_level(u0, y, nu);
}

Hull hull_from_supports(const EpiSet& epi, const std::vector<FunctionSample>& probes) {
  Hull hull{epi.kind(), epi.dimension(), {}};
  hull.pieces.reserve(probes.size());
  for (const FunctionSample& probe : probes) {
    hull.pieces.push_back(supporting_function(epi, probe.x, probe.value));
  }
  return hull;
}

std::vector<FunctionSample> make_probes(const EpiSet& epi, const std::vector<Vector>& points,
                                        const Rational& delta) {
  const Scalar drop = Scalar::finite_canonical(-delta, epi.kind());
  std::vector<FunctionSample> probes;
  probes.reserve(points.size());
  for (const Vector& y : points) {
    const Scalar value = epi_function_value(epi, y);
    if (value.is_top()) {
      continue;  // outside the effective domain; any level probes f there
    }
    probes.push_back(FunctionSample{y, otimes(value, drop)});
  }
  return probes;
}

ConvexityReport convexity_check(const std::vector<FunctionSample>& samples, int trials,
                                std::uint64_t seed) {
  ConvexityReport report;
  if (samples.empty()) {
    return report;
  }
  const SemifieldKind kind = samples.front().x.kind();
  const Scalar one = Scalar::one(kind);

  const auto run_trial = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (report.witness) {
      return;
    }
    // alpha = 1 pinned; beta the largest weight keeping x_j beta <= x_k.
    const Scalar beta = meet(vlres(samples[j].x, samples[k].x), one);
    Vector combo = samples[i].x;
    if (!beta.is_bottom()) {
      combo = voplus(combo, scale(samples[j].x, beta));
    }
    if (!(combo == samples[k].x)) {
      return;  // the drawn triple does not hit a sampled argument
    }
    const Scalar rhs = oplus(samples[i].value, otimes(samples[j].value, beta));
    if (!(samples[k].value <= rhs)) {
      report.convex = false;
      report.witness = ConvexityWitness{i, j, k, one, beta, samples[k].value, rhs};
    }
  };

  const std::size_t count = samples.size();
  const std::size_t triples = count * count * count;
  if (trials > 0 && triples <= static_cast<std::size_t>(trials)) {
    for (std::size_t i = 0; i < count && !report.witness; ++i) {
      for (std::size_t j = 0; j < count && !report.witness; ++j) {
        for (std::size_t k = 0; k < count && !report.witness; ++k) {
          run_trial(i, j, k);
        }
      }
    }
    return report;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  for (int t = 0; t < trials && !report.witness; ++t) {
    run_trial(pick(rng), pick(rng), pick(rng));
  }
  return report;
}

}  // namespace tropicon
