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

#include "tropicon/separation.hpp"

#include <random>
#include <utility>

#include "tropicon/errors.hpp"

namespace tropicon {

namespace {

// Keep only the listed coordinates, in order.
Vector restrict_to(const Vector& v, const std::vector<std::size_t>& coords) {
  std::vector<Scalar> entries;
  entries.reserve(coords.size());
  for (std::size_t i : coords) entries.push_back(v[i]);
  return Vector(v.kind(), std::move(entries));
}

// Scatter a reduced vector back into dimension n, Bottom elsewhere. A
// Bottom coefficient encodes an absent term, so padding never changes the
// value of either affine form on vectors supported inside `coords`.
Vector pad_to(const Vector& v, const std::vector<std::size_t>& coords, std::size_t n) {
  Vector out = Vector::bottoms(v.kind(), n);
  for (std::size_t j = 0; j < coords.size(); ++j) out.set(coords[j], v[j]);
  return out;
}

Vector append_one(const Vector& v) {
  std::vector<Scalar> entries = v.entries();
  entries.push_back(Scalar::one(v.kind()));
  return Vector(v.kind(), std::move(entries));
}

Vector drop_last(const Vector& v) {
  std::vector<Scalar> entries = v.entries();
  entries.pop_back();
  return Vector(v.kind(), std::move(entries));
}

// Smallest index where the point is supported but the family is not, if any.
std::optional<std::size_t> unsupported_coordinate(const std::vector<Vector>& generators,
                                                  const Vector& y) {
  std::vector<bool> fam(y.size(), false);
  for (std::size_t i : family_support(generators)) fam[i] = true;
  for (std::size_t i : support(y)) {
    if (!fam[i]) return i;
  }
  return std::nullopt;
}

// The hyperplane x_i = Bottom, which contains every vector unsupported at i
// and excludes every vector supported there.
Hyperplane coordinate_hyperplane(SemifieldKind kind, std::size_t n, std::size_t i) {
  return Hyperplane(Vector::unit(kind, n, i), Scalar::bottom(kind),
                    Vector::bottoms(kind, n), Scalar::bottom(kind));
}

// Least finite value appearing in the point or the generators. Only called
// when at least one finite entry exists.
Rational least_finite_entry(const std::vector<Vector>& generators, const Vector& y) {
  bool seen = false;
  Rational best = 0;
  auto scan = [&](const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_finite() && (!seen || v[i].canonical() < best)) {
        seen = true;
        best = v[i].canonical();
      }
    }
  };
  scan(y);
  for (const Vector& g : generators) scan(g);
  return best;
}

// Copy of y with every Bottom coordinate replaced by the finite filler m.
Vector fill_bottoms(const Vector& y, const Rational& m) {
  Vector out = y;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_bottom()) out.set(i, Scalar::finite_canonical(m, y.kind()));
  }
  return out;
}

}  // namespace

Hyperplane::Hyperplane(Vector w_prime, Scalar d_prime, Vector w_second, Scalar d_second)
    : w_prime_(std::move(w_prime)),
      d_prime_(std::move(d_prime)),
      w_second_(std::move(w_second)),
      d_second_(std::move(d_second)) {
  if (w_prime_.kind() != w_second_.kind() || d_prime_.kind() != w_prime_.kind() ||
      d_second_.kind() != w_prime_.kind()) {
    throw KindMismatch("hyperplane coefficient kinds differ");
  }
  if (w_prime_.size() != w_second_.size()) {
    throw DimensionMismatch("hyperplane sides have different dimensions");
  }
}

bool Hyperplane::is_normalized() const {
  return vleq(w_second_, w_prime_) && d_second_ <= d_prime_;
}

bool Hyperplane::all_finite() const {
  return !w_prime_.has_top() && !w_second_.has_top() && !d_prime_.is_top() &&
         !d_second_.is_top();
}

bool Hyperplane::is_linear() const {
  return d_prime_.is_bottom() && d_second_.is_bottom();
}

bool contains(const Hyperplane& h, const Vector& x) {
  return oplus(vdot(h.w_prime(), x), h.d_prime()) ==
         oplus(vdot(h.w_second(), x), h.d_second());
}

SeparationCertificate universal_separate(const ConvexSet& set, const Vector& y) {
  if (member(set, y)) {
    throw PointIsMember("cannot separate: the point belongs to the convex set");
  }
  const ProjectionResult pr = project_convex(set, y);
  // The dual of the projection dominates the dual of the point (Q <= y and
  // nu <= one), so that side is stored primed.
  SeparationTrace trace;
  trace.orientation_swapped = true;
  Hyperplane h(vdual(pr.q), dual(pr.nu), vdual(y), Scalar::one(set.kind()));
  return SeparationCertificate{std::move(h), set.generators(), false, y,
                               CertificateMode::Universal, std::move(trace)};
}

SeparationCertificate separate_module(const ModuleBasis& basis, const Vector& y) {
  if (y.kind() != basis.kind()) throw KindMismatch("point kind does not match basis");
  if (y.size() != basis.dimension()) {
    throw DimensionMismatch("point dimension does not match basis");
  }
  if (project_module(basis, y) == y) {
    throw PointInModule("cannot separate: the point belongs to the module");
  }
  const SemifieldKind kind = basis.kind();
  const std::size_t n = basis.dimension();
  SeparationTrace trace;

  // A coordinate where y is supported but no generator is separates by
  // itself: the module satisfies x_i = Bottom, y does not.
  if (auto i = unsupported_coordinate(basis.generators(), y)) {
    trace.coordinate_index = *i;
    return SeparationCertificate{coordinate_hyperplane(kind, n, *i),
                                 basis.generators(), true, y,
                                 CertificateMode::Refined, std::move(trace)};
  }

  // Restrict to the family support so that every kept coordinate carries a
  // finite generator entry; this is what keeps all duals below out of Top.
  const SupportSet coords = family_support(basis.generators());
  const bool reduced = coords.size() < n;
  std::vector<Vector> gens_r;
  gens_r.reserve(basis.generators().size());
  for (const Vector& g : basis.generators()) gens_r.push_back(restrict_to(g, coords));
  const Vector y_r = restrict_to(y, coords);
  const ModuleBasis basis_r(kind, coords.size(), gens_r);
  if (reduced) trace.restricted_coords = coords;

  // Perturbation: fill the Bottom coordinates of y with a parameter m and
  // lower m geometrically until the filled point escapes the projection.
  // The projection values are piecewise linear in m and reach their limit
  // P(y) at a finite threshold, so the descent terminates; the cap is a
  // defensive bound only.
  Vector z = y_r;
  if (!support(y_r).empty() && support(y_r).size() < y_r.size()) {
    const Rational m0 = least_finite_entry(gens_r, y_r) - 1;
    Rational m = m0;
    BigInt stride = 1;
    bool found = false;
    for (int step = 1; step <= 64; ++step) {
      z = fill_bottoms(y_r, m);
      trace.perturbation_steps = step;
      if (!vleq(y_r, project_module(basis_r, z))) {
        trace.perturbation_m = m;
        found = true;
        break;
      }
      m -= Rational(stride);
      stride *= 2;
    }
    if (!found) {
      throw SeparationFailed("perturbation search exhausted its step cap");
    }
  }
  // With full support, z = y works directly: y is not below P(y).

  const Vector p = project_module(basis_r, z);
  trace.orientation_swapped = true;  // dominating side P(z)^- stored primed
  Vector wp = vdual(p);
  Vector ws = vdual(z);
  if (reduced) {
    wp = pad_to(wp, coords, n);
    ws = pad_to(ws, coords, n);
  }
  Hyperplane h(std::move(wp), Scalar::bottom(kind), std::move(ws), Scalar::bottom(kind));
  return SeparationCertificate{std::move(h), basis.generators(), true, y,
                               CertificateMode::Refined, std::move(trace)};
}

SeparationCertificate separate_convex(const ConvexSet& set, const Vector& y) {
  if (member(set, y)) {
    throw PointIsMember("cannot separate: the point belongs to the convex set");
  }
  const SemifieldKind kind = set.kind();
  const std::size_t n = set.dimension();
  SeparationTrace trace;

  if (auto i = unsupported_coordinate(set.generators(), y)) {
    trace.coordinate_index = *i;
    return SeparationCertificate{coordinate_hyperplane(kind, n, *i),
                                 set.generators(), false, y,
                                 CertificateMode::Refined, std::move(trace)};
  }

  const SupportSet coords = family_support(set.generators());
  const bool reduced = coords.size() < n;
  if (reduced) trace.restricted_coords = coords;

  // Homogenize: pin a final coordinate to one on each generator and on the
  // point, so convex combinations become module combinations.
  std::vector<Vector> lifted;
  lifted.reserve(set.generators().size());
  for (const Vector& g : set.generators()) {
    lifted.push_back(append_one(restrict_to(g, coords)));
  }
  const Vector y_lifted = append_one(restrict_to(y, coords));
  const ModuleBasis lifted_basis(kind, coords.size() + 1, lifted);

  const SeparationCertificate inner = separate_module(lifted_basis, y_lifted);
  trace.homogenized = true;
  trace.orientation_swapped = inner.trace.orientation_swapped;
  trace.perturbation_m = inner.trace.perturbation_m;
  trace.perturbation_steps = inner.trace.perturbation_steps;

  // Dehomogenize: the coefficient of the pinned coordinate is the affine
  // constant of its side.
  Scalar d_prime = inner.hyperplane.w_prime()[coords.size()];
  Scalar d_second = inner.hyperplane.w_second()[coords.size()];
  Vector wp = drop_last(inner.hyperplane.w_prime());
  Vector ws = drop_last(inner.hyperplane.w_second());
  if (reduced) {
    wp = pad_to(wp, coords, n);
    ws = pad_to(ws, coords, n);
  }
  Hyperplane h(std::move(wp), std::move(d_prime), std::move(ws), std::move(d_second));
  return SeparationCertificate{std::move(h), set.generators(), false, y,
                               CertificateMode::Refined, std::move(trace)};
}

VerifyReport verify_certificate(const SeparationCertificate& cert, int samples,
                                std::uint64_t seed) {
  VerifyReport report;
  auto flag = [&report](std::string issue) {
    report.ok = false;
    report.issues.push_back(std::move(issue));
  };

  const Hyperplane& h = cert.hyperplane;
  const std::vector<Vector>& gens = cert.generators;
  if (gens.empty()) {
    flag("certificate carries no generators");
    return report;
  }
  if (!h.is_normalized()) {
    flag("hyperplane is not normalized (w' >= w'' and d' >= d'' required)");
  }
  for (std::size_t l = 0; l < gens.size(); ++l) {
    if (!contains(h, gens[l])) {
      flag("generator " + std::to_string(l) + " is not on the hyperplane");
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(0, 40);
  std::uniform_int_distribution<int> denominator(1, 64);
  std::uniform_int_distribution<int> percent(0, 99);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  const SemifieldKind kind = h.kind();

  for (int s = 0; s < samples; ++s) {
    std::vector<Scalar> weights(gens.size(), Scalar::bottom(kind));
    if (cert.family_is_module) {
      // Unconstrained weights in K, signs mixed, occasional Bottom.
      for (Scalar& w : weights) {
        if (percent(rng) < 15) continue;  // keep Bottom
        Rational q(numerator(rng), denominator(rng));
        if (percent(rng) < 50) q = -q;
        w = Scalar::finite_canonical(q, kind);
      }
    } else {
      // Convex weights: everything <= one in the natural order (canonical
      // payload <= 0) with at least one coordinate pinned to one, so the
      // (+)-sum of the weights is exactly one.
      weights[pick(rng)] = Scalar::one(kind);
      for (Scalar& w : weights) {
        if (w == Scalar::one(kind)) continue;
        if (percent(rng) < 15) continue;  // keep Bottom
        w = Scalar::finite_canonical(-Rational(numerator(rng), denominator(rng)),
                                     kind);
      }
    }
    const Vector x = vcomb(gens, weights);
    if (!contains(h, x)) {
      flag("sampled combination " + std::to_string(s) + " is not on the hyperplane");
    }
  }

  if (contains(h, cert.point)) {
    flag("separated point still lies on the hyperplane");
  }
  return report;
}

}  // namespace tropicon
