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
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tropicon/errors.hpp"
#include "tropicon/projection.hpp"
#include "tropicon/separation.hpp"

namespace tropicon {
namespace {

using testing::Rng;

constexpr SemifieldKind kMax = SemifieldKind::MaxPlus;

Scalar fin(long v, SemifieldKind kind = kMax) { return Scalar::finite(Rational(v), kind); }

Scalar fin(const Rational& v, SemifieldKind kind = kMax) { return Scalar::finite(v, kind); }

Vector vec(std::vector<long> values, SemifieldKind kind = kMax) {
  std::vector<Scalar> entries;
  entries.reserve(values.size());
  for (long v : values) entries.push_back(fin(v, kind));
  return Vector(kind, std::move(entries));
}

DiffAffine diff_1d(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  return DiffAffine(Vector(a.kind(), {a}), b, Vector(a.kind(), {c}), d);
}

Scalar eval_1d(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
               const Scalar& x) {
  return eval(diff_1d(a, b, c, d), Vector(a.kind(), {x}));
}

// A scalar in K: finite most of the time, Bottom with the given chance.
Scalar ground_scalar(Rng& rng, SemifieldKind kind, int bottom_percent = 20) {
  std::uniform_int_distribution<int> pct(0, 99);
  if (pct(rng) < bottom_percent) return Scalar::bottom(kind);
  return Scalar::finite(testing::random_rational(rng), kind);
}

Vector ground_vector(Rng& rng, SemifieldKind kind, std::size_t n, int bottom_percent = 20) {
  std::vector<Scalar> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back(ground_scalar(rng, kind, bottom_percent));
  return Vector(kind, std::move(entries));
}

DiffAffine random_diff(Rng& rng, SemifieldKind kind, std::size_t n) {
  return DiffAffine(ground_vector(rng, kind, n), ground_scalar(rng, kind),
                    ground_vector(rng, kind, n), ground_scalar(rng, kind));
}

// Strict pair x > y in the natural order of K (y may be Bottom); built
// canonically so the ordering holds in both semifield presentations.
std::pair<Scalar, Scalar> strict_pair(Rng& rng, SemifieldKind kind) {
  const Rational hi = testing::random_rational(rng);
  std::uniform_int_distribution<int> pct(0, 99);
  if (pct(rng) < 30) {
    return {Scalar::finite_canonical(hi, kind), Scalar::bottom(kind)};
  }
  std::uniform_int_distribution<int> gap_num(1, 8);
  const Rational gap(gap_num(rng), 2);
  return {Scalar::finite_canonical(hi, kind), Scalar::finite_canonical(hi - gap, kind)};
}

// Weak pair x <= y in the natural order of K (both may be Bottom, ties
// included).
std::pair<Scalar, Scalar> weak_pair(Rng& rng, SemifieldKind kind) {
  std::uniform_int_distribution<int> pct(0, 99);
  const int p = pct(rng);
  if (p < 15) return {Scalar::bottom(kind), Scalar::bottom(kind)};
  const Rational hi = testing::random_rational(rng);
  if (p < 35) return {Scalar::bottom(kind), Scalar::finite_canonical(hi, kind)};
  if (p < 55) return {Scalar::finite_canonical(hi, kind), Scalar::finite_canonical(hi, kind)};
  std::uniform_int_distribution<int> gap_num(1, 8);
  const Rational gap(gap_num(rng), 2);
  return {Scalar::finite_canonical(hi - gap, kind), Scalar::finite_canonical(hi, kind)};
}

TEST_CASE("evaluation is the exact difference of the two affine forms") {
  // a=1, b=Bottom, c=Bottom, d=0 at x=0: primed form 1 beats 0.
  CHECK(eval_1d(fin(1), Scalar::bottom(kMax), Scalar::bottom(kMax), fin(0), fin(0)) == fin(1));
  // The planar supporting function (0,0 | -1,-1) at 0.
  CHECK(eval_1d(fin(0), fin(0), fin(-1), fin(-1), fin(0)) == fin(0));
  // Equal forms cancel to Bottom everywhere.
  const DiffAffine mirrored(vec({2, -1}), fin(3), vec({2, -1}), fin(3));
  for (long x1 = -3; x1 <= 3; ++x1) {
    for (long x2 = -3; x2 <= 3; ++x2) {
      CHECK(eval(mirrored, vec({x1, x2})).is_bottom());
    }
  }
}

TEST_CASE("coefficients outside K are rejected") {
  CHECK_THROWS_AS(DiffAffine(Vector(kMax, {Scalar::top(kMax)}), fin(0),
                             Vector::bottoms(kMax, 1), fin(0)),
                  DomainError);
  CHECK_THROWS_AS(diff_1d(fin(0), Scalar::top(kMax), fin(0), fin(0)), DomainError);
  CHECK_THROWS_AS(DiffAffine(vec({0, 0}), fin(0), Vector::bottoms(kMax, 3), fin(0)),
                  DimensionMismatch);
  CHECK_THROWS_AS(DiffAffine(vec({0}), fin(0), Vector::bottoms(SemifieldKind::MinPlusDual, 1),
                             fin(0)),
                  KindMismatch);
  CHECK_THROWS_AS(eval(diff_1d(fin(0), fin(0), fin(0), fin(0)), vec({1, 2})), DimensionMismatch);
  CHECK_THROWS_AS(classify_1d(fin(0), Scalar::top(kMax), fin(0), fin(0)), DomainError);
}

TEST_CASE("1-D classification reproduces the four generic shapes") {
  const Shape1D dead = classify_1d(fin(0), fin(0), fin(1), fin(1));
  CHECK(dead.shape == Shape1D::Case::IdenticallyBottom);

  const Shape1D ray = classify_1d(fin(2), fin(0), fin(0), fin(1));
  CHECK(ray.shape == Shape1D::Case::RayRight);
  CHECK(ray.slope == fin(2));
  CHECK(ray.threshold == fin(-1));
  CHECK(eval_1d(fin(2), fin(0), fin(0), fin(1), fin(0)) == fin(2));
  CHECK(eval_1d(fin(2), fin(0), fin(0), fin(1), fin(-1)).is_bottom());

  const Shape1D plateau = classify_1d(fin(0), fin(5), fin(2), fin(0));
  CHECK(plateau.shape == Shape1D::Case::Plateau);
  CHECK(plateau.height == fin(5));
  CHECK(plateau.threshold == fin(3));
  CHECK(eval_1d(fin(0), fin(5), fin(2), fin(0), fin(0)) == fin(5));
  CHECK(eval_1d(fin(0), fin(5), fin(2), fin(0), fin(3)).is_bottom());

  const Shape1D affine = classify_1d(fin(1), fin(3), fin(0), fin(0));
  CHECK(affine.shape == Shape1D::Case::Affine);
  CHECK(affine.slope == fin(1));
  CHECK(affine.height == fin(3));
  for (long x = -6; x <= 6; ++x) {
    CHECK(eval_1d(fin(1), fin(3), fin(0), fin(0), fin(x)) ==
          oplus(otimes(fin(1), fin(x)), fin(3)));
  }
}

TEST_CASE("boundary values follow exact difference evaluation") {
  // At the ray threshold both forms tie, so the value is Bottom, not a x.
  const Shape1D ray = classify_1d(fin(2), fin(0), fin(0), fin(1));
  CHECK(ray.value_at(fin(-1)).is_bottom());
  CHECK(ray.value_at(fin(Rational(-3, 4))) == fin(Rational(5, 4)));
  // At the plateau threshold the subtracted line has caught up: Bottom.
  const Shape1D plateau = classify_1d(fin(0), fin(5), fin(2), fin(0));
  CHECK(plateau.value_at(fin(3)).is_bottom());
  CHECK(plateau.value_at(fin(Rational(11, 4))) == fin(5));
  // A plateau over a Bottom line never ends: threshold is Top.
  const Shape1D endless = classify_1d(Scalar::bottom(kMax), fin(5), Scalar::bottom(kMax),
                                      Scalar::bottom(kMax));
  CHECK(endless.shape == Shape1D::Case::Plateau);
  CHECK(endless.threshold.is_top());
  CHECK(endless.value_at(fin(1000)) == fin(5));
  CHECK(endless.value_at(Scalar::bottom(kMax)) == fin(5));
}

TEST_CASE("classification agrees with evaluation on every sign cell") {
  Rng rng(0xd1ffu);
  const auto agree = [&](const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    const Shape1D shape = classify_1d(a, b, c, d);
    const DiffAffine u = diff_1d(a, b, c, d);
    // 21-point grid: -5 to 5 in half steps, plus Bottom checked separately.
    for (int t = -10; t <= 10; ++t) {
      const Scalar x = fin(Rational(t, 2), a.kind());
      CHECK(shape.value_at(x) == eval(u, Vector(a.kind(), {x})));
    }
    const Scalar base = Scalar::bottom(a.kind());
    CHECK(shape.value_at(base) == eval(u, Vector(a.kind(), {base})));
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto [c1, a1] = weak_pair(rng, kMax);   // a <= c
    const auto [d1, b1] = weak_pair(rng, kMax);   // b <= d
    agree(a1, b1, c1, d1);                        // IdenticallyBottom

    const auto [a2, c2] = strict_pair(rng, kMax);  // a > c
    const auto [d2, b2] = weak_pair(rng, kMax);    // b <= d
    agree(a2, b2, c2, d2);                         // RayRight

    const auto [c3, a3] = weak_pair(rng, kMax);    // a <= c
    const auto [b3, d3] = strict_pair(rng, kMax);  // b > d
    agree(a3, b3, c3, d3);                         // Plateau

    const auto [a4, c4] = strict_pair(rng, kMax);  // a > c
    const auto [b4, d4] = strict_pair(rng, kMax);  // b > d
    agree(a4, b4, c4, d4);                         // Affine
  }
}

TEST_CASE("level sets are normalized affine hyperplanes") {
  // u(x) = x (-) 0 with t = 0: the region x <= 0.
  const DiffAffine u(vec({0}), Scalar::bottom(kMax), Vector::bottoms(kMax, 1), fin(0));
  const Hyperplane h = level_hyperplane(u, fin(0));
  CHECK(h.is_normalized());
  CHECK(contains(h, vec({-3})));
  CHECK(contains(h, vec({0})));
  CHECK(!contains(h, vec({2})));
}

TEST_CASE("level set at Bottom is the vanishing set") {
  Rng rng(0x1e5eu);
  for (int trial = 0; trial < 40; ++trial) {
    const DiffAffine u = random_diff(rng, kMax, 2);
    const Hyperplane h = level_hyperplane(u, Scalar::bottom(kMax));
    for (int i = 0; i < 25; ++i) {
      const Vector x = ground_vector(rng, kMax, 2);
      CHECK(contains(h, x) == eval(u, x).is_bottom());
    }
  }
}

TEST_CASE("identically Bottom functions have full level sets") {
  const DiffAffine u(vec({0, 1}), fin(0), vec({0, 1}), fin(0));
  const Hyperplane h = level_hyperplane(u, fin(-7));
  Rng rng(0xf111u);
  for (int i = 0; i < 50; ++i) {
    CHECK(contains(h, ground_vector(rng, kMax, 2)));
  }
}

TEST_CASE("level-set membership matches evaluation against the threshold") {
  Rng rng(0x1e7e1u);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const DiffAffine u = random_diff(rng, kMax, n);
    const Scalar t = ground_scalar(rng, kMax, 10);
    const Hyperplane h = level_hyperplane(u, t);
    CHECK(h.is_normalized());
    for (int i = 0; i < 25; ++i) {
      const Vector x = ground_vector(rng, kMax, n);
      CHECK(contains(h, x) == (eval(u, x) <= t));
      ++checked;
    }
  }
  CHECK(checked == 1000);
}

TEST_CASE("every difference of affine functions is convex") {
  Rng rng(0xc0feu);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const DiffAffine u = random_diff(rng, kMax, n);
    const Vector x1 = ground_vector(rng, kMax, n);
    const Vector x2 = ground_vector(rng, kMax, n);
    // alpha (+) beta = 1: pin one weight to 1, keep the other <= 1.
    std::uniform_int_distribution<int> raw(-8, 0);
    Scalar alpha = Scalar::one(kMax);
    Scalar beta = Scalar::finite_canonical(Rational(raw(rng), 2), kMax);
    if (trial % 2 == 0) std::swap(alpha, beta);
    const Vector mix = vcomb({x1, x2}, {alpha, beta});
    const Scalar lhs = eval(u, mix);
    const Scalar rhs = oplus(otimes(eval(u, x1), alpha), otimes(eval(u, x2), beta));
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("affine functions are the subclass with Bottom subtracted form") {
  Rng rng(0xaff1u);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Vector w = ground_vector(rng, kMax, n);
    const Scalar d = ground_scalar(rng, kMax);
    const DiffAffine u(w, d, Vector::bottoms(kMax, n), Scalar::bottom(kMax));
    const Vector x = ground_vector(rng, kMax, n);
    CHECK(eval(u, x) == oplus(vdot(w, x), d));
  }
}

TEST_CASE("scaling multiplies the value for finite factors") {
  Rng rng(0x5ca1eu);
  for (int trial = 0; trial < 60; ++trial) {
    const DiffAffine u = random_diff(rng, kMax, 2);
    const Scalar alpha = Scalar::finite(testing::random_rational(rng), kMax);
    const DiffAffine su = scale(u, alpha);
    const Vector x = ground_vector(rng, kMax, 2);
    CHECK(eval(su, x) == otimes(alpha, eval(u, x)));
  }
}

TEST_CASE("separation certificates read as vanishing differences") {
  // The planar convex set conv{(0, Bottom), (2, 3)} and a point below it.
  const ConvexSet set(kMax, 2,
                      {Vector(kMax, {fin(0), Scalar::bottom(kMax)}), vec({2, 3})});
  const Vector y = vec({1, 0});
  const SeparationCertificate cert = separate_convex(set, y);
  const DiffAffine u = as_diff_affine(cert.hyperplane);
  for (const Vector& g : set.generators()) {
    CHECK(eval(u, g).is_bottom());
  }
  CHECK(!eval(u, y).is_bottom());
}

TEST_CASE("min-plus differences mirror max-plus behaviour") {
  constexpr SemifieldKind kMin = SemifieldKind::MinPlusDual;
  // min-plus affine pair: a = 1, d = 0 (numeric values).
  const Scalar a = fin(1, kMin);
  const Scalar bottom = Scalar::bottom(kMin);
  const Shape1D ray = classify_1d(a, bottom, bottom, fin(0, kMin));
  CHECK(ray.shape == Shape1D::Case::RayRight);
  // In min-plus, x (x) 1 <= 0 numerically means x + 1 >= 0; the difference
  // turns non-Bottom once x + 1 drops strictly below 0.
  CHECK(eval_1d(a, bottom, bottom, fin(0, kMin), fin(-2, kMin)) == fin(-1, kMin));
  CHECK(eval_1d(a, bottom, bottom, fin(0, kMin), fin(1, kMin)).is_bottom());

  Rng rng(0x3137u);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [a2, c2] = strict_pair(rng, kMin);
    const auto [d2, b2] = weak_pair(rng, kMin);
    const Shape1D shape = classify_1d(a2, b2, c2, d2);
    const DiffAffine u = diff_1d(a2, b2, c2, d2);
    for (int t = -10; t <= 10; ++t) {
      const Scalar x = Scalar::finite_canonical(Rational(t, 2), kMin);
      CHECK(shape.value_at(x) == eval(u, Vector(kMin, {x})));
    }
  }
}

}  // namespace
}  // namespace tropicon
