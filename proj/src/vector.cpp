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

#include "tropicon/vector.hpp"

#include <utility>

#include "tropicon/errors.hpp"

namespace tropicon {

namespace {

void require_same_kind(const Vector& a, const Vector& b) {
  if (a.kind() != b.kind()) {
    throw KindMismatch("vector kinds differ: " + std::string(kind_name(a.kind())) +
                       " vs " + std::string(kind_name(b.kind())));
  }
}

void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector sizes differ: " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
  }
}

}  // namespace

Vector::Vector(SemifieldKind kind, std::vector<Scalar> entries)
    : kind_(kind), entries_(std::move(entries)) {
  for (const Scalar& e : entries_) {
    if (e.kind() != kind_) {
      throw KindMismatch("vector entry kind does not match vector kind");
    }
  }
}

Vector::Vector(SemifieldKind kind, std::initializer_list<Scalar> entries)
    : Vector(kind, std::vector<Scalar>(entries)) {}

Vector Vector::filled(SemifieldKind kind, std::size_t n, const Scalar& value) {
  if (value.kind() != kind) {
    throw KindMismatch("fill value kind does not match vector kind");
  }
  return Vector(kind, std::vector<Scalar>(n, value));
}

Vector Vector::bottoms(SemifieldKind kind, std::size_t n) {
  return filled(kind, n, Scalar::bottom(kind));
}

Vector Vector::unit(SemifieldKind kind, std::size_t n, std::size_t i) {
  if (i >= n) {
    throw DimensionMismatch("unit index " + std::to_string(i) +
                            " out of range for size " + std::to_string(n));
  }
  Vector v = bottoms(kind, n);
  v.set(i, Scalar::one(kind));
  return v;
}

void Vector::set(std::size_t i, Scalar value) {
  if (value.kind() != kind_) {
    throw KindMismatch("assigned entry kind does not match vector kind");
  }
  if (i >= entries_.size()) {
    throw DimensionMismatch("index " + std::to_string(i) +
                            " out of range for size " + std::to_string(entries_.size()));
  }
  entries_[i] = std::move(value);
}

bool Vector::has_top() const {
  for (const Scalar& e : entries_) {
    if (e.is_top()) return true;
  }
  return false;
}

bool Vector::is_bottom_vector() const {
  for (const Scalar& e : entries_) {
    if (!e.is_bottom()) return false;
  }
  return true;
}

bool operator==(const Vector& a, const Vector& b) {
  if (a.kind_ != b.kind_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i] != b.entries_[i]) return false;
  }
  return true;
}

Scalar vdot(const Vector& y, const Vector& x) {
  require_same_kind(y, x);
  require_same_size(y, x);
  Scalar acc = Scalar::bottom(y.kind());
  for (std::size_t i = 0; i < y.size(); ++i) {
    acc = oplus(acc, otimes(y[i], x[i]));
  }
  return acc;
}

Scalar vlres(const Vector& x, const Vector& y) {
  require_same_kind(x, y);
  require_same_size(x, y);
  Scalar acc = Scalar::top(x.kind());
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = meet(acc, lres(x[i], y[i]));
  }
  return acc;
}

Vector vdual(const Vector& x) {
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(dual(x[i]));
  }
  return Vector(x.kind(), std::move(out));
}

SupportSet support(const Vector& x) {
  SupportSet s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_bottom()) s.push_back(i);
  }
  return s;
}

Vector vcomb(const std::vector<Vector>& points, const std::vector<Scalar>& weights) {
  if (points.empty()) {
    throw DimensionMismatch("vcomb needs at least one point");
  }
  if (points.size() != weights.size()) {
    throw DimensionMismatch("vcomb point/weight counts differ: " +
                            std::to_string(points.size()) + " vs " +
                            std::to_string(weights.size()));
  }
  for (const Scalar& w : weights) {
    if (w.is_top()) {
      throw InversionOfZeroOrTop("vcomb weight must lie in the ground semifield, got Top");
    }
  }
  Vector acc = Vector::bottoms(points[0].kind(), points[0].size());
  for (std::size_t l = 0; l < points.size(); ++l) {
    acc = voplus(acc, scale(points[l], weights[l]));
  }
  return acc;
}

Vector scale(const Vector& v, const Scalar& a) {
  if (v.kind() != a.kind()) {
    throw KindMismatch("scale factor kind does not match vector kind");
  }
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(otimes(v[i], a));
  }
  return Vector(v.kind(), std::move(out));
}

Vector voplus(const Vector& a, const Vector& b) {
  require_same_kind(a, b);
  require_same_size(a, b);
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(oplus(a[i], b[i]));
  }
  return Vector(a.kind(), std::move(out));
}

bool vleq(const Vector& a, const Vector& b) {
  require_same_kind(a, b);
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace tropicon
