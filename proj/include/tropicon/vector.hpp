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

#ifndef TROPICON_VECTOR_HPP_
#define TROPICON_VECTOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "tropicon/scalar.hpp"

namespace tropicon {

// A finite-dimensional point of Kbar^n. Coordinate order is significant and
// fixed (indices are 0-based in code and serialized JSON, 1-based in prose).
//
// A vector lies in the ground space K^n exactly when it has no Top entry;
// operations that require ground-space inputs say so and reject Top entries
// up front (see has_top()).
class Vector {
 public:
  Vector(SemifieldKind kind, std::vector<Scalar> entries);
  Vector(SemifieldKind kind, std::initializer_list<Scalar> entries);

  // n copies of one value.
  static Vector filled(SemifieldKind kind, std::size_t n, const Scalar& value);
  // The zero vector (all Bottom).
  static Vector bottoms(SemifieldKind kind, std::size_t n);
  // one at position i, Bottom elsewhere.
  static Vector unit(SemifieldKind kind, std::size_t n, std::size_t i);

  SemifieldKind kind() const { return kind_; }
  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  void set(std::size_t i, Scalar value);

  bool has_top() const;
  bool is_bottom_vector() const;

  friend bool operator==(const Vector& a, const Vector& b);
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

 private:
  SemifieldKind kind_;
  std::vector<Scalar> entries_;
};

// Sorted 0-based indices i with x_i != Bottom.
using SupportSet = std::vector<std::size_t>;

// <y, x> = max over i of y_i (x) x_i.
Scalar vdot(const Vector& y, const Vector& x);

// x \ y = min over i of lres(x_i, y_i); the vector Galois adjoint:
// scale(x, lambda) <= y  iff  lambda <= vlres(x, y). Coordinates outside
// supp x contribute Top and do not constrain; in particular the zero
// vector residuates to Top (infimum over an empty constraint set).
Scalar vlres(const Vector& x, const Vector& y);

// Entrywise dual; an involution satisfying dual(vlres(x, y)) =
// vdot(vdual(y), x).
Vector vdual(const Vector& x);

SupportSet support(const Vector& x);

// (+) over l of points[l] (x) weights[l], coordinatewise. Weights must lie
// in K (no Top).
Vector vcomb(const std::vector<Vector>& points, const std::vector<Scalar>& weights);

// v (x) a coordinatewise.
Vector scale(const Vector& v, const Scalar& a);

// Coordinatewise (+).
Vector voplus(const Vector& a, const Vector& b);

// Coordinatewise natural order: a_i <= b_i for all i.
bool vleq(const Vector& a, const Vector& b);

}  // namespace tropicon

#endif  // TROPICON_VECTOR_HPP_
