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

#include "tropicon/scalar.hpp"

namespace tropicon {

namespace {

void require_same_kind(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind()) {
    throw KindMismatch("scalar operands belong to different semifields");
  }
}

}  // namespace

const char* kind_name(SemifieldKind kind) {
  return kind == SemifieldKind::MaxPlus ? "max-plus" : "min-plus";
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  require_same_kind(a, b);
  if (a.state_ == b.state_) {
    if (a.state_ != State::Finite) return 0;
    if (a.value_ < b.value_) return -1;
    if (b.value_ < a.value_) return 1;
    return 0;
  }
  auto rank = [](State s) { return s == State::Bottom ? 0 : s == State::Finite ? 1 : 2; };
  return rank(a.state_) < rank(b.state_) ? -1 : 1;
}

Scalar oplus(const Scalar& a, const Scalar& b) {
  return a >= b ? a : b;
}

Scalar otimes(const Scalar& a, const Scalar& b) {
  require_same_kind(a, b);
  if (a.is_bottom() || b.is_bottom()) return Scalar::bottom(a.kind());
  if (a.is_top() || b.is_top()) return Scalar::top(a.kind());
  return Scalar::finite_canonical(a.canonical() + b.canonical(), a.kind());
}

Scalar inv(const Scalar& a) {
  if (!a.is_finite()) {
    throw InversionOfZeroOrTop("inv is defined on finite elements only");
  }
  return Scalar::finite_canonical(-a.canonical(), a.kind());
}

Scalar lres(const Scalar& a, const Scalar& b) {
  require_same_kind(a, b);
  // max{lambda : a (x) lambda <= b}, case split on the completed states.
  if (a.is_bottom()) return Scalar::top(a.kind());   // a (x) anything = Bottom <= b
  if (b.is_top()) return Scalar::top(a.kind());      // no constraint
  if (a.is_top()) return Scalar::bottom(a.kind());   // only lambda = Bottom keeps Top (x) lambda <= b < Top
  if (b.is_bottom()) return Scalar::bottom(a.kind());
  return Scalar::finite_canonical(b.canonical() - a.canonical(), a.kind());
}

Scalar ominus(const Scalar& nu, const Scalar& mu) {
  require_same_kind(nu, mu);
  return nu > mu ? nu : Scalar::bottom(nu.kind());
}

Scalar dual(const Scalar& a) {
  return lres(a, Scalar::one(a.kind()));
}

Scalar meet(const Scalar& a, const Scalar& b) {
  return a <= b ? a : b;
}

}  // namespace tropicon
