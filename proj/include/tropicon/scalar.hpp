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

#ifndef TROPICON_SCALAR_HPP_
#define TROPICON_SCALAR_HPP_

#include <cstdint>
#include <utility>

#include "tropicon/errors.hpp"
#include "tropicon/rational.hpp"

namespace tropicon {

// Which idempotent semifield the values live in.
//
// MaxPlus is (Q u {-inf}, max, +) with zero = -inf and one = 0, completed
// with a top element +inf. MinPlusDual is the order mirror: (Q u {+inf},
// min, +) whose natural order is the reversed numeric order, so its zero
// (least) element is numerically +inf and its top is -inf.
//
// MinPlusDual is realized by storing finite payloads negated ("canonical"
// max-plus orientation) so that a single arithmetic core serves both kinds;
// the numeric reading is restored at construction/serialization boundaries.
enum class SemifieldKind : std::uint8_t { MaxPlus, MinPlusDual };

const char* kind_name(SemifieldKind kind);

// One element of the completed semifield Kbar = {Bottom} u Q u {Top}.
//
// Bottom is the semiring zero (neutral for oplus, absorbing for otimes
// against every non-Top element); Top is the adjoined greatest element with
// a (+) Top = Top, a (x) Top = Top for a != Bottom and Top (x) Bottom =
// Bottom. The natural (semiring) order is total: Bottom < finite < Top,
// finite values ordered as rationals. Comparisons below use this order.
//
// Bottom and Top are distinguished states rather than sentinel numerics so
// that rules such as Top (x) Bottom = Bottom hold structurally. Finite
// payloads are exact rationals: the algebra is tie-sensitive (hyperplane
// membership is an equality test), which rules out floating point.
class Scalar {
 public:
  enum class State : std::uint8_t { Bottom, Finite, Top };

  // Default-constructs the max-plus zero. Kept so containers work; prefer
  // the named factories.
  Scalar() : state_(State::Bottom), kind_(SemifieldKind::MaxPlus) {}

  static Scalar bottom(SemifieldKind kind = SemifieldKind::MaxPlus) {
    return Scalar(State::Bottom, kind, Rational(0));
  }
  static Scalar top(SemifieldKind kind = SemifieldKind::MaxPlus) {
    return Scalar(State::Top, kind, Rational(0));
  }
  // The multiplicative unit (0 in both numeric readings).
  static Scalar one(SemifieldKind kind = SemifieldKind::MaxPlus) {
    return Scalar(State::Finite, kind, Rational(0));
  }
  // A finite element given in the kind's own numeric reading.
  static Scalar finite(Rational numeric, SemifieldKind kind = SemifieldKind::MaxPlus) {
    if (kind == SemifieldKind::MinPlusDual) numeric = -numeric;
    return Scalar(State::Finite, kind, std::move(numeric));
  }
  static Scalar finite(long numeric, SemifieldKind kind = SemifieldKind::MaxPlus) {
    return finite(Rational(numeric), kind);
  }
  // A finite element given directly in canonical orientation. The scalar
  // operations work on canonical payloads, which makes them kind-agnostic.
  static Scalar finite_canonical(Rational canonical, SemifieldKind kind) {
    return Scalar(State::Finite, kind, std::move(canonical));
  }

  State state() const { return state_; }
  SemifieldKind kind() const { return kind_; }
  bool is_bottom() const { return state_ == State::Bottom; }
  bool is_finite() const { return state_ == State::Finite; }
  bool is_top() const { return state_ == State::Top; }

  // Finite payload in canonical (max-plus) orientation. Only meaningful for
  // finite values.
  const Rational& canonical() const { return value_; }

  // Finite payload in the kind's numeric reading.
  Rational numeric() const {
    return kind_ == SemifieldKind::MinPlusDual ? Rational(-value_) : value_;
  }

  // Total-order comparison in the natural (semiring) order.
  // Throws KindMismatch when the operands belong to different semifields.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const Scalar& a, const Scalar& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const Scalar& a, const Scalar& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const Scalar& a, const Scalar& b) {
    return compare(a, b) >= 0;
  }

  static int compare(const Scalar& a, const Scalar& b);

 private:
  Scalar(State state, SemifieldKind kind, Rational canonical)
      : state_(state), kind_(kind), value_(std::move(canonical)) {}

  State state_;
  SemifieldKind kind_;
  Rational value_;  // canonical max-plus orientation; zero unless finite
};

// a (+) b: the order maximum. Idempotent, commutative, associative;
// identity Bottom; a (+) Top = Top.
Scalar oplus(const Scalar& a, const Scalar& b);

// a (x) b: rational addition on finite values; Bottom absorbing (also
// against Top); Top (x) a = Top for a != Bottom.
Scalar otimes(const Scalar& a, const Scalar& b);

// Multiplicative inverse (rational negation). Only finite elements are
// invertible; throws InversionOfZeroOrTop otherwise.
Scalar inv(const Scalar& a);

// Left residual a \ b = max{ lambda : a (x) lambda <= b }, the upper
// adjoint of multiplication: a (x) lambda <= b  iff  lambda <= lres(a, b).
// Defined on all of Kbar; finite values give b - a.
Scalar lres(const Scalar& a, const Scalar& b);

// nu (-) mu = min{ lambda : mu (+) lambda >= nu }, the dual adjoint of
// oplus: lambda (+) mu >= nu  iff  lambda >= ominus(nu, mu). Evaluates to
// nu when nu > mu and Bottom otherwise; in particular ominus(Top, mu) = Top
// for mu != Top and Bottom for mu = Top (forced by the defining infimum).
Scalar ominus(const Scalar& nu, const Scalar& mu);

// a's dual a^- = lres(a, one): rational negation extended by
// dual(Bottom) = Top and dual(Top) = Bottom. An order-reversing involution.
Scalar dual(const Scalar& a);

// Binary infimum. The natural order is total, so this is just the minimum;
// named to keep formulas close to their algebraic reading.
Scalar meet(const Scalar& a, const Scalar& b);

// Note on limits: otimes is not order-continuous at Top (the decreasing
// family Top (x) (-l) stays Top and does not converge to Top (x) Bottom =
// Bottom). Nothing in this library relies on continuity through Top.

}  // namespace tropicon

#endif  // TROPICON_SCALAR_HPP_
