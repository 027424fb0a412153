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

#include "doctest.h"
#include "oracles.hpp"
#include "tropicon/errors.hpp"
#include "tropicon/rational.hpp"
#include "tropicon/scalar.hpp"

namespace tropicon {
namespace {

using testing::Rng;

Scalar F(long v) { return Scalar::finite(v); }
const Scalar kBot = Scalar::bottom();
const Scalar kTop = Scalar::top();

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("+5/10") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5e2") == Rational(-150));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK(rational_to_string(Rational(-7, 2)) == "-7/2");
  CHECK(rational_to_string(Rational(4)) == "4");
  CHECK(rational_is_integral(Rational(4)));
  CHECK(!rational_is_integral(Rational(1, 2)));
}

TEST_CASE("natural order is total with Bottom < finite < Top") {
  CHECK(kBot < F(-100));
  CHECK(F(-100) < F(0));
  CHECK(F(0) < kTop);
  CHECK(kBot < kTop);
  CHECK(F(3) == F(3));
  CHECK(Scalar::one() == F(0));
  CHECK_THROWS_AS((void)(F(1) < Scalar::finite(1, SemifieldKind::MinPlusDual)),
                  KindMismatch);
}

TEST_CASE("oplus is the order maximum") {
  CHECK(oplus(F(3), F(5)) == F(5));
  CHECK(oplus(F(7), kBot) == F(7));
  CHECK(oplus(kBot, kBot) == kBot);
  CHECK(oplus(F(7), kTop) == kTop);
  CHECK(oplus(kBot, kTop) == kTop);
}

TEST_CASE("otimes adds finite values with absorbing Bottom") {
  CHECK(otimes(F(3), F(5)) == F(8));
  CHECK(otimes(kTop, kBot) == kBot);
  CHECK(otimes(kBot, kTop) == kBot);
  CHECK(otimes(kTop, F(-2)) == kTop);
  CHECK(otimes(kTop, kTop) == kTop);
  CHECK(otimes(F(4), kBot) == kBot);
  CHECK(otimes(Scalar::finite(Rational(1, 2)), Scalar::finite(Rational(1, 3))) ==
        Scalar::finite(Rational(5, 6)));
}

TEST_CASE("inv negates finite values and rejects Bottom/Top") {
  CHECK(inv(F(4)) == F(-4));
  CHECK(inv(F(0)) == F(0));
  CHECK(otimes(F(9), inv(F(9))) == Scalar::one());
  CHECK_THROWS_AS(inv(kBot), InversionOfZeroOrTop);
  CHECK_THROWS_AS(inv(kTop), InversionOfZeroOrTop);
}

TEST_CASE("lres case table") {
  CHECK(lres(F(2), F(7)) == F(5));
  CHECK(lres(kBot, kBot) == kTop);
  CHECK(lres(kTop, kTop) == kTop);
  CHECK(lres(F(5), kBot) == kBot);
  CHECK(lres(kBot, F(5)) == kTop);
  CHECK(lres(F(5), kTop) == kTop);
  CHECK(lres(kTop, F(5)) == kBot);
  CHECK(lres(kTop, kBot) == kBot);
  CHECK(lres(kBot, kTop) == kTop);
}

TEST_CASE("ominus keeps nu above mu and collapses to Bottom otherwise") {
  CHECK(ominus(F(5), F(3)) == F(5));
  CHECK(ominus(F(3), F(5)) == kBot);
  CHECK(ominus(F(3), F(3)) == kBot);
  CHECK(ominus(kTop, F(5)) == kTop);
  CHECK(ominus(kTop, kTop) == kBot);
  CHECK(ominus(F(7), kBot) == F(7));
  CHECK(ominus(kBot, F(1)) == kBot);
}

TEST_CASE("dual is an order-reversing involution") {
  CHECK(dual(F(4)) == F(-4));
  CHECK(dual(kBot) == kTop);
  CHECK(dual(kTop) == kBot);
  CHECK(dual(F(0)) == F(0));
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar a = testing::random_scalar(rng, SemifieldKind::MaxPlus);
    Scalar b = testing::random_scalar(rng, SemifieldKind::MaxPlus);
    CHECK(dual(dual(a)) == a);
    if (a <= b) CHECK(dual(b) <= dual(a));
  }
}

TEST_CASE("meet is the total-order minimum") {
  CHECK(meet(F(3), F(5)) == F(3));
  CHECK(meet(F(3), kTop) == F(3));
  CHECK(meet(kBot, F(3)) == kBot);
}

TEST_CASE("residuation and difference adjunctions hold on random triples") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    Scalar a = testing::random_scalar(rng, SemifieldKind::MaxPlus);
    Scalar b = testing::random_scalar(rng, SemifieldKind::MaxPlus);
    Scalar c = testing::random_scalar(rng, SemifieldKind::MaxPlus);
    REQUIRE(testing::galois_product_residual_holds(a, b, c));
    REQUIRE(testing::galois_sum_difference_holds(a, b, c));
    REQUIRE(testing::residuation_closure_holds(a));
    REQUIRE(testing::triple_composition_holds(a, b));
  }
}

TEST_CASE("adjunctions hold on the full Bottom/Top boundary grid") {
  std::vector<Scalar> grid = {kBot, F(-3), F(0), F(2), kTop};
  for (const Scalar& a : grid) {
    for (const Scalar& b : grid) {
      REQUIRE(testing::triple_composition_holds(a, b));
      CHECK(testing::residuation_closure_holds(a));
      for (const Scalar& c : grid) {
        REQUIRE(testing::galois_product_residual_holds(a, b, c));
        REQUIRE(testing::galois_sum_difference_holds(a, b, c));
      }
    }
  }
}

TEST_CASE("oplus distributes over binary meet on finite values") {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    Scalar a = Scalar::finite(testing::random_rational(rng));
    Scalar b = Scalar::finite(testing::random_rational(rng));
    Scalar c = Scalar::finite(testing::random_rational(rng));
    CHECK(oplus(a, meet(b, c)) == meet(oplus(a, b), oplus(a, c)));
  }
}

TEST_CASE("min-plus mirror reuses the canonical core") {
  const SemifieldKind mp = SemifieldKind::MinPlusDual;
  Scalar a = Scalar::finite(3, mp);
  Scalar b = Scalar::finite(5, mp);
  // Addition is numeric min, multiplication numeric addition.
  CHECK(oplus(a, b) == a);
  CHECK(otimes(a, b) == Scalar::finite(8, mp));
  CHECK(inv(a) == Scalar::finite(-3, mp));
  CHECK(otimes(a, inv(a)) == Scalar::one(mp));
  // Natural order is the reversed numeric order.
  CHECK(b < a);
  CHECK(Scalar::bottom(mp) < b);
  CHECK(a < Scalar::top(mp));
  // Numeric reading round-trips.
  CHECK(a.numeric() == Rational(3));
  CHECK(Scalar::finite(Rational(-7, 2), mp).numeric() == Rational(-7, 2));

  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    Scalar x = testing::random_scalar(rng, mp);
    Scalar y = testing::random_scalar(rng, mp);
    Scalar z = testing::random_scalar(rng, mp);
    REQUIRE(testing::galois_product_residual_holds(x, y, z));
    REQUIRE(testing::galois_sum_difference_holds(x, y, z));
    REQUIRE(testing::triple_composition_holds(x, y));
    CHECK(dual(dual(x)) == x);
  }
}

}  // namespace
}  // namespace tropicon
