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

#ifndef TROPICON_RATIONAL_HPP_
#define TROPICON_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tropicon {

// Exact arbitrary-precision rationals. All finite scalar payloads use this
// type; the library never touches floating point in computations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", plain integers, and exact decimals with an optional
// exponent ("-3", "2.5", "1/3", "1.5e2"). Throws ParseError on anything
// else; never rounds.
Rational parse_rational(const std::string& text);

// Renders as "p" for integral values and "p/q" otherwise.
std::string rational_to_string(const Rational& value);

bool rational_is_integral(const Rational& value);

}  // namespace tropicon

#endif  // TROPICON_RATIONAL_HPP_
