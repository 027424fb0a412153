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

#include "tropicon/rational.hpp"

#include <cstddef>
#include <string>

#include "tropicon/errors.hpp"

namespace tropicon {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt pow10(std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 10;
  return r;
}

// cpp_int's string constructor treats a leading '0' as an octal prefix;
// strip leading zeros so digit strings are always read as decimal.
BigInt from_decimal_digits(const std::string& digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) return BigInt(0);
  return BigInt(digits.substr(first));
}

[[noreturn]] void bad(const std::string& text) {
  throw ParseError("not a rational literal: \"" + text + "\"");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) bad(text);

  const std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    const BigInt q = from_decimal_digits(den);
    if (q == 0) bad(text);
    Rational r(from_decimal_digits(num), q);
    return negative ? Rational(-r) : r;
  }

  // [digits][.digits][e[sign]digits]
  std::string mantissa = s;
  long exponent = 0;
  const std::size_t epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = s.substr(0, epos);
    std::string exp = s.substr(epos + 1);
    bool exp_neg = false;
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
      exp_neg = exp[0] == '-';
      exp.erase(0, 1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad(text);
    exponent = std::stol(exp);
    if (exp_neg) exponent = -exponent;
  }

  std::string digits = mantissa;
  std::size_t frac_len = 0;
  const std::size_t dot = mantissa.find('.');
  if (dot != std::string::npos) {
    const std::string head = mantissa.substr(0, dot);
    const std::string tail = mantissa.substr(dot + 1);
    if (head.empty() && tail.empty()) bad(text);
    if (!head.empty() && !all_digits(head)) bad(text);
    if (!tail.empty() && !all_digits(tail)) bad(text);
    digits = head + tail;
    frac_len = tail.size();
  }
  if (!all_digits(digits)) bad(text);

  Rational r(from_decimal_digits(digits), pow10(frac_len));
  if (exponent > 0) {
    r *= Rational(pow10(static_cast<std::size_t>(exponent)));
  } else if (exponent < 0) {
    r /= Rational(pow10(static_cast<std::size_t>(-exponent)));
  }
  return negative ? Rational(-r) : r;
}

std::string rational_to_string(const Rational& value) {
  return value.str();
}

bool rational_is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace tropicon
