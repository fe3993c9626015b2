/*
   Copyright 2026 The einso Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace einso {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p/q" or a finite decimal "1.25". Result is canonical.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

double to_double(const Rational& q);

/// Dyadic rational closest to x (x must be finite).
Rational from_double(double x);

/// Smallest-denominator rational in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Rounds q down (or up) to a multiple of 2^-bits.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

}  // namespace einso
