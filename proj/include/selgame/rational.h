// Copyright 2026 The selgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SELGAME_RATIONAL_H_
#define SELGAME_RATIONAL_H_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace selgame {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", decimals such as "0.125" or "-3", and exponents "1e-3".
Rational ParseRational(const std::string& text);

// Exact value of the shortest decimal that round-trips to v, so 0.1 -> 1/10.
Rational RationalFromDouble(double v);

std::string RationalToString(const Rational& r);
double RationalToDouble(const Rational& r);

}  // namespace selgame

#endif  // SELGAME_RATIONAL_H_
