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

#include "selgame/rational.h"

#include <cctype>
#include <charconv>
#include <cmath>

#include "selgame/errors.h"

namespace selgame {
namespace {

using boost::multiprecision::cpp_int;

cpp_int Pow10(int k) {
  cpp_int p = 1;
  for (int i = 0; i < k; ++i) p *= 10;
  return p;
}

Rational ParseDecimal(const std::string& raw) {
  std::string s;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) Fail(ErrorCode::kValidation, "empty number");
  bool neg = false;
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string digits;
  int frac = 0;
  bool seen_dot = false, any = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_dot) Fail(ErrorCode::kValidation, "malformed number '" + raw + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      any = true;
      if (seen_dot) ++frac;
    } else {
      Fail(ErrorCode::kValidation, "malformed number '" + raw + "'");
    }
  }
  if (!any) Fail(ErrorCode::kValidation, "malformed number '" + raw + "'");
  int exp10 = 0;
  if (i < s.size()) {
    const std::string e = s.substr(i + 1);
    auto res = std::from_chars(e.data(), e.data() + e.size(), exp10);
    if (e.empty() || res.ec != std::errc() || res.ptr != e.data() + e.size() ||
        std::abs(exp10) > 400) {
      Fail(ErrorCode::kValidation, "malformed exponent in '" + raw + "'");
    }
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const size_t nz = digits.find_first_not_of('0');
  cpp_int num(nz == std::string::npos ? std::string("0") : digits.substr(nz));
  const int shift = exp10 - frac;
  Rational r = shift >= 0 ? Rational(num * Pow10(shift))
                          : Rational(num, Pow10(-shift));
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational ParseRational(const std::string& text) {
  const size_t slash = text.find('/');
  if (slash == std::string::npos) return ParseDecimal(text);
  const Rational num = ParseDecimal(text.substr(0, slash));
  const Rational den = ParseDecimal(text.substr(slash + 1));
  if (den == 0) Fail(ErrorCode::kValidation, "zero denominator in '" + text + "'");
  return num / den;
}

Rational RationalFromDouble(double v) {
  if (!std::isfinite(v)) Fail(ErrorCode::kValidation, "non-finite number");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return ParseDecimal(std::string(buf, res.ptr));
}

std::string RationalToString(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double RationalToDouble(const Rational& r) { return r.convert_to<double>(); }

}  // namespace selgame
