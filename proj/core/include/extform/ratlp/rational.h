// Copyright 2026 The extform Authors.
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

#ifndef EXTFORM_RATLP_RATIONAL_H_
#define EXTFORM_RATLP_RATIONAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace extform {

// Arbitrary-precision rational. GMP keeps every value canonical (lowest
// terms, positive denominator) after each arithmetic operation.
using Rat = mpq_class;

// Parses "p/q", "-7", "0.125" or "-3.5" exactly. Throws Error(kParse).
Rat ParseRat(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string FormatRat(const Rat& value);

// Truncated decimal expansion with `digits` fractional digits.
std::string FormatDecimal(const Rat& value, int digits = 6);

// "p/q (d.dddddd)" for human-readable reports.
std::string FormatRatWithDecimal(const Rat& value);

// Encoding length: bits of numerator plus bits of denominator.
std::size_t BitLength(const Rat& value);

inline bool IsInteger(const Rat& value) { return value.get_den() == 1; }

}  // namespace extform

#endif  // EXTFORM_RATLP_RATIONAL_H_
