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

#include "extform/ratlp/rational.h"

#include <cctype>
#include <string>

#include "extform/error.h"

namespace extform {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kNotFound:
      return "not-found";
    case ErrorCode::kDisconnected:
      return "disconnected";
    case ErrorCode::kOddTerminalSet:
      return "odd-terminal-set";
    case ErrorCode::kSizeCapExceeded:
      return "size-cap-exceeded";
    case ErrorCode::kPrecondition:
      return "precondition";
    case ErrorCode::kNonVertex:
      return "non-vertex";
    case ErrorCode::kSupportMismatch:
      return "support-mismatch";
    case ErrorCode::kInternal:
      return "internal";
  }
  return "unknown";
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void BadRational(std::string_view text) {
  throw Error(ErrorCode::kParse,
              "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rat ParseRat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rat result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) BadRational(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) BadRational(text);
    result = Rat(mpz_class(std::string(num), 10), d);
    result.canonicalize();
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac))) {
      BadRational(text);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0)
                                      : mpz_class(std::string(whole), 10);
    const mpz_class f =
        frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    result = Rat(w * scale + f, scale);
    result.canonicalize();
  } else {
    if (!AllDigits(body)) BadRational(text);
    result = Rat(mpz_class(std::string(body), 10));
  }
  if (negative) result = -result;
  return result;
}

std::string FormatRat(const Rat& value) { return value.get_str(); }

std::string FormatDecimal(const Rat& value, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class num = abs(value.get_num());
  const mpz_class& den = value.get_den();
  const mpz_class whole = num / den;
  const mpz_class frac = (num % den) * scale / den;
  std::string out = value < 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

std::string FormatRatWithDecimal(const Rat& value) {
  return FormatRat(value) + " (" + FormatDecimal(value) + ")";
}

std::size_t BitLength(const Rat& value) {
  return mpz_sizeinbase(value.get_num_mpz_t(), 2) +
         mpz_sizeinbase(value.get_den_mpz_t(), 2);
}

}  // namespace extform
