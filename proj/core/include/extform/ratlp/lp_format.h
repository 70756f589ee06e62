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

#ifndef EXTFORM_RATLP_LP_FORMAT_H_
#define EXTFORM_RATLP_LP_FORMAT_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "extform/ratlp/model.h"

namespace extform::ratlp {

// Deterministic text dump of a Model:
//
//   \ extform lp v1
//   minimize
//    obj: +1 x -3/2 y
//   subject to
//    r0: +1 x +1 y >= 1
//   bounds
//    0 <= x <= 1
//    -inf <= y <= +inf
//   end
//
// Every coefficient carries an explicit sign, rationals print as p/q, and
// the bounds section lists all variables in declaration order, which fixes
// the column order on reload. Names must not contain whitespace.
void WriteLp(const Model& model, std::ostream& out);
std::string WriteLp(const Model& model);

// Inverse of WriteLp. Throws Error(kParse) with a line number on bad input.
Model ReadLp(std::istream& in);
Model ReadLp(std::string_view text);

}  // namespace extform::ratlp

#endif  // EXTFORM_RATLP_LP_FORMAT_H_
