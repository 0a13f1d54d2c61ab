/*
   Copyright 2026 The discres Authors

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

// Polynomials in one distinguished variable with multivariate coefficients,
// shared by the subresultant gcd and the subresultant resultant.

#ifndef DISCRES_SRC_UPOLY_HPP
#define DISCRES_SRC_UPOLY_HPP

#include <vector>

#include "discres/poly.hpp"

namespace discres::detail {

// result[i] multiplies v^i; no trailing zero coefficients.
using UPoly = std::vector<Poly>;

void trim(UPoly& a);
// lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(UPoly a, const UPoly& b);

}  // namespace discres::detail

#endif  // DISCRES_SRC_UPOLY_HPP
