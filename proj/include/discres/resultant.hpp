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

#ifndef DISCRES_RESULTANT_HPP
#define DISCRES_RESULTANT_HPP

#include <string>
#include <string_view>

#include "discres/matrix.hpp"
#include "discres/poly.hpp"

namespace discres {

// Sylvester matrix of p and q with respect to `variable`: deg(q) rows of
// shifted p-coefficients above deg(p) rows of shifted q-coefficients,
// leading coefficients first.
struct SylvesterMatrix {
  Matrix<Poly> entries;
  std::string variable;
};

// Throws ZeroPolynomial if p or q is zero, BothConstantInV if neither
// involves v.
SylvesterMatrix sylvester(const Poly& p, const Poly& q, std::string_view v);

// Determinant of the Sylvester matrix. No case analysis is done on leading
// coefficients that might vanish under specialization.
Poly resultant(const Poly& p, const Poly& q, std::string_view v);

// Same value through the subresultant polynomial remainder sequence.
Poly resultant_prs(const Poly& p, const Poly& q, std::string_view v);

// lc(p,v) * disc == (-1)^(l(l-1)/2) * Res(p, dp/dv, v), l = deg(p, v) >= 1.
Poly discriminant(const Poly& p, std::string_view v);

}  // namespace discres

#endif  // DISCRES_RESULTANT_HPP
