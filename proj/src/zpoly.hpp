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

// Dense univariate polynomials over Z, used on the fast paths where a
// multivariate computation has collapsed to a single variable.

#ifndef DISCRES_SRC_ZPOLY_HPP
#define DISCRES_SRC_ZPOLY_HPP

#include <optional>
#include <vector>

#include "discres/poly.hpp"

namespace discres::detail {

// Little-endian coefficients, no trailing zeros; empty is zero.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& a);
inline int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }
Integer content(const ZPoly& a);
// Divides out the content and makes the leading coefficient positive.
ZPoly primitive(ZPoly a);
Integer max_norm(const ZPoly& a);
Integer eval(const ZPoly& a, const Integer& x);
// Quotient when b divides a over Z, nullopt otherwise.
std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b);
// Primitive gcd with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Conversion for polynomials in a single variable (index `var`) with
// integer coefficients.
ZPoly to_zpoly(const Poly& p, std::size_t var);
Poly from_zpoly(const ZPoly& a, const VarTable& table, std::size_t var);

}  // namespace discres::detail

#endif  // DISCRES_SRC_ZPOLY_HPP
