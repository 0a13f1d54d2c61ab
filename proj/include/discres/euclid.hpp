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

#ifndef DISCRES_EUCLID_HPP
#define DISCRES_EUCLID_HPP

#include <optional>
#include <span>

#include "discres/poly.hpp"

namespace discres {

// A polynomial with integer coefficients, integer content 1 and positive
// leading coefficient (or zero). Only the functions below construct one.
class NormalizedPoly {
 public:
  NormalizedPoly() = default;
  const Poly& value() const noexcept { return value_; }
  operator const Poly&() const noexcept { return value_; }  // NOLINT(google-explicit-constructor)
  bool is_one() const { return value_.constant_value() == Rational(1); }

 private:
  explicit NormalizedPoly(Poly p) : value_(std::move(p)) {}
  friend NormalizedPoly primitive_part(const Poly& p);
  friend NormalizedPoly normalized_one(const VarTable& vars);
  friend NormalizedPoly normalized_zero(const VarTable& vars);
  Poly value_;
};

NormalizedPoly normalized_one(const VarTable& vars);
NormalizedPoly normalized_zero(const VarTable& vars);

// Quotient r with q * r == p. Throws NotDivisible or DivisionByZero.
Poly exact_div(const Poly& p, const Poly& q);
std::optional<Poly> try_exact_div(const Poly& p, const Poly& q);
bool divides(const Poly& q, const Poly& p);

// Signed rational content: p == content(p) * primitive_part(p). The sign is
// that of the leading coefficient; content(0) is 0.
Rational content(const Poly& p);
// Throws ZeroPolynomial for p == 0.
NormalizedPoly primitive_part(const Poly& p);

// Normalized gcd. gcd(p, 0) = primitive_part(p), gcd(0, 0) = 0.
NormalizedPoly gcd(const Poly& p, const Poly& q);
NormalizedPoly gcd(std::span<const Poly> ps);

// Product of the distinct irreducible factors of positive degree, computed
// as p / gcd(p, dp/dx_1, ..., dp/dx_k). Constants map to 1; zero maps to 0.
NormalizedPoly sqrfree_part(const Poly& p);

// True when a == c * b for a nonzero rational c (stored into *ratio).
bool proportional(const Poly& a, const Poly& b, Rational* ratio = nullptr);

}  // namespace discres

#endif  // DISCRES_EUCLID_HPP
