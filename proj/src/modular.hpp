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

// Word-size prime field helpers shared by the gcd pre-check and the
// multi-modular determinant.

#ifndef DISCRES_SRC_MODULAR_HPP
#define DISCRES_SRC_MODULAR_HPP

#include <cstdint>
#include <vector>

#include "discres/poly.hpp"

namespace discres::detail {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);

// The i-th prime below 2^62 (descending); grown lazily and thread-safe.
u64 word_prime(std::size_t i);

u64 mod_of(const Integer& z, u64 p);
// Numerator times inverse denominator; the denominator must be a unit mod p.
u64 mod_of(const Rational& q, u64 p);

// Dense univariate polynomials over F_p, little-endian, trimmed.
using ModPoly = std::vector<u64>;
void trim(ModPoly& a);
ModPoly gcd(ModPoly a, ModPoly b, u64 p);

}  // namespace discres::detail

#endif  // DISCRES_SRC_MODULAR_HPP
