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

#include "modular.hpp"

#include <mutex>

namespace discres::detail {

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 word_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= i) {
    Integer c = primes.empty() ? Integer(1) << 62 : Integer(static_cast<unsigned long>(primes.back()));
    // previous prime: step down over odd candidates
    c -= c % 2 == 0 ? 1 : 2;
    while (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0) c -= 2;
    primes.push_back(c.get_ui());
  }
  return primes[i];
}

u64 mod_of(const Integer& z, u64 p) {
  return static_cast<u64>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

u64 mod_of(const Rational& q, u64 p) {
  u64 n = mod_of(q.get_num(), p);
  if (q.get_den() == 1) return n;
  return mulmod(n, invmod(mod_of(q.get_den(), p), p), p);
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    u64 inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
      u64 f = mulmod(a.back(), inv, p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = submod(a[shift + i], mulmod(f, b[i], p), p);
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

}  // namespace discres::detail
