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

#include "zpoly.hpp"

#include "discres/deadline.hpp"
#include "discres/error.hpp"

namespace discres::detail {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(ZPoly a) {
  trim(a);
  if (a.empty()) return a;
  Integer g = content(a);
  if (sgn(a.back()) < 0) g = -g;
  if (g != 1) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return a;
}

Integer max_norm(const ZPoly& a) {
  Integer m = 0;
  for (const auto& c : a) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

Integer eval(const ZPoly& a, const Integer& x) {
  Integer r = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    r *= x;
    r += a[i];
  }
  return r;
}

std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1);
  const Integer& lb = b.back();
  Integer t;
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t i = 0; i < b.size(); ++i) {
      t = q[k] * b[i];
      r[k + i] -= t;
    }
  }
  for (std::size_t i = 0; i + 1 < b.size() && i < r.size(); ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

namespace {

// Pseudo-remainder based primitive PRS; slow but unconditional.
ZPoly gcd_prs(ZPoly a, ZPoly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    poll_deadline();
    ZPoly r = a;
    const Integer lb = b.back();
    while (r.size() >= b.size()) {
      Integer top = r.back();
      std::size_t shift = r.size() - b.size();
      for (auto& c : r) c *= lb;
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= top * b[i];
      trim(r);
      r = primitive(std::move(r));
    }
    a = std::move(b);
    b = primitive(std::move(r));
  }
  return primitive(std::move(a));
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
// the polynomial gcd off its balanced xi-adic expansion. A candidate that
// divides both inputs is the gcd once xi exceeds twice the smaller norm.
std::optional<ZPoly> gcd_heuristic(const ZPoly& a, const ZPoly& b) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    poll_deadline();
    Integer ga = eval(a, xi);
    Integer gb = eval(b, xi);
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    ZPoly cand;
    Integer half = xi / 2;
    while (gamma != 0) {
      Integer c;
      mpz_fdiv_r(c.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      if (c > half) c -= xi;
      cand.push_back(c);
      gamma -= c;
      mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
    }
    cand = primitive(std::move(cand));
    if (!cand.empty() && exact_quotient(a, cand) && exact_quotient(b, cand)) return cand;
    // xi <- floor(xi * 73794 / 27011), an irrational-ish growth factor
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  ZPoly pa = primitive(a), pb = primitive(b);
  if (pa.size() == 1 || pb.size() == 1) return ZPoly{Integer(1)};
  if (auto g = gcd_heuristic(pa, pb)) return *g;
  return gcd_prs(std::move(pa), std::move(pb));
}

ZPoly to_zpoly(const Poly& p, std::size_t var) {
  ZPoly out;
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.exp[var];
    if (t.mono.degree != e || t.coeff.get_den() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "to_zpoly: not an integer univariate polynomial");
    }
    if (out.size() <= e) out.resize(e + 1);
    out[e] = t.coeff.get_num();
  }
  return out;
}

Poly from_zpoly(const ZPoly& a, const VarTable& table, std::size_t var) {
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Monomial m(table.size());
    m.exp[var] = static_cast<std::uint32_t>(i);
    m.degree = static_cast<std::uint32_t>(i);
    terms.push_back({std::move(m), Rational(a[i])});
  }
  return Poly::from_terms(table, std::move(terms));
}

}  // namespace discres::detail
