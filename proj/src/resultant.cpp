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

#include "discres/resultant.hpp"

#include "discres/deadline.hpp"
#include "discres/error.hpp"
#include "discres/euclid.hpp"
#include "upoly.hpp"

namespace discres {

namespace {

std::vector<Poly> coefficients_or_constant(const Poly& p, std::string_view v) {
  if (!p.vars().contains(v)) return {p};
  return coefficients(p, v);
}

}  // namespace

SylvesterMatrix sylvester(const Poly& p0, const Poly& q0, std::string_view v) {
  if (p0.is_zero() || q0.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "resultant of the zero polynomial");
  VarTable table = p0.vars().merged_with(q0.vars());
  Poly p = p0.over(table), q = q0.over(table);
  auto pc = coefficients_or_constant(p, v);
  auto qc = coefficients_or_constant(q, v);
  const std::size_t m = pc.size() - 1, n = qc.size() - 1;
  if (m == 0 && n == 0) {
    throw Error(ErrorCode::kBothConstantInV, "neither polynomial involves '" + std::string(v) + "'");
  }
  const std::size_t size = m + n;
  SylvesterMatrix s{Matrix<Poly>(size, size, Poly(table)), std::string(v)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) s.entries(i, i + k) = pc[m - k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s.entries(n + i, i + k) = qc[n - k];
  }
  return s;
}

Poly resultant(const Poly& p, const Poly& q, std::string_view v) {
  SylvesterMatrix s = sylvester(p, q, v);
  VarTable table = p.vars().merged_with(q.vars());
  return determinant(std::move(s.entries)).over(table);
}

Poly resultant_prs(const Poly& p0, const Poly& q0, std::string_view v) {
  if (p0.is_zero() || q0.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "resultant of the zero polynomial");
  VarTable table = p0.vars().merged_with(q0.vars());
  detail::UPoly A = coefficients_or_constant(p0.over(table), v);
  detail::UPoly B = coefficients_or_constant(q0.over(table), v);
  if (A.size() == 1 && B.size() == 1) {
    throw Error(ErrorCode::kBothConstantInV, "neither polynomial involves '" + std::string(v) + "'");
  }
  auto deg = [](const detail::UPoly& u) { return static_cast<long>(u.size()) - 1; };
  int s = 1;
  if (deg(A) < deg(B)) {
    std::swap(A, B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -1;
  }
  if (deg(B) == 0) return pow(B[0], static_cast<unsigned>(deg(A))) * Rational(s);
  Poly g(table, 1), h(table, 1);
  while (deg(B) > 0) {
    poll_deadline();
    long delta = deg(A) - deg(B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -s;
    detail::UPoly R = detail::pseudo_remainder(A, B);
    if (R.empty()) return Poly(table);
    A = std::move(B);
    Poly div = g * pow(h, static_cast<unsigned>(delta));
    for (auto& c : R) c = exact_div(c, div);
    B = std::move(R);
    g = A.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_div(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  // deg B == 0: h <- lc(B)^deg(A) / h^(deg(A) - 1)
  long da = deg(A);
  Poly t = pow(B[0], static_cast<unsigned>(da));
  if (da > 1) t = exact_div(t, pow(h, static_cast<unsigned>(da - 1)));
  return t * Rational(s);
}

Poly discriminant(const Poly& p, std::string_view v) {
  int l = degree(p, v);
  if (l < 1) throw Error(ErrorCode::kConstantInV, "discriminant of a polynomial constant in '" + std::string(v) + "'");
  Poly r = resultant(p, derivative(p, v), v);
  if ((static_cast<long>(l) * (l - 1) / 2) % 2 == 1) r = -r;
  auto d = try_exact_div(r, lc(p, v));
  if (!d) throw Error(ErrorCode::kNotDivisible, "internal fault: resultant not divisible by the leading coefficient");
  return std::move(*d);
}

}  // namespace discres
