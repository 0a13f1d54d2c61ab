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

#include "discres/euclid.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "discres/deadline.hpp"
#include "discres/error.hpp"
#include "modular.hpp"
#include "upoly.hpp"
#include "zpoly.hpp"

namespace discres {

namespace {

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return compare_grevlex(a, b) > 0; }
};

std::pair<Poly, Poly> common_table(const Poly& p, const Poly& q) {
  VarTable t = p.vars().merged_with(q.vars());
  return {p.over(t), q.over(t)};
}

Poly divide_by_monomial(const Poly& p, const Monomial& m) {
  std::vector<Poly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({quotient(t.mono, m), t.coeff});
  return Poly::from_terms(p.vars(), std::move(terms));
}

// Componentwise minimum exponent over all terms.
Monomial monomial_content(const Poly& p) {
  Monomial m = p.leading_term().mono;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] = std::min(m.exp[i], t.mono.exp[i]);
  }
  return Monomial(std::move(m.exp));
}

std::vector<std::size_t> support_indices(const Poly& p) {
  std::vector<bool> used(p.vars().size(), false);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.mono.exp.size(); ++i) {
      if (t.mono.exp[i]) used[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

// ---- Division ---------------------------------------------------------------

std::optional<Poly> try_exact_div(const Poly& p0, const Poly& q0) {
  if (q0.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  auto [p, q] = common_table(p0, q0);
  if (p.is_zero()) return p;
  if (auto c = q.constant_value()) return p * Rational(1 / *c);
  if (total_degree(p) < total_degree(q)) return std::nullopt;
  const auto& lq = q.leading_term();
  if (q.size() == 1) {
    std::vector<Poly::Term> terms;
    for (const auto& t : p.terms()) {
      if (!lq.mono.divides(t.mono)) return std::nullopt;
      terms.push_back({quotient(t.mono, lq.mono), t.coeff / lq.coeff});
    }
    return Poly::from_terms(p.vars(), std::move(terms));
  }
  // The trailing terms must divide as well.
  if (!q.terms().back().mono.divides(p.terms().back().mono)) return std::nullopt;
  std::map<Monomial, Rational, MonoGreater> rem;
  for (const auto& t : p.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  std::vector<Poly::Term> quot;
  Rational val;
  std::size_t steps = 0;
  while (!rem.empty()) {
    if ((++steps & 255u) == 0) poll_deadline();
    auto it = rem.begin();
    if (!lq.mono.divides(it->first)) return std::nullopt;
    Monomial tm = quotient(it->first, lq.mono);
    Rational tc = it->second / lq.coeff;
    rem.erase(it);
    for (std::size_t k = 1; k < q.size(); ++k) {
      const auto& s = q.terms()[k];
      mpq_mul(val.get_mpq_t(), tc.get_mpq_t(), s.coeff.get_mpq_t());
      auto [jt, fresh] = rem.try_emplace(s.mono * tm);
      if (fresh) {
        jt->second = -val;
      } else {
        jt->second -= val;
        if (sgn(jt->second) == 0) rem.erase(jt);
      }
    }
    quot.push_back({std::move(tm), std::move(tc)});
  }
  return Poly::from_terms(p.vars(), std::move(quot));
}

Poly exact_div(const Poly& p, const Poly& q) {
  auto r = try_exact_div(p, q);
  if (!r) throw Error(ErrorCode::kNotDivisible, "polynomial is not exactly divisible");
  return std::move(*r);
}

bool divides(const Poly& q, const Poly& p) { return try_exact_div(p, q).has_value(); }

// ---- Content ----------------------------------------------------------------

Rational content(const Poly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num = 0, den = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  if (sgn(p.leading_coeff()) < 0) c = -c;
  return c;
}

NormalizedPoly primitive_part(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "primitive part of the zero polynomial");
  Rational c = content(p);
  if (c == 1) return NormalizedPoly(p);
  return NormalizedPoly(p * Rational(1 / c));
}

NormalizedPoly normalized_one(const VarTable& vars) { return NormalizedPoly(Poly(vars, 1)); }
NormalizedPoly normalized_zero(const VarTable& vars) { return NormalizedPoly(Poly(vars)); }

// ---- GCD --------------------------------------------------------------------

namespace {

Poly gcd_impl(const Poly& a, const Poly& b);

// Probabilistic-looking but exact certificate that deg_v gcd(a, b) = 0 for
// every listed v: evaluate all other variables at a random point mod a word
// prime where lc_v(a) does not vanish. Then deg_v gcd(a, b) is bounded by
// the degree of the univariate gcd over F_p.
bool certify_coprime(const Poly& a, const Poly& b, const std::vector<std::size_t>& vars) {
  thread_local std::mt19937_64 rng(0x5eed);
  const std::size_t arity = a.vars().size();
  for (std::size_t v : vars) {
    bool certified = false;
    for (int attempt = 0; attempt < 2 && !certified; ++attempt) {
      const detail::u64 P = detail::word_prime(static_cast<std::size_t>(attempt));
      std::vector<detail::u64> point(arity);
      for (auto& x : point) x = rng() % P;
      auto reduce = [&](const Poly& p) {
        detail::ModPoly out;
        for (const auto& t : p.terms()) {
          detail::u64 c = detail::mod_of(t.coeff, P);
          for (std::size_t j = 0; j < arity && c != 0; ++j) {
            if (j == v || t.mono.exp[j] == 0) continue;
            c = detail::mulmod(c, detail::powmod(point[j], t.mono.exp[j], P), P);
          }
          std::uint32_t e = t.mono.exp[v];
          if (out.size() <= e) out.resize(e + 1, 0);
          out[e] = detail::addmod(out[e], c, P);
        }
        detail::trim(out);
        return out;
      };
      detail::ModPoly am = reduce(a);
      if (static_cast<int>(am.size()) - 1 != degree(a, a.vars().name(v))) continue;
      detail::ModPoly bm = reduce(b);
      detail::ModPoly g = detail::gcd(std::move(am), std::move(bm), P);
      if (g.size() == 1) {
        certified = true;
      } else {
        return false;
      }
    }
    if (!certified) return false;
  }
  return true;
}

Poly integer_primitive(const Poly& p) { return primitive_part(p).value(); }

// ---- Heuristic gcd ------------------------------------------------------------
//
// Char, Geddes and Gonnet's GCDHEU lifted to several variables: substitute a
// large integer xi for the main variable, take the gcd of the images
// recursively, rebuild a candidate from the balanced xi-adic digits of its
// coefficients and keep it only if it divides both inputs exactly.

Integer integer_content(const Poly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer coefficient_norm(const Poly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    if (mpz_cmpabs(t.coeff.get_num_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coeff.get_num());
  }
  return m;
}

Poly eval_integer(const Poly& p, std::size_t v, const Integer& xi) {
  std::vector<Integer> powers{Integer(1)};
  PolyBuilder b(p.vars());
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.exp[v];
    while (powers.size() <= e) powers.push_back(powers.back() * xi);
    Monomial m = t.mono;
    m.exp[v] = 0;
    m.degree -= e;
    b.add(std::move(m), Rational(t.coeff * powers[e]));
  }
  return std::move(b).build();
}

Poly xi_adic(const Poly& g, std::size_t v, const Integer& xi) {
  const Integer half = xi / 2;
  PolyBuilder b(g.vars());
  for (const auto& t : g.terms()) {
    Integer c = t.coeff.get_num();
    for (std::uint32_t i = 0; c != 0; ++i) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        Monomial m = t.mono;
        m.exp[v] += i;
        m.degree += i;
        b.add(std::move(m), Rational(r));
      }
      c = (c - r) / xi;
    }
  }
  return std::move(b).build();
}

// Full gcd over Z (integer content included) of nonzero integer polynomials
// over a common table, or nullopt when the heuristic gives up.
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b) {
  poll_deadline();
  const VarTable& table = a.vars();
  Integer ca = integer_content(a), cb = integer_content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly pa = a * Rational(1, ca), pb = b * Rational(1, cb);
  if (pa.is_constant() || pb.is_constant()) return Poly(table, Rational(c));
  auto sa = support_indices(pa), sb = support_indices(pb);
  std::vector<std::size_t> all;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all));
  if (all.size() == 1 && sa.size() == 1 && sb.size() == 1) {
    auto g = detail::gcd(detail::to_zpoly(pa, all[0]), detail::to_zpoly(pb, all[0]));
    return detail::from_zpoly(g, table, all[0]) * Rational(c);
  }
  const std::size_t v = all.back();
  Integer xi = 2 * std::min(coefficient_norm(pa), coefficient_norm(pb)) + 29;
  const int max_deg = std::max(degree(pa, table.name(v)), degree(pb, table.name(v)));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(max_deg + 1) > (std::size_t{1} << 22)) break;
    Poly ea = eval_integer(pa, v, xi), eb = eval_integer(pb, v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      auto gamma = heuristic_gcd(ea, eb);
      if (!gamma) return std::nullopt;
      Poly h = xi_adic(*gamma, v, xi);
      if (!h.is_zero()) {
        h = integer_primitive(h);
        if (try_exact_div(pa, h) && try_exact_div(pb, h)) return h * Rational(c);
      }
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return std::nullopt;
}

using detail::UPoly;
using detail::pseudo_remainder;

Poly content_of(const UPoly& cs, Poly seed) {
  std::vector<const Poly*> order;
  for (const auto& c : cs) {
    if (!c.is_zero()) order.push_back(&c);
  }
  std::sort(order.begin(), order.end(), [](const Poly* x, const Poly* y) { return x->size() < y->size(); });
  Poly g = std::move(seed);
  for (const Poly* c : order) {
    if (g.is_zero()) {
      g = integer_primitive(*c);
    } else {
      g = gcd_impl(g, integer_primitive(*c));
    }
    if (g.is_constant()) break;
  }
  return g;
}

Poly subresultant_gcd(const Poly& a, const Poly& b, const std::string& v) {
  UPoly A = coefficients(a, v), B = coefficients(b, v);
  if (A.size() < B.size()) std::swap(A, B);
  const VarTable& table = a.vars();
  Poly g(table, 1), h(table, 1);
  while (true) {
    std::size_t delta = A.size() - B.size();
    UPoly R = pseudo_remainder(A, B);
    if (R.empty()) break;
    if (R.size() == 1) return Poly(table, 1);
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
  Poly cont = content_of(B, Poly(table));
  Poly out = from_coefficients(B, v).over(table);
  return integer_primitive(exact_div(out, cont));
}

Poly gcd_core(const Poly& a, const Poly& b) {
  const VarTable& table = a.vars();
  if (a.is_constant() || b.is_constant()) return Poly(table, 1);
  if (a == b) return a;
  auto sa = support_indices(a), sb = support_indices(b);
  std::vector<std::size_t> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  if (common.empty()) return Poly(table, 1);
  if (sa.size() == 1 && sb.size() == 1) {
    return detail::from_zpoly(detail::gcd(detail::to_zpoly(a, sa[0]), detail::to_zpoly(b, sa[0])), table, sa[0]);
  }
  if (certify_coprime(a, b, common)) return Poly(table, 1);

  if (auto h = heuristic_gcd(a, b)) return integer_primitive(*h);

  std::size_t vi = std::max(sa.back(), sb.back());
  const std::string& v = table.name(vi);
  bool in_a = std::binary_search(sa.begin(), sa.end(), vi);
  bool in_b = std::binary_search(sb.begin(), sb.end(), vi);
  if (!in_b) return content_of(coefficients(a, v), b);
  if (!in_a) return content_of(coefficients(b, v), a);

  Poly ca = content_of(coefficients(a, v), Poly(table));
  Poly cb = content_of(coefficients(b, v), Poly(table));
  Poly c = gcd_impl(ca, cb);
  Poly pa = ca.is_constant() ? a : exact_div(a, ca);
  Poly pb = cb.is_constant() ? b : exact_div(b, cb);
  Poly g = subresultant_gcd(pa, pb, v);
  return integer_primitive(c * g);
}

// a, b: nonzero, integer primitive, common table.
Poly gcd_impl(const Poly& a, const Poly& b) {
  poll_deadline();
  if (a.is_constant() || b.is_constant()) return Poly(a.vars(), 1);
  Monomial ma = monomial_content(a), mb = monomial_content(b);
  Monomial m(ma.exp.size());
  for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] = std::min(ma.exp[i], mb.exp[i]);
  m = Monomial(std::move(m.exp));
  Poly a1 = ma.is_one() ? a : divide_by_monomial(a, ma);
  Poly b1 = mb.is_one() ? b : divide_by_monomial(b, mb);
  Poly g = gcd_core(a1, b1);
  return m.is_one() ? g : g.times_monomial(m);
}

}  // namespace

NormalizedPoly gcd(const Poly& p0, const Poly& q0) {
  auto [p, q] = common_table(p0, q0);
  if (p.is_zero() && q.is_zero()) return normalized_zero(p.vars());
  if (p.is_zero()) return primitive_part(q);
  if (q.is_zero()) return primitive_part(p);
  return primitive_part(gcd_impl(integer_primitive(p), integer_primitive(q)));
}

NormalizedPoly gcd(std::span<const Poly> ps) {
  if (ps.empty()) return normalized_zero(VarTable());
  NormalizedPoly g = gcd(ps[0], Poly(ps[0].vars()));
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (g.is_one()) break;
    g = gcd(g.value(), ps[i]);
  }
  return g;
}

NormalizedPoly sqrfree_part(const Poly& p) {
  if (p.is_zero()) return normalized_zero(p.vars());
  if (p.is_constant()) return normalized_one(p.vars());
  Poly a = integer_primitive(p);
  Monomial m = monomial_content(a);
  Poly rad_m(a.vars(), 1);
  if (!m.is_one()) {
    a = divide_by_monomial(a, m);
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i]) rad_m *= Poly::variable(a.vars(), a.vars().name(i));
    }
  }
  if (a.is_constant()) return primitive_part(rad_m);
  auto vars = support(a);
  Poly g = a;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    g = gcd(g, derivative(a, *it)).value();
    if (g.is_constant()) break;
  }
  Poly s = g.is_constant() ? a : exact_div(a, g);
  return primitive_part(s * rad_m);
}

bool proportional(const Poly& a0, const Poly& b0, Rational* ratio) {
  if (a0.is_zero() || b0.is_zero()) return false;
  if (a0.size() != b0.size()) return false;
  auto [a, b] = common_table(a0, b0);
  Rational c = a.leading_coeff() / b.leading_coeff();
  if (!(a == b * c)) return false;
  if (ratio) *ratio = c;
  return true;
}

}  // namespace discres
