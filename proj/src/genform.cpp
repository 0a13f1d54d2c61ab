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

#include "discres/genform.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "discres/deadline.hpp"
#include "discres/error.hpp"
#include "discres/matrix.hpp"

namespace discres {

namespace {

std::vector<std::string> default_xvars(int n) {
  if (n == 3) return {"x", "y", "z"};
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

// All exponent vectors of length n and sum d, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b) > 0; });
  return out;
}

std::string param_name(const std::vector<std::uint32_t>& alpha) {
  bool wide = std::any_of(alpha.begin(), alpha.end(), [](std::uint32_t a) { return a > 9; });
  std::string s = "C_";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (wide && i) s += '_';
    s += std::to_string(alpha[i]);
  }
  return s;
}

}  // namespace

const std::string& GenericForm::param(const std::vector<std::uint32_t>& alpha) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == alpha) return params[i];
  }
  throw Error(ErrorCode::kInvalidArgument, "no parameter for the given exponent");
}

const std::string& GenericForm::pure_power_param(std::size_t i) const {
  std::vector<std::uint32_t> alpha(static_cast<std::size_t>(n), 0);
  alpha.at(i) = static_cast<std::uint32_t>(d);
  return param(alpha);
}

GenericForm generic_form(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorCode::kInvalidDimension, "generic form needs n >= 1 and d >= 1");
  GenericForm g;
  g.n = n;
  g.d = d;
  g.xvars = default_xvars(n);
  for (auto& m : monomials_of_degree(static_cast<std::size_t>(n), static_cast<std::uint32_t>(d))) {
    g.params.push_back(param_name(m.exp));
    g.exponents.push_back(std::move(m.exp));
  }
  std::vector<std::string> names = g.xvars;
  names.insert(names.end(), g.params.begin(), g.params.end());
  VarTable table(names);
  PolyBuilder b(table);
  for (std::size_t k = 0; k < g.params.size(); ++k) {
    std::vector<std::uint32_t> e(names.size(), 0);
    std::copy(g.exponents[k].begin(), g.exponents[k].end(), e.begin());
    e[static_cast<std::size_t>(n) + k] = 1;
    b.add(Monomial(std::move(e)), Rational(1));
  }
  g.body = std::move(b).build();
  return g;
}

// ---- Macaulay systems ---------------------------------------------------------

MacaulaySystem MacaulaySystem::make(std::vector<Poly> forms, std::vector<std::string> xvars, std::vector<int> degrees) {
  if (forms.size() != xvars.size() || forms.empty()) {
    throw Error(ErrorCode::kInvalidDimension, "a Macaulay system needs as many forms as variables");
  }
  if (std::set<std::string>(xvars.begin(), xvars.end()).size() != xvars.size()) {
    throw Error(ErrorCode::kInvalidArgument, "repeated variable in Macaulay system");
  }
  if (!degrees.empty() && degrees.size() != forms.size()) {
    throw Error(ErrorCode::kInvalidDimension, "degree list length differs from form count");
  }
  degrees.resize(forms.size(), -1);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    int deg = 0;
    if (forms[i].is_zero()) {
      if (degrees[i] < 0) throw Error(ErrorCode::kInvalidArgument, "zero form needs an explicit degree");
    } else {
      if (!is_homogeneous_in(forms[i], xvars, &deg)) {
        throw Error(ErrorCode::kInhomogeneousInput, "form " + std::to_string(i + 1) + " is not homogeneous");
      }
      if (degrees[i] >= 0 && degrees[i] != deg) {
        throw Error(ErrorCode::kInhomogeneousInput, "form " + std::to_string(i + 1) + " has the wrong degree");
      }
      degrees[i] = deg;
    }
    if (degrees[i] < 1) throw Error(ErrorCode::kInvalidDimension, "Macaulay forms must have positive degree");
  }
  MacaulaySystem s;
  s.forms = std::move(forms);
  s.xvars = std::move(xvars);
  s.degrees = std::move(degrees);
  return s;
}

int MacaulaySystem::critical_degree() const {
  int nu = 1;
  for (int d : degrees) nu += d - 1;
  return nu;
}

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool non_reduced(const Monomial& m, const std::vector<int>& degrees) {
  int hits = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (m.exp[i] >= static_cast<std::uint32_t>(degrees[i])) ++hits;
  }
  return hits >= 2;
}

}  // namespace

std::size_t MacaulaySystem::dimension() const {
  const auto n = xvars.size();
  return binomial(static_cast<unsigned long>(critical_degree()) + n - 1, n - 1).get_ui();
}

std::size_t MacaulaySystem::minor_dimension() const {
  std::size_t k = 0;
  for (const auto& m : monomials_of_degree(xvars.size(), static_cast<std::uint32_t>(critical_degree()))) {
    if (non_reduced(m, degrees)) ++k;
  }
  return k;
}

std::vector<std::string> MacaulaySystem::parameters() const {
  std::set<std::string> xs(xvars.begin(), xvars.end());
  std::set<std::string> found;
  for (const auto& f : forms) {
    for (std::size_t v = 0; v < f.vars().size(); ++v) {
      const auto& name = f.vars().name(v);
      if (xs.count(name)) continue;
      for (const auto& t : f.terms()) {
        if (t.mono.exp[v]) {
          found.insert(name);
          break;
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

bool exact_mode_feasible(const MacaulaySystem& sys) {
  const std::size_t params = sys.parameters().size();
  const std::size_t dim = sys.dimension();
  if (params == 0) return true;
  if (params <= 2) return dim <= 400;
  return params <= 8 && dim <= 20;
}

namespace {

// Splits each form into (x-exponent, coefficient) pairs.
template <class T>
using Decomposed = std::vector<std::vector<std::pair<Monomial, T>>>;

Decomposed<Poly> decompose_symbolic(const MacaulaySystem& sys) {
  Decomposed<Poly> out;
  for (const auto& f : sys.forms) {
    VarTable t = f.vars();
    std::vector<std::optional<std::size_t>> xi;
    for (const auto& x : sys.xvars) xi.push_back(t.index_of(x));
    std::map<std::vector<std::uint32_t>, PolyBuilder> groups;
    for (const auto& term : f.terms()) {
      std::vector<std::uint32_t> xe(sys.xvars.size(), 0);
      Monomial rest = term.mono;
      for (std::size_t k = 0; k < xi.size(); ++k) {
        if (!xi[k]) continue;
        xe[k] = rest.exp[*xi[k]];
        rest.degree -= rest.exp[*xi[k]];
        rest.exp[*xi[k]] = 0;
      }
      groups.try_emplace(xe, t).first->second.add(std::move(rest), Rational(term.coeff));
    }
    std::vector<std::pair<Monomial, Poly>> parts;
    for (auto& [xe, b] : groups) parts.emplace_back(Monomial(xe), std::move(b).build());
    out.push_back(std::move(parts));
  }
  return out;
}

Decomposed<Rational> decompose_specialized(const MacaulaySystem& sys) {
  Decomposed<Rational> out;
  for (const auto& f : sys.forms) {
    VarTable t = f.vars();
    std::vector<std::optional<std::size_t>> xi;
    for (const auto& x : sys.xvars) xi.push_back(t.index_of(x));
    std::map<std::vector<std::uint32_t>, Rational> groups;
    for (const auto& term : f.terms()) {
      std::vector<std::uint32_t> xe(sys.xvars.size(), 0);
      std::uint32_t xdeg = 0;
      for (std::size_t k = 0; k < xi.size(); ++k) {
        if (!xi[k]) continue;
        xe[k] = term.mono.exp[*xi[k]];
        xdeg += xe[k];
      }
      if (xdeg != term.mono.degree) throw Error(ErrorCode::kInvalidArgument, "specialized mode: unbound parameter");
      groups[xe] += term.coeff;
    }
    std::vector<std::pair<Monomial, Rational>> parts;
    for (auto& [xe, c] : groups) {
      if (sgn(c) != 0) parts.emplace_back(Monomial(xe), c);
    }
    out.push_back(std::move(parts));
  }
  return out;
}

template <class T>
struct MacaulayMatrices {
  Matrix<T> full;
  Matrix<T> minor;
};

template <class T>
MacaulayMatrices<T> build_matrices(const MacaulaySystem& sys, const Decomposed<T>& parts, const T& zero) {
  const std::size_t n = sys.xvars.size();
  const auto monos = monomials_of_degree(n, static_cast<std::uint32_t>(sys.critical_degree()));
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
  MacaulayMatrices<T> out{Matrix<T>(monos.size(), monos.size(), zero), {}};
  std::vector<std::size_t> minor_idx;
  for (std::size_t r = 0; r < monos.size(); ++r) {
    poll_deadline();
    const Monomial& m = monos[r];
    std::size_t i = 0;
    while (m.exp[i] < static_cast<std::uint32_t>(sys.degrees[i])) ++i;
    Monomial shift = m;
    shift.exp[i] -= static_cast<std::uint32_t>(sys.degrees[i]);
    shift.degree -= static_cast<std::uint32_t>(sys.degrees[i]);
    for (const auto& [xe, c] : parts[i]) out.full(r, index.at(shift * xe)) = c;
    if (non_reduced(m, sys.degrees)) minor_idx.push_back(r);
  }
  out.minor = Matrix<T>(minor_idx.size(), minor_idx.size(), zero);
  for (std::size_t a = 0; a < minor_idx.size(); ++a)
    for (std::size_t b = 0; b < minor_idx.size(); ++b) out.minor(a, b) = out.full(minor_idx[a], minor_idx[b]);
  return out;
}

// Random integer matrix with entries in [-3, 3] and determinant +-1.
Matrix<Rational> random_unimodular(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-3, 3);
  while (true) {
    Matrix<Rational> a(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = e(rng);
    Rational det = determinant(a);
    if (det == 1 || det == -1) return a;
  }
}

// F(A x), and the sign det(A)^(prod d_i).
std::pair<MacaulaySystem, int> change_coordinates(const MacaulaySystem& sys, std::mt19937_64& rng) {
  const std::size_t n = sys.xvars.size();
  Matrix<Rational> a = random_unimodular(n, rng);
  VarTable xt(sys.xvars);
  std::map<std::string, Poly> bind;
  for (std::size_t i = 0; i < n; ++i) {
    Poly img(xt);
    for (std::size_t j = 0; j < n; ++j) img += Poly::variable(xt, sys.xvars[j]) * a(i, j);
    bind.emplace(sys.xvars[i], std::move(img));
  }
  MacaulaySystem out = sys;
  for (auto& f : out.forms) {
    for (const auto& x : sys.xvars) {
      if (!f.vars().contains(x)) f = f.over(f.vars().with_appended(x));
    }
    f = substitute(f, bind);
  }
  int sign = 1;
  if (determinant(a) == -1) {
    bool odd = true;
    for (int d : sys.degrees) odd = odd && (d % 2 == 1);
    sign = odd ? -1 : 1;
  }
  return {std::move(out), sign};
}

template <class Solve>
auto with_retries(const MacaulaySystem& sys, const MacaulayOptions& options, Solve&& solve) {
  std::mt19937_64 rng(options.seed ^ 0x6d61636175ull);
  MacaulaySystem current = sys;
  int sign = 1;
  for (int attempt = 0;; ++attempt) {
    auto r = solve(current);
    if (r) return std::decay_t<decltype(*r)>(*r * Rational(sign));
    if (attempt >= options.max_retries) {
      throw Error(ErrorCode::kDegenerateMinor, "Macaulay minor vanishes after " + std::to_string(attempt) +
                                                   " coordinate changes");
    }
    auto [next, s] = change_coordinates(sys, rng);
    current = std::move(next);
    sign = s;
  }
}

}  // namespace

Poly macaulay_resultant(const MacaulaySystem& sys, const MacaulayOptions& options) {
  if (!options.allow_large && !exact_mode_feasible(sys)) {
    throw Error(ErrorCode::kInfeasibleSize, "exact Macaulay resultant too large (dimension " +
                                                std::to_string(sys.dimension()) + ", " +
                                                std::to_string(sys.parameters().size()) + " parameters)");
  }
  VarTable table;
  for (const auto& f : sys.forms) table = table.merged_with(f.vars());
  return with_retries(sys, options, [&](const MacaulaySystem& s) -> std::optional<Poly> {
    auto m = build_matrices(s, decompose_symbolic(s), Poly(table));
    Poly minor = m.minor.rows() ? determinant(m.minor) : Poly(table, 1);
    if (minor.is_zero()) return std::nullopt;
    Poly full = determinant(m.full);
    return exact_div(full, minor).over(full.vars().merged_with(table));
  });
}

Rational macaulay_resultant(const MacaulaySystem& sys, const Point& point, const MacaulayOptions& options) {
  MacaulaySystem bound = sys;
  for (auto& f : bound.forms) {
    Point local;
    for (const auto& [name, value] : point) {
      if (f.vars().contains(name)) local.emplace(name, value);
    }
    f = substitute(f, local);
  }
  return with_retries(bound, options, [&](const MacaulaySystem& s) -> std::optional<Rational> {
    auto m = build_matrices(s, decompose_specialized(s), Rational(0));
    Rational minor = m.minor.rows() ? determinant(m.minor) : Rational(1);
    if (sgn(minor) == 0) return std::nullopt;
    return Rational(determinant(m.full) / minor);
  });
}

// ---- Discriminant ------------------------------------------------------------------

MacaulaySystem gradient_system(const Poly& f, const std::vector<std::string>& xvars) {
  int d = 0;
  if (f.is_zero() || !is_homogeneous_in(f, xvars, &d)) {
    throw Error(ErrorCode::kInhomogeneousInput, "discriminant needs a nonzero form");
  }
  Poly g = f;
  for (const auto& x : xvars) {
    if (!g.vars().contains(x)) g = g.over(g.vars().with_appended(x));
  }
  std::vector<Poly> grads;
  for (const auto& x : xvars) grads.push_back(derivative(g, x));
  return MacaulaySystem::make(std::move(grads), xvars, std::vector<int>(xvars.size(), d - 1));
}

namespace {

int form_degree(const Poly& f, const std::vector<std::string>& xvars) {
  int d = 0;
  if (f.is_zero() || !is_homogeneous_in(f, xvars, &d)) {
    throw Error(ErrorCode::kInhomogeneousInput, "expected a nonzero form");
  }
  return d;
}

}  // namespace

NormalizedPoly multi_discriminant(const Poly& f, const std::vector<std::string>& xvars,
                                  const MacaulayOptions& options) {
  if (form_degree(f, xvars) == 1) return normalized_one(f.vars());
  Poly r = macaulay_resultant(gradient_system(f, xvars), options);
  if (r.is_zero()) return normalized_zero(f.vars());
  return primitive_part(r);
}

NormalizedPoly multi_discriminant(const GenericForm& f, const MacaulayOptions& options) {
  return multi_discriminant(f.body, f.xvars, options);
}

Rational multi_discriminant_at(const Poly& f, const std::vector<std::string>& xvars, const Point& point,
                               const MacaulayOptions& options) {
  if (form_degree(f, xvars) == 1) return Rational(1);
  return macaulay_resultant(gradient_system(f, xvars), point, options);
}

// ---- Taylor remainder --------------------------------------------------------------

Poly taylor_delta(const Poly& F, int i, const std::string& v, const std::string& v_prime) {
  if (i < 0) throw Error(ErrorCode::kInvalidArgument, "taylor_delta order must be nonnegative");
  if (!F.vars().contains(v)) throw Error(ErrorCode::kUnknownVariable, "unknown variable '" + v + "'");
  if (!is_identifier(v_prime)) throw Error(ErrorCode::kInvalidArgument, "'" + v_prime + "' is not an identifier");
  VarTable t = F.vars().with_appended(v_prime);
  Poly D = F.over(t);
  Poly step = Poly::variable(t, v_prime) - Poly::variable(t, v);
  Poly acc(t);
  Integer fact = 1;
  for (int k = 0; !D.is_zero(); ++k) {
    if (k > 0) fact *= k;
    if (k >= i) acc += pow(step, static_cast<unsigned>(k - i)) * D * Rational(1, fact);
    D = derivative(D, v);
  }
  return acc;
}

// ---- Busé factors --------------------------------------------------------------------

namespace {

void check_buse_input(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair, int* d) {
  if (xvars.size() != 3) throw Error(ErrorCode::kInvalidDimension, "Busé factors need a ternary form");
  if (std::find(xvars.begin(), xvars.end(), pair.u) == xvars.end() ||
      std::find(xvars.begin(), xvars.end(), pair.w) == xvars.end() || pair.u == pair.w) {
    throw Error(ErrorCode::kInvalidArgument, "pair must name two distinct form variables");
  }
  *d = form_degree(f, xvars);
  if (*d < 3) throw Error(ErrorCode::kInvalidDimension, "Busé factors need degree >= 3");
}

Poly with_xvars(Poly f, const std::vector<std::string>& xvars) {
  for (const auto& x : xvars) {
    if (!f.vars().contains(x)) f = f.over(f.vars().with_appended(x));
  }
  return f;
}

// Coefficient of u^d.
Poly pure_power_coefficient(const Poly& f, const std::string& u, int d) {
  if (degree(f, u) != d) return Poly(f.vars());
  return lc(f, u);
}

std::string fresh_name(const VarTable& t, const std::string& base) {
  std::string s = base + "p";
  while (t.contains(s)) s += "p";
  return s;
}

Integer two_pow(int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

Rational rational_pow(const Rational& x, int e) {
  Rational r = 1;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

Rational evaluate_at(const Poly& p, const Point& point) {
  Point local;
  for (const auto& [name, value] : point) {
    if (p.vars().contains(name)) local.emplace(name, value);
  }
  return evaluate(p, local);
}

}  // namespace

MacaulaySystem buse_a_system(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair) {
  int d = 0;
  check_buse_input(f, xvars, pair, &d);
  Poly g = with_xvars(f, xvars);
  Poly fu = derivative(g, pair.u);
  Poly fuu = derivative(fu, pair.u);
  return MacaulaySystem::make({g, fu, fuu}, xvars, {d, d - 1, d - 2});
}

MacaulaySystem buse_b_system(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair) {
  int d = 0;
  check_buse_input(f, xvars, pair, &d);
  if (d < 4) throw Error(ErrorCode::kInvalidDimension, "the b system needs degree >= 4");
  Poly g = with_xvars(f, xvars);
  const std::string up = fresh_name(g.vars(), pair.u);
  Poly fu = derivative(g, pair.u);
  Poly d2f = taylor_delta(g, 2, pair.u, up);
  Poly d2fu = taylor_delta(fu, 2, pair.u, up);
  Poly d3f = taylor_delta(g, 3, pair.u, up);
  std::vector<std::string> vars4 = xvars;
  vars4.push_back(up);
  Poly last = d2fu - d3f * Rational(2);
  return MacaulaySystem::make({g, fu, d2f, last}, vars4, {d, d - 1, d - 2, d - 3});
}

Poly buse_a_factor(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair,
                   const MacaulayOptions& options) {
  MacaulaySystem sys = buse_a_system(f, xvars, pair);
  const int d = sys.degrees[0];
  Poly C = pure_power_coefficient(f, pair.u, d);
  if (C.is_zero()) throw Error(ErrorCode::kDivisionByZero, "coefficient of " + pair.u + "^d vanishes");
  Poly res = macaulay_resultant(sys, options);
  return exact_div(res, C * C * Rational(two_pow(d * (d - 1))));
}

Rational buse_a_factor(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair, const Point& point,
                       const MacaulayOptions& options) {
  MacaulaySystem sys = buse_a_system(f, xvars, pair);
  const int d = sys.degrees[0];
  Rational C = evaluate_at(pure_power_coefficient(f, pair.u, d), point);
  if (sgn(C) == 0) throw Error(ErrorCode::kDegenerateTrial, "coefficient of " + pair.u + "^d vanishes at the point");
  Rational res = macaulay_resultant(sys, point, options);
  return Rational(res / (C * C * two_pow(d * (d - 1))));
}

Poly buse_b_squared(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair,
                    const MacaulayOptions& options) {
  int d = 0;
  check_buse_input(f, xvars, pair, &d);
  if (d == 3) return Poly(f.vars(), 1);
  MacaulaySystem sys = buse_b_system(f, xvars, pair);
  Poly C = pure_power_coefficient(f, pair.u, d);
  if (C.is_zero()) throw Error(ErrorCode::kDivisionByZero, "coefficient of " + pair.u + "^d vanishes");
  Poly res = macaulay_resultant(sys, options);
  return exact_div(res, pow(C, static_cast<unsigned>(2 * d * (d - 1) - 6))).over(f.vars());
}

Rational buse_b_squared(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair, const Point& point,
                        const MacaulayOptions& options) {
  int d = 0;
  check_buse_input(f, xvars, pair, &d);
  if (d == 3) return Rational(1);
  MacaulaySystem sys = buse_b_system(f, xvars, pair);
  Rational C = evaluate_at(pure_power_coefficient(f, pair.u, d), point);
  if (sgn(C) == 0) throw Error(ErrorCode::kDegenerateTrial, "coefficient of " + pair.u + "^d vanishes at the point");
  Rational res = macaulay_resultant(sys, point, options);
  return Rational(res / rational_pow(C, 2 * d * (d - 1) - 6));
}

Rational buse_b_factor(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair, const Point& point,
                       const MacaulayOptions& options) {
  Rational sq = buse_b_squared(f, xvars, pair, point, options);
  if (sgn(sq) < 0 || !mpz_perfect_square_p(sq.get_num_mpz_t()) || !mpz_perfect_square_p(sq.get_den_mpz_t())) {
    throw Error(ErrorCode::kNotASquare, "b^2 = " + to_string(sq) + " is not a rational square");
  }
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), sq.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), sq.get_den_mpz_t());
  return Rational(num, den);
}

BuseFactors buse_factors(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair,
                         const MacaulayOptions& options) {
  return {buse_a_factor(f, xvars, pair, options), buse_b_squared(f, xvars, pair, options), pair.tag()};
}

Poly buse_witness(int d) {
  if (d < 2) throw Error(ErrorCode::kInvalidDimension, "witness polynomial needs d >= 2");
  VarTable t{"x", "y", "z", "w"};
  Poly x = Poly::variable(t, "x"), y = Poly::variable(t, "y"), z = Poly::variable(t, "z"), w = Poly::variable(t, "w");
  const auto e = static_cast<unsigned>(d);
  return pow(z, e) + w * z * pow(x, e - 1) + pow(y, e);
}

Poly remark_polynomial() { return parse("x*y + y^2 + x*z + y*z + k*z^2", VarTable{"x", "y", "z", "k"}); }

}  // namespace discres
