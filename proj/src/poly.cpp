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

#include "discres/poly.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "discres/error.hpp"

namespace discres {

// ---- VarTable ---------------------------------------------------------------

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

VarTable::VarTable() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarTable::VarTable(std::vector<std::string> names) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw Error(ErrorCode::kInvalidArgument, "invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorCode::kInvalidArgument, "duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarTable::VarTable(std::initializer_list<std::string> names) : VarTable(std::vector<std::string>(names)) {}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const noexcept {
  const auto& v = *names_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == name) return i;
  }
  return std::nullopt;
}

VarTable VarTable::merged_with(const VarTable& other) const {
  if (*this == other) return *this;
  std::vector<std::string> out = names();
  bool grew = false;
  for (const auto& n : other.names()) {
    if (!contains(n)) {
      out.push_back(n);
      grew = true;
    }
  }
  if (!grew) return *this;
  return VarTable(std::move(out));
}

VarTable VarTable::with_appended(std::string_view name) const {
  if (contains(name)) throw Error(ErrorCode::kVariableCollision, "variable '" + std::string(name) + "' already present");
  std::vector<std::string> out = names();
  out.emplace_back(name);
  return VarTable(std::move(out));
}

// ---- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::vector<std::uint32_t> e) : exp(std::move(e)) {
  for (auto x : exp) degree += x;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exp.resize(a.exp.size());
  for (std::size_t i = 0; i < a.exp.size(); ++i) r.exp[i] = a.exp[i] + b.exp[i];
  r.degree = a.degree + b.degree;
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  r.exp.resize(b.exp.size());
  for (std::size_t i = 0; i < b.exp.size(); ++i) r.exp[i] = b.exp[i] - a.exp[i];
  r.degree = b.degree - a.degree;
  return r;
}

int compare_grevlex(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (std::size_t i = a.exp.size(); i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : m.exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---- Poly -------------------------------------------------------------------

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return compare_grevlex(a.mono, b.mono) > 0; }

void normalize_terms(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      c += terms[j].coeff;
      ++j;
    }
    if (sgn(c) != 0) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Brings p and q onto a common table.
std::pair<Poly, Poly> aligned(const Poly& p, const Poly& q) {
  VarTable t = p.vars().merged_with(q.vars());
  return {p.over(t), q.over(t)};
}

}  // namespace

Poly::Poly(VarTable vars, const Rational& c) : vars_(std::move(vars)) {
  if (sgn(c) != 0) {
    terms_.push_back({Monomial(vars_.size()), c});
    terms_.back().coeff.canonicalize();
  }
}

Poly Poly::variable(VarTable vars, std::string_view name) {
  auto idx = vars.index_of(name);
  if (!idx) throw Error(ErrorCode::kUnknownVariable, "unknown variable '" + std::string(name) + "'");
  Monomial m(vars.size());
  m.exp[*idx] = 1;
  m.degree = 1;
  Poly p(std::move(vars));
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Poly Poly::from_terms(VarTable vars, std::vector<Term> terms) {
  for (auto& t : terms) {
    t.coeff.canonicalize();
    if (t.mono.exp.size() != vars.size()) {
      throw Error(ErrorCode::kIncompatibleVariables, "monomial arity does not match the variable table");
    }
  }
  normalize_terms(terms);
  Poly p(std::move(vars));
  p.terms_ = std::move(terms);
  return p;
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

Poly Poly::over(const VarTable& table) const {
  if (vars_ == table) {
    Poly r = *this;
    r.vars_ = table;
    return r;
  }
  std::vector<std::optional<std::size_t>> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = table.index_of(vars_.name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(table.size());
    for (std::size_t i = 0; i < t.mono.exp.size(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (!map[i]) {
        throw Error(ErrorCode::kIncompatibleVariables,
                    "variable '" + vars_.name(i) + "' is not in the target table");
      }
      m.exp[*map[i]] = t.mono.exp[i];
    }
    m.degree = t.mono.degree;
    out.push_back({std::move(m), t.coeff});
  }
  std::sort(out.begin(), out.end(), term_greater);
  Poly r(table);
  r.terms_ = std::move(out);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merges two sorted term lists; `sign` is +1 or -1 for q.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, int sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare_grevlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& q) {
  if (q.is_zero()) return *this;
  if (!(vars_ == q.vars_)) {
    auto [a, b] = aligned(*this, q);
    *this = std::move(a);
    terms_ = merge_terms(terms_, b.terms_, 1);
    return *this;
  }
  terms_ = merge_terms(terms_, q.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  if (q.is_zero()) return *this;
  if (!(vars_ == q.vars_)) {
    auto [a, b] = aligned(*this, q);
    *this = std::move(a);
    terms_ = merge_terms(terms_, b.terms_, -1);
    return *this;
  }
  terms_ = merge_terms(terms_, q.terms_, -1);
  return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (!(p.vars_ == q.vars_)) {
    auto [a, b] = aligned(p, q);
    return a * b;
  }
  Poly r(p.vars_);
  if (p.is_zero() || q.is_zero()) return r;
  if (p.size() == 1 && p.terms_[0].mono.is_one()) return q * p.terms_[0].coeff;
  if (q.size() == 1 && q.terms_[0].mono.is_one()) return p * q.terms_[0].coeff;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(p.size() * q.size());
  Rational prod;
  for (const auto& s : p.terms_) {
    for (const auto& t : q.terms_) {
      mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
      auto [it, fresh] = acc.try_emplace(s.mono * t.mono);
      if (fresh) {
        it->second = prod;
      } else {
        it->second += prod;
      }
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) r.terms_.push_back({m, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

Poly& Poly::operator*=(const Poly& q) {
  *this = *this * q;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& t : terms_) t.coeff *= k;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (sgn(c) == 0) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  Rational k = c;
  k.canonicalize();
  for (auto& t : terms_) t.coeff /= k;
  return *this;
}

bool operator==(const Poly& p, const Poly& q) {
  if (p.size() != q.size()) return false;
  if (p.vars_ == q.vars_) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!(p.terms_[i].mono == q.terms_[i].mono) || p.terms_[i].coeff != q.terms_[i].coeff) return false;
    }
    return true;
  }
  try {
    auto [a, b] = aligned(p, q);
    return a == b;
  } catch (const Error&) {
    return false;
  }
}

Poly Poly::times_monomial(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (sgn(c) != 0) {
    terms_.push_back({m, c});
    terms_.back().coeff.canonicalize();
  }
}

void PolyBuilder::add(Monomial&& m, Rational&& c) {
  if (sgn(c) != 0) {
    terms_.push_back({std::move(m), std::move(c)});
    terms_.back().coeff.canonicalize();
  }
}

Poly PolyBuilder::build() && {
  normalize_terms(terms_);
  Poly p(std::move(vars_));
  p.terms_ = std::move(terms_);
  return p;
}

Poly pow(const Poly& p, unsigned e) {
  Poly result(p.vars(), 1);
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---- Calculus and substitution ---------------------------------------------

namespace {

std::size_t require_index(const Poly& p, std::string_view v) {
  auto idx = p.vars().index_of(v);
  if (!idx) throw Error(ErrorCode::kUnknownVariable, "unknown variable '" + std::string(v) + "'");
  return *idx;
}

}  // namespace

Poly derivative(const Poly& p, std::string_view v) {
  std::size_t k = require_index(p, v);
  PolyBuilder b(p.vars());
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.exp[k];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exp[k] = e - 1;
    m.degree -= 1;
    b.add(std::move(m), Rational(t.coeff * e));
  }
  return std::move(b).build();
}

Poly substitute(const Poly& p, const std::map<std::string, Rational>& bindings) {
  std::vector<std::pair<std::size_t, const Rational*>> bound;
  for (const auto& [name, value] : bindings) {
    bound.emplace_back(require_index(p, name), &value);
  }
  if (bound.empty()) return p;
  // powers[k][e] = value_k^e, grown on demand
  std::vector<std::vector<Rational>> powers(bound.size(), std::vector<Rational>{Rational(1)});
  PolyBuilder b(p.vars());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    Rational c = t.coeff;
    for (std::size_t k = 0; k < bound.size(); ++k) {
      std::uint32_t e = m.exp[bound[k].first];
      if (e == 0) continue;
      auto& pw = powers[k];
      while (pw.size() <= e) pw.push_back(pw.back() * *bound[k].second);
      c *= pw[e];
      m.exp[bound[k].first] = 0;
      m.degree -= e;
    }
    b.add(std::move(m), std::move(c));
  }
  return std::move(b).build();
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings) {
  VarTable table = p.vars();
  std::vector<std::pair<std::size_t, Poly>> bound;
  for (const auto& [name, value] : bindings) {
    require_index(p, name);
    table = table.merged_with(value.vars());
  }
  Poly base = p.over(table);
  for (const auto& [name, value] : bindings) {
    bound.emplace_back(*table.index_of(name), value.over(table));
  }
  if (bound.empty()) return p;
  std::vector<std::vector<Poly>> powers;
  powers.assign(bound.size(), {Poly(table, 1)});
  Poly result(table);
  // Group terms by their bound part to limit polynomial multiplications.
  std::map<std::vector<std::uint32_t>, PolyBuilder> groups;
  for (const auto& t : base.terms()) {
    std::vector<std::uint32_t> key(bound.size());
    Monomial m = t.mono;
    for (std::size_t k = 0; k < bound.size(); ++k) {
      key[k] = m.exp[bound[k].first];
      m.degree -= key[k];
      m.exp[bound[k].first] = 0;
    }
    groups.try_emplace(key, table).first->second.add(std::move(m), Rational(t.coeff));
  }
  for (auto& [key, builder] : groups) {
    Poly term = std::move(builder).build();
    for (std::size_t k = 0; k < bound.size(); ++k) {
      auto& pw = powers[k];
      while (pw.size() <= key[k]) pw.push_back(pw.back() * bound[k].second);
      if (key[k] > 0) term *= pw[key[k]];
    }
    result += term;
  }
  return result;
}

Rational evaluate(const Poly& p, const std::map<std::string, Rational>& bindings) {
  Poly r = substitute(p, bindings);
  auto c = r.constant_value();
  if (!c) throw Error(ErrorCode::kInvalidArgument, "evaluate: not every variable is bound");
  return *c;
}

// ---- Degree queries ---------------------------------------------------------

int degree(const Poly& p, std::string_view v) {
  if (p.is_zero()) return kNegInfDegree;
  auto idx = p.vars().index_of(v);
  if (!idx) return 0;
  std::uint32_t d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.mono.exp[*idx]);
  return static_cast<int>(d);
}

int total_degree(const Poly& p) {
  if (p.is_zero()) return kNegInfDegree;
  return static_cast<int>(p.leading_term().mono.degree);
}

int level(const Poly& p) {
  int lvl = 0;
  for (const auto& t : p.terms()) {
    for (std::size_t i = t.mono.exp.size(); i-- > 0;) {
      if (t.mono.exp[i] > 0) {
        lvl = std::max(lvl, static_cast<int>(i) + 1);
        break;
      }
    }
  }
  return lvl;
}

std::vector<Poly> coefficients(const Poly& p, std::string_view v) {
  std::size_t k = require_index(p, v);
  if (p.is_zero()) return {};
  int d = degree(p, v);
  std::vector<PolyBuilder> builders(static_cast<std::size_t>(d) + 1, PolyBuilder(p.vars()));
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    std::uint32_t e = m.exp[k];
    m.exp[k] = 0;
    m.degree -= e;
    builders[e].add(std::move(m), Rational(t.coeff));
  }
  std::vector<Poly> out;
  out.reserve(builders.size());
  for (auto& b : builders) out.push_back(std::move(b).build());
  return out;
}

Poly from_coefficients(const std::vector<Poly>& coeffs, std::string_view v) {
  if (coeffs.empty()) throw Error(ErrorCode::kInvalidArgument, "from_coefficients: empty coefficient list");
  VarTable table = coeffs[0].vars();
  for (const auto& c : coeffs) table = table.merged_with(c.vars());
  if (!table.contains(v)) table = table.with_appended(v);
  std::size_t k = *table.index_of(v);
  PolyBuilder b(table);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Poly c = coeffs[i].over(table);
    for (const auto& t : c.terms()) {
      Monomial m = t.mono;
      m.exp[k] += static_cast<std::uint32_t>(i);
      m.degree += static_cast<std::uint32_t>(i);
      b.add(std::move(m), Rational(t.coeff));
    }
  }
  return std::move(b).build();
}

Poly lc(const Poly& p, std::string_view v) {
  require_index(p, v);
  if (p.is_zero()) return p;
  return coefficients(p, v).back();
}

std::vector<std::string> support(const Poly& p) {
  std::vector<bool> used(p.vars().size(), false);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.mono.exp.size(); ++i) {
      if (t.mono.exp[i] > 0) used[i] = true;
    }
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) out.push_back(p.vars().name(i));
  }
  return out;
}

bool is_homogeneous_in(const Poly& p, const std::vector<std::string>& vars, int* deg) {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) {
    auto i = p.vars().index_of(v);
    if (i) idx.push_back(*i);
  }
  std::optional<std::uint32_t> d;
  for (const auto& t : p.terms()) {
    std::uint32_t s = 0;
    for (auto i : idx) s += t.mono.exp[i];
    if (d && *d != s) return false;
    d = s;
  }
  if (deg) *deg = d ? static_cast<int>(*d) : kNegInfDegree;
  return true;
}

}  // namespace discres
