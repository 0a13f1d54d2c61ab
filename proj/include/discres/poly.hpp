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

#ifndef DISCRES_POLY_HPP
#define DISCRES_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace discres {

using Integer = mpz_class;
// Coefficients are rationals kept in lowest terms with a positive denominator.
using Rational = mpq_class;

// Ordered list of distinct variable names. The position of a name is its
// variable index; this order breaks ties in the monomial order. Tables are
// immutable and cheap to copy.
class VarTable {
 public:
  VarTable();
  explicit VarTable(std::vector<std::string> names);
  VarTable(std::initializer_list<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const noexcept;
  bool contains(std::string_view name) const noexcept { return index_of(name).has_value(); }

  // This table's names followed by the names of `other` not already present.
  VarTable merged_with(const VarTable& other) const;
  VarTable with_appended(std::string_view name) const;

  bool identical(const VarTable& other) const noexcept { return names_ == other.names_; }
  friend bool operator==(const VarTable& a, const VarTable& b) noexcept {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view s) noexcept;

struct Monomial {
  std::vector<std::uint32_t> exp;
  std::uint32_t degree = 0;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exp(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e);

  bool is_one() const noexcept { return degree == 0; }
  bool divides(const Monomial& other) const noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exp == b.exp; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
// Requires a.divides(b).
Monomial quotient(const Monomial& b, const Monomial& a);

// Graded reverse lexicographic comparison: >0 when a > b.
int compare_grevlex(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

// Sparse multivariate polynomial over Q. Terms are stored in strictly
// decreasing graded reverse lexicographic order with nonzero coefficients.
// Arithmetic between polynomials over different tables merges the tables by
// name. Equality compares named terms and ignores unused table entries.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Poly() = default;
  explicit Poly(VarTable vars) : vars_(std::move(vars)) {}
  Poly(VarTable vars, const Rational& c);
  Poly(VarTable vars, long c) : Poly(std::move(vars), Rational(c)) {}

  static Poly variable(VarTable vars, std::string_view name);
  // Sorts, combines like monomials and drops zero coefficients.
  static Poly from_terms(VarTable vars, std::vector<Term> terms);

  const VarTable& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  // Value of a constant polynomial; nullopt otherwise.
  std::optional<Rational> constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  // Re-expresses this polynomial over `table`, which must contain every
  // variable actually used.
  Poly over(const VarTable& table) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Poly& q);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend bool operator==(const Poly& p, const Poly& q);

  // Multiplies by a monomial given over this polynomial's table.
  Poly times_monomial(const Monomial& m) const;

 private:
  friend class PolyBuilder;
  VarTable vars_;
  std::vector<Term> terms_;
};

// Accumulates terms over a fixed table; build() yields a normalized Poly.
class PolyBuilder {
 public:
  explicit PolyBuilder(VarTable vars) : vars_(std::move(vars)) {}
  void add(const Monomial& m, const Rational& c);
  void add(Monomial&& m, Rational&& c);
  Poly build() &&;

 private:
  VarTable vars_;
  std::vector<Poly::Term> terms_;
};

Poly pow(const Poly& p, unsigned e);

Poly derivative(const Poly& p, std::string_view v);
Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings);
Poly substitute(const Poly& p, const std::map<std::string, Rational>& bindings);
// Exact value when every used variable is bound.
Rational evaluate(const Poly& p, const std::map<std::string, Rational>& bindings);

// Degree in `v`: 0 when v is absent, kNegInfDegree for the zero polynomial.
int degree(const Poly& p, std::string_view v);
int total_degree(const Poly& p);
// 1-based index of the last table variable of positive degree; 0 for constants.
int level(const Poly& p);
// Coefficient of v^degree(p, v); the zero polynomial when p is zero.
Poly lc(const Poly& p, std::string_view v);
// Coefficients of p as a polynomial in v: result[i] multiplies v^i. Empty
// for the zero polynomial. Every coefficient is over p's table.
std::vector<Poly> coefficients(const Poly& p, std::string_view v);
Poly from_coefficients(const std::vector<Poly>& coeffs, std::string_view v);
// Variables of positive degree, in table order.
std::vector<std::string> support(const Poly& p);
bool is_homogeneous_in(const Poly& p, const std::vector<std::string>& vars, int* deg = nullptr);

// Text form: terms in decreasing graded reverse lexicographic order joined
// by " + " / " - ", "*" between factors, unit coefficients elided.
std::string canonical_string(const Poly& p);
// Parses the text form. Rational coefficients are written p/q. Variables
// absent from `table` are appended to it in order of first appearance.
Poly parse(std::string_view text, const VarTable& table = VarTable());
std::string to_json(const Poly& p);
Poly from_json(std::string_view json);

std::string to_string(const Rational& q);

}  // namespace discres

#endif  // DISCRES_POLY_HPP
