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

#ifndef DISCRES_GENFORM_HPP
#define DISCRES_GENFORM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "discres/euclid.hpp"
#include "discres/poly.hpp"

namespace discres {

using Point = std::map<std::string, Rational>;

// f = sum over |alpha| = d of C_alpha x^alpha. The x-variables are x, y, z
// when n = 3 and x1..xn otherwise; C_alpha is named "C_" followed by the
// exponent digits (separated by '_' once any exponent exceeds 9). Parameters
// are listed in decreasing graded reverse lexicographic order of alpha.
struct GenericForm {
  int n = 0;
  int d = 0;
  std::vector<std::string> xvars;
  std::vector<std::vector<std::uint32_t>> exponents;
  std::vector<std::string> params;
  Poly body;

  // Name of the coefficient of x^alpha.
  const std::string& param(const std::vector<std::uint32_t>& alpha) const;
  // Coefficient of xvars[i]^d.
  const std::string& pure_power_param(std::size_t i) const;
};

GenericForm generic_form(int n, int d);

// n forms, homogeneous in n shared x-variables, with their degrees.
struct MacaulaySystem {
  std::vector<Poly> forms;
  std::vector<std::string> xvars;
  std::vector<int> degrees;

  // Checks homogeneity and arity. Zero forms need an explicit degree.
  static MacaulaySystem make(std::vector<Poly> forms, std::vector<std::string> xvars,
                             std::vector<int> degrees = {});

  int critical_degree() const;
  // Number of degree-nu monomials, i.e. the side of the Macaulay matrix.
  std::size_t dimension() const;
  // Size of the distinguished minor.
  std::size_t minor_dimension() const;
  // Variables other than the x-variables that occur in some form.
  std::vector<std::string> parameters() const;
};

struct MacaulayOptions {
  std::uint64_t seed = 0;    // drives coordinate changes after a degenerate minor
  int max_retries = 5;
  bool allow_large = false;  // skip the exact-mode size guard
};

// Exact mode: det(D) / det(D') over Q[parameters], normalized so that
// Res(x_1^d_1, ..., x_n^d_n) = 1. Refuses (InfeasibleSize) large symbolic
// systems unless options.allow_large is set.
Poly macaulay_resultant(const MacaulaySystem& sys, const MacaulayOptions& options = {});
// Specialized mode: every parameter is bound by `point`.
Rational macaulay_resultant(const MacaulaySystem& sys, const Point& point, const MacaulayOptions& options = {});

// Whether exact mode runs without allow_large.
bool exact_mode_feasible(const MacaulaySystem& sys);

// The gradient system of f with respect to xvars (degrees deg f - 1).
MacaulaySystem gradient_system(const Poly& f, const std::vector<std::string>& xvars);

// Delta(f): primitive part of the resultant of the gradient, positive
// leading coefficient. Defined as 1 for linear forms.
NormalizedPoly multi_discriminant(const GenericForm& f, const MacaulayOptions& options = {});
NormalizedPoly multi_discriminant(const Poly& f, const std::vector<std::string>& xvars,
                                  const MacaulayOptions& options = {});
// Resultant of the gradient at a point of parameter space. This is Delta up
// to a constant that depends only on (n, d).
Rational multi_discriminant_at(const Poly& f, const std::vector<std::string>& xvars, const Point& point,
                               const MacaulayOptions& options = {});

// sum over k >= i of (1/k!) (v' - v)^(k-i) d^k F / dv^k.
Poly taylor_delta(const Poly& F, int i, const std::string& v, const std::string& v_prime);

// Busé factors of a ternary form f of degree d >= 3 with respect to the
// ordered pair (u, w); u is the differentiated variable and C denotes the
// coefficient of u^d.
//   a: Res(f, f_u, f_uu) = 2^(d(d-1)) C^2 a
//   b: Res(f, f_u, delta^2 f, delta^2 f_u - 2 delta^3 f) = C^(2d(d-1)-6) b^2
// The b system lives in (xvars, u') with u' a fresh variable; b = 1 for d = 3.
struct BusePair {
  std::string u;
  std::string w;
  std::string tag() const { return u + "," + w; }
};

struct BuseFactors {
  Poly a;
  Poly b_squared;
  std::string pair;
};

Poly buse_a_factor(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair,
                   const MacaulayOptions& options = {});
Rational buse_a_factor(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair, const Point& point,
                       const MacaulayOptions& options = {});
// Exact mode keeps b^2.
Poly buse_b_squared(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair,
                    const MacaulayOptions& options = {});
Rational buse_b_squared(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair,
                        const Point& point, const MacaulayOptions& options = {});
// Nonnegative rational square root of b^2; NotASquare otherwise.
Rational buse_b_factor(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair, const Point& point,
                       const MacaulayOptions& options = {});
BuseFactors buse_factors(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair,
                         const MacaulayOptions& options = {});

// The systems behind the factors, exposed for inspection and the CLI.
MacaulaySystem buse_a_system(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair);
MacaulaySystem buse_b_system(const Poly& f, const std::vector<std::string>& xvars, const BusePair& pair);

// z^d + w z x^(d-1) + y^d over x, y, z with parameter w.
Poly buse_witness(int d);
// xy + y^2 + xz + yz + k z^2 with parameter k.
Poly remark_polynomial();

}  // namespace discres

#endif  // DISCRES_GENFORM_HPP
