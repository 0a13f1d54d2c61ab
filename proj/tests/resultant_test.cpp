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

#include <gtest/gtest.h>

#include <vector>

#include "discres/error.hpp"
#include "discres/euclid.hpp"
#include "discres/matrix.hpp"
#include "discres/resultant.hpp"
#include "test_support.hpp"

namespace discres {
namespace {

using testing::P;

// Cofactor expansion along the first row; independent of the library's
// elimination code and only used on small matrices.
template <class T>
T laplace(const Matrix<T>& m, const T& zero) {
  const std::size_t n = m.rows();
  if (n == 0) return zero + T(1);
  if (n == 1) return m(0, 0);
  T acc = zero;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1, zero);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    T term = m(0, j) * laplace(minor, zero);
    if (j % 2 == 0) acc += term; else acc -= term;
  }
  return acc;
}

Poly laplace_poly(const Matrix<Poly>& m) {
  const std::size_t n = m.rows();
  VarTable t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t = t.merged_with(m(i, j).vars());
  if (n == 1) return m(0, 0);
  Poly acc(t);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<Poly> minor(n - 1, n - 1, Poly(t));
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Poly term = m(0, j) * laplace_poly(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Matrix<Poly> rows(std::initializer_list<std::initializer_list<const char*>> r) {
  std::vector<std::vector<Poly>> v;
  for (auto& row : r) {
    v.emplace_back();
    for (auto* s : row) v.back().push_back(P(s));
  }
  Matrix<Poly> m(v.size(), v.size(), Poly(VarTable()));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i][j];
  return m;
}

TEST(Sylvester, Layout) {
  EXPECT_EQ(sylvester(P("x^2 - 1"), P("2*x"), "x").entries, rows({{"1", "0", "-1"}, {"2", "0", "0"}, {"0", "2", "0"}}));
  EXPECT_EQ(sylvester(P("x - a"), P("x - b"), "x").entries, rows({{"1", "-a"}, {"1", "-b"}}));
  SylvesterMatrix s = sylvester(P("y"), P("x"), "x");
  ASSERT_EQ(s.entries.rows(), 1u);
  EXPECT_EQ(s.entries(0, 0), P("y"));
  EXPECT_EQ(s.variable, "x");
}

TEST(Sylvester, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code([] { sylvester(P("y"), P("y + 1"), "x"); }), ErrorCode::kBothConstantInV);
  EXPECT_EQ(code([] { sylvester(Poly(VarTable()), P("x"), "x"); }), ErrorCode::kZeroPolynomial);
  EXPECT_EQ(code([] { discriminant(P("y^2"), "x"); }), ErrorCode::kConstantInV);
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(P("x^2 - 1"), P("2*x"), "x"), Poly(VarTable(), -4));
  EXPECT_EQ(resultant(P("x - a"), P("x - b"), "x"), P("a - b"));
  Poly p = P("x^2 + y*x + 3");
  Poly q = P("x*y - 7");
  EXPECT_TRUE(resultant(P("x - 1") * p, P("x - 1") * q, "x").is_zero());
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(P("x^2 + b*x + c"), "x"), P("b^2 - 4*c"));
  EXPECT_EQ(discriminant(P("x^2 - 1"), "x"), Poly(VarTable(), 4));
  EXPECT_TRUE(discriminant(P("x^2 - 2*t*x + t^2"), "x").is_zero());
  EXPECT_EQ(discriminant(P("a*x^3 + b*x^2 + c*x + d"), "x"),
            P("b^2*c^2 - 4*a*c^3 - 4*b^3*d - 27*a^2*d^2 + 18*a*b*c*d"));
}

TEST(Determinant, SmallExamples) {
  EXPECT_EQ(determinant(rows({{"a", "b"}, {"c", "d"}})), P("a*d - b*c"));
  Matrix<Rational> r(3, 3, Rational(0));
  r(0, 0) = Rational(1, 2); r(0, 1) = 3; r(1, 1) = Rational(-2, 3); r(1, 2) = 5; r(2, 0) = 7; r(2, 2) = 1;
  EXPECT_EQ(determinant(r), laplace(r, Rational(0)));
}

class ResultantProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{4242};
  VarTable vars{"x", "y", "z"};
  // Polynomial of degree exactly `d` in x with random coefficients in y, z.
  Poly in_x(int d, int coeff_terms = 2, int coeff_deg = 2) {
    VarTable yz{"y", "z"};
    Poly acc(vars);
    for (int k = 0; k <= d; ++k) {
      Poly c = testing::random_poly(rng, yz, coeff_terms, coeff_deg);
      if (k == d && c.is_zero()) c = Poly(yz, 1);
      acc = acc + c * pow(Poly::variable(vars, "x"), k);
    }
    return acc;
  }
};

TEST_F(ResultantProperties, DiscriminantResultantIdentity) {
  std::uniform_int_distribution<int> deg(1, 6);
  for (int i = 0; i < 100; ++i) {
    int l = deg(rng);
    Poly p = in_x(l, 2, l > 4 ? 1 : 2);
    Poly lhs = lc(p, "x") * discriminant(p, "x");
    Poly rhs = resultant(p, derivative(p, "x"), "x");
    if ((l * (l - 1) / 2) % 2 == 1) rhs = rhs * Rational(-1);
    EXPECT_EQ(lhs, rhs) << canonical_string(p);
  }
}

TEST_F(ResultantProperties, SwapRule) {
  std::uniform_int_distribution<int> deg(1, 4);
  for (int i = 0; i < 100; ++i) {
    int m = deg(rng), n = deg(rng);
    Poly p = in_x(m), q = in_x(n);
    Poly sign = Poly(vars, (m * n) % 2 ? -1 : 1);
    EXPECT_EQ(resultant(p, q, "x"), sign * resultant(q, p, "x"));
  }
}

TEST_F(ResultantProperties, Multiplicativity) {
  std::uniform_int_distribution<int> deg(1, 3);
  for (int i = 0; i < 100; ++i) {
    Poly p = in_x(deg(rng)), q = in_x(deg(rng)), r = in_x(deg(rng));
    EXPECT_EQ(resultant(p, q * r, "x"), resultant(p, q, "x") * resultant(p, r, "x"));
  }
}

TEST_F(ResultantProperties, RootProductFormula) {
  // For monic p with rational roots r_i, Res(p, q) = prod q(r_i).
  std::uniform_int_distribution<long> root(-6, 6);
  std::uniform_int_distribution<int> deg(1, 4);
  VarTable xy{"x", "y"};
  for (int i = 0; i < 40; ++i) {
    Poly p(xy, 1);
    std::vector<Rational> roots;
    for (int k = deg(rng); k > 0; --k) {
      roots.emplace_back(root(rng), 1 + static_cast<long>(rng() % 3));
      p = p * (Poly::variable(xy, "x") - Poly(xy, roots.back()));
    }
    Poly q = testing::random_nonconstant(rng, xy, 4, 3);
    if (degree(q, "x") < 1) q = q + Poly::variable(xy, "x");
    Poly expect(xy, 1);
    for (const auto& r : roots) expect = expect * substitute(q, std::map<std::string, Rational>{{"x", r}});
    EXPECT_EQ(resultant(p, q, "x"), expect);
  }
}

TEST_F(ResultantProperties, VanishesIffCommonFactor) {
  for (int i = 0; i < 30; ++i) {
    Poly g = in_x(1 + static_cast<int>(rng() % 2));
    Poly a = in_x(1 + static_cast<int>(rng() % 2));
    Poly b = in_x(1 + static_cast<int>(rng() % 2));
    EXPECT_TRUE(resultant(a * g, b * g, "x").is_zero());
    bool coprime = degree(gcd(a, b).value(), "x") == 0;
    EXPECT_EQ(resultant(a, b, "x").is_zero(), !coprime);
  }
}

TEST_F(ResultantProperties, SylvesterAgreesWithPrs) {
  std::uniform_int_distribution<int> deg(1, 5);
  for (int i = 0; i < 40; ++i) {
    Poly p = in_x(deg(rng)), q = in_x(deg(rng));
    EXPECT_EQ(resultant(p, q, "x"), resultant_prs(p, q, "x")) << canonical_string(p) << " | " << canonical_string(q);
  }
}

TEST_F(ResultantProperties, DeterminantRoutesAgree) {
  VarTable t{"t"};
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 2 + rng() % 4;
    Matrix<Poly> m(n, n, Poly(t));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = testing::random_poly(rng, t, 2, 3);
    Poly oracle = laplace_poly(m);
    EXPECT_EQ(determinant_bareiss(m), oracle);
    EXPECT_EQ(determinant_interpolation(m), oracle);
    EXPECT_EQ(determinant(m), oracle);
  }
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 2 + rng() % 3;
    Matrix<Poly> m(n, n, Poly(vars));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = testing::random_poly(rng, vars, 3, 2);
    EXPECT_EQ(determinant(m), laplace_poly(m));
  }
}

TEST_F(ResultantProperties, IntegerDeterminantRoutesAgree) {
  std::uniform_int_distribution<long> e(-1000, 1000);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 1 + rng() % 6;
    Matrix<Integer> m(n, n, Integer(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = e(rng);
    Integer oracle = laplace(m, Integer(0));
    EXPECT_EQ(determinant_bareiss(m), oracle);
    EXPECT_EQ(determinant_modular(m), oracle);
  }
  for (int i = 0; i < 5; ++i) {
    std::size_t n = 20 + rng() % 20;
    Matrix<Integer> m(n, n, Integer(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Integer(e(rng)) * Integer(e(rng)) * Integer(e(rng));
    if (i == 0) m(1, 1) = 0, m.swap_rows(0, 1);
    EXPECT_EQ(determinant_bareiss(m), determinant_modular(m));
  }
}

}  // namespace
}  // namespace discres
