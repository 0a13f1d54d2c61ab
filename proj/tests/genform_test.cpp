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

#include "discres/error.hpp"
#include "discres/euclid.hpp"
#include "discres/genform.hpp"
#include "discres/matrix.hpp"
#include "test_support.hpp"

namespace discres {
namespace {

using testing::P;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

// Renames the ternary quadratic parameters to a..f.
Poly rename_quadratic(const Poly& p) {
  std::map<std::string, Poly> m{{"C_200", P("a")}, {"C_110", P("b")}, {"C_020", P("c")},
                                {"C_101", P("d")}, {"C_011", P("e")}, {"C_002", P("f")}};
  std::map<std::string, Poly> used;
  for (auto& [k, v] : m)
    if (p.vars().contains(k)) used.emplace(k, v);
  return substitute(p, used);
}

TEST(GenericForm, Shapes) {
  GenericForm q = generic_form(3, 2);
  EXPECT_EQ(q.body.size(), 6u);
  EXPECT_EQ(rename_quadratic(q.body), P("a*x^2 + b*x*y + c*y^2 + d*x*z + e*y*z + f*z^2"));
  EXPECT_EQ(generic_form(2, 1).body, P("C_10*x1 + C_01*x2"));
  EXPECT_EQ(generic_form(3, 3).params.size(), 10u);
  EXPECT_EQ(generic_form(4, 3).params.size(), 20u);
  EXPECT_EQ(generic_form(2, 10).params.front(), "C_10_0");
  EXPECT_EQ(generic_form(3, 4).pure_power_param(2), "C_004");
  EXPECT_EQ(code_of([] { generic_form(0, 2); }), ErrorCode::kInvalidDimension);
  EXPECT_EQ(code_of([] { generic_form(2, 0); }), ErrorCode::kInvalidDimension);
  for (int d = 1; d <= 4; ++d) {
    GenericForm g = generic_form(3, d);
    int deg = 0;
    EXPECT_TRUE(is_homogeneous_in(g.body, g.xvars, &deg));
    EXPECT_EQ(deg, d);
    for (const auto& c : g.params) EXPECT_EQ(degree(g.body, c), 1);
  }
}

TEST(Macaulay, Examples) {
  auto sys = MacaulaySystem::make({P("x^2"), P("y^2"), P("z^2")}, {"x", "y", "z"});
  EXPECT_EQ(macaulay_resultant(sys), Poly(VarTable(), 1));
  auto lin = MacaulaySystem::make({P("2*a*x + b*y"), P("b*x + 2*c*y")}, {"x", "y"});
  EXPECT_EQ(macaulay_resultant(lin), P("4*a*c - b^2"));
  EXPECT_EQ(code_of([] { MacaulaySystem::make({P("x^2 + y"), P("y")}, {"x", "y"}); }),
            ErrorCode::kInhomogeneousInput);
  EXPECT_EQ(code_of([] { MacaulaySystem::make({P("x")}, {"x", "y"}); }), ErrorCode::kInvalidDimension);
}

TEST(Macaulay, LinearSystemIsDeterminant) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-20, 20);
  VarTable xs{"x", "y", "z"};
  for (int t = 0; t < 20; ++t) {
    long a[3][3];
    std::vector<Poly> forms;
    for (auto& row : a) {
      Poly f(xs);
      for (int j = 0; j < 3; ++j) {
        row[j] = e(rng);
        f += Poly::variable(xs, xs.name(static_cast<std::size_t>(j))) * Rational(row[j]);
      }
      forms.push_back(f);
    }
    long det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    bool all_zero = std::all_of(forms.begin(), forms.end(), [](const Poly& f) { return !f.is_zero(); });
    if (!all_zero) continue;
    auto sys = MacaulaySystem::make(forms, {"x", "y", "z"});
    EXPECT_EQ(macaulay_resultant(sys, Point{}), Rational(det));
  }
}

// Random unimodular integer matrix built from elementary operations.
std::vector<std::vector<long>> unimodular(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  std::uniform_int_distribution<long> k(-2, 2);
  for (int step = 0; step < 4; ++step) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    long c = k(rng);
    for (std::size_t col = 0; col < n; ++col) a[i][col] += c * a[j][col];
  }
  if (rng() % 2 && n > 1) std::swap(a[0], a[1]);  // determinant -1
  return a;
}

std::map<std::string, Poly> linear_change(const std::vector<std::string>& xs, const std::vector<std::vector<long>>& a) {
  VarTable t(xs);
  std::map<std::string, Poly> bind;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly img(t);
    for (std::size_t j = 0; j < xs.size(); ++j) img += Poly::variable(t, xs[j]) * Rational(a[i][j]);
    bind.emplace(xs[i], img);
  }
  return bind;
}

TEST(Macaulay, NormalizationOnPurePowers) {
  const std::vector<std::string> names{"x", "y", "z"};
  int count = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> xs(names.begin(), names.begin() + static_cast<long>(n));
    VarTable t(xs);
    std::vector<int> d(n, 1);
    while (true) {
      std::vector<Poly> forms;
      for (std::size_t i = 0; i < n; ++i) forms.push_back(pow(Poly::variable(t, xs[i]), static_cast<unsigned>(d[i])));
      EXPECT_EQ(macaulay_resultant(MacaulaySystem::make(forms, xs)), Poly(t, 1));
      EXPECT_EQ(macaulay_resultant(MacaulaySystem::make(forms, xs), Point{}), Rational(1));
      ++count;
      std::size_t k = 0;
      while (k < n && d[k] == 3) d[k++] = 1;
      if (k == n) break;
      ++d[k];
    }
  }
  EXPECT_EQ(count, 3 + 9 + 27);
}

TEST(Macaulay, PurePowersUnderUnimodularChange) {
  // Res(F o A) = det(A)^(d_1 ... d_n) Res(F) with Res(x_i^d_i) = 1.
  std::mt19937_64 rng(11);
  const std::vector<std::string> xs{"x", "y", "z"};
  std::uniform_int_distribution<int> deg(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = unimodular(3, rng);
    long det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    ASSERT_TRUE(det == 1 || det == -1);
    auto bind = linear_change(xs, a);
    std::vector<Poly> forms;
    int prod = 1;
    for (const auto& x : xs) {
      int d = deg(rng);
      prod *= d;
      forms.push_back(substitute(pow(bind.at(x), static_cast<unsigned>(d)), std::map<std::string, Poly>{}));
    }
    Rational expect = (det == -1 && prod % 2 == 1) ? -1 : 1;
    EXPECT_EQ(macaulay_resultant(MacaulaySystem::make(forms, xs), Point{}), expect) << "trial " << trial;
  }
}

TEST(Macaulay, SharedZeroGivesZero) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> e(-10000, 10000);
  const std::vector<std::string> xs{"x", "y", "z"};
  VarTable t(xs);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> u{Rational(e(rng)), Rational(e(rng)), Rational(1 + trial % 3)};
    Point at{{"x", u[0]}, {"y", u[1]}, {"z", u[2]}};
    std::vector<Poly> singular, generic;
    for (int i = 0; i < 3; ++i) {
      int d = 1 + static_cast<int>(rng() % 3);
      PolyBuilder b(t);
      for (auto& g : generic_form(3, d).exponents) b.add(Monomial(g), Rational(e(rng)));
      Poly f = std::move(b).build();
      generic.push_back(f);
      // Remove the value at u through the z^d coefficient.
      Rational fu = evaluate(f, at);
      Rational zd = 1;
      for (int k = 0; k < d; ++k) zd *= u[2];
      singular.push_back(f - pow(Poly::variable(t, "z"), static_cast<unsigned>(d)) * Rational(fu / zd));
      ASSERT_EQ(evaluate(singular.back(), at), 0);
    }
    EXPECT_EQ(macaulay_resultant(MacaulaySystem::make(singular, xs), Point{}), 0);
    EXPECT_NE(macaulay_resultant(MacaulaySystem::make(generic, xs), Point{}), 0)
        << canonical_string(generic[0]) << " ; " << canonical_string(generic[1]) << " ; " << canonical_string(generic[2]);
  }
}

TEST(Macaulay, SpecializationCommutes) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> e(-50, 50);
  std::vector<MacaulaySystem> systems{
      MacaulaySystem::make({P("a*x^2 + b*x*y + c*y^2"), P("d*x + e*y")}, {"x", "y"}),
      MacaulaySystem::make({P("a*x^2 + b*y^2 + c*x*z"), P("d*x*y + z^2"), P("e*x + y - z")}, {"x", "y", "z"}),
      gradient_system(generic_form(2, 3).body, generic_form(2, 3).xvars),
      gradient_system(generic_form(3, 2).body, generic_form(3, 2).xvars),
  };
  for (const auto& sys : systems) {
    Poly exact = macaulay_resultant(sys);
    for (int k = 0; k < 10; ++k) {
      Point pt;
      for (const auto& p : sys.parameters()) pt[p] = e(rng);
      EXPECT_EQ(evaluate(exact, pt), macaulay_resultant(sys, pt));
    }
  }
}

TEST(Macaulay, DegenerateMinorRecovers) {
  // For (x^2, y^2, x*z + y*z) the distinguished minor is singular; the
  // coordinate change must recover the true value. Oracle: Res(x^2, y^2, L)
  // with L linear equals L(0,0,1)^4, and here L = z(x + y) is not linear, so
  // use the product formula Res(F1, F2, G*H) = Res(F1,F2,G) Res(F1,F2,H).
  const std::vector<std::string> xs{"x", "y", "z"};
  auto sys = MacaulaySystem::make({P("x^2 + y*z"), P("y^2"), P("x*z + y*z")}, xs);
  auto g = MacaulaySystem::make({P("x^2 + y*z"), P("y^2"), P("z")}, xs);
  auto h = MacaulaySystem::make({P("x^2 + y*z"), P("y^2"), P("x + y")}, xs);
  Rational expect = macaulay_resultant(g, Point{}) * macaulay_resultant(h, Point{});
  EXPECT_EQ(macaulay_resultant(sys, Point{}), expect);
}

TEST(Discriminant, Examples) {
  NormalizedPoly q = multi_discriminant(generic_form(3, 2));
  EXPECT_TRUE(proportional(rename_quadratic(q), P("4*a*c*f - a*e^2 - b^2*f + b*d*e - c*d^2")));
  NormalizedPoly r = multi_discriminant(remark_polynomial(), {"x", "y", "z"});
  EXPECT_TRUE(proportional(r, P("k")));
  EXPECT_TRUE(multi_discriminant(generic_form(3, 1)).is_one());
  NormalizedPoly bin = multi_discriminant(generic_form(2, 2));
  EXPECT_TRUE(proportional(bin, P("C_11^2 - 4*C_20*C_02")));
}

TEST(Discriminant, DegreeLaw) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    MacaulayOptions opt;
    opt.allow_large = true;
    NormalizedPoly D = multi_discriminant(generic_form(n, d), opt);
    int expect = n;
    for (int k = 1; k < n; ++k) expect *= d - 1;
    EXPECT_EQ(total_degree(D), expect) << n << "," << d;
    int deg = 0;
    EXPECT_TRUE(is_homogeneous_in(D, generic_form(n, d).params, &deg));
  }
}

TEST(Discriminant, VanishesExactlyOnSingularForms) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> e(-30, 30);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}, {3, 4}}) {
    GenericForm g = generic_form(n, d);
    VarTable xt(g.xvars);
    for (int trial = 0; trial < 20; ++trial) {
      // g has a singular point at e_1 when no monomial has x_1-degree above d-2.
      PolyBuilder b(xt);
      for (const auto& a : g.exponents) {
        if (a[0] + 2 <= static_cast<std::uint32_t>(d)) b.add(Monomial(a), Rational(e(rng)));
      }
      Poly sing = substitute(std::move(b).build(), linear_change(g.xvars, unimodular(g.xvars.size(), rng)));
      EXPECT_EQ(multi_discriminant_at(sing, g.xvars, Point{}), 0);
      Point pt;
      for (const auto& p : g.params) pt[p] = e(rng);
      EXPECT_NE(multi_discriminant_at(g.body, g.xvars, pt), 0);
    }
  }
}

TEST(TaylorDelta, Examples) {
  EXPECT_EQ(taylor_delta(P("z^3"), 2, "z", "zp"), P("zp + 2*z"));
  EXPECT_EQ(taylor_delta(P("z^2"), 1, "z", "zp"), P("z + zp"));
  EXPECT_TRUE(taylor_delta(P("z^2 + y"), 3, "z", "zp").is_zero());
  EXPECT_EQ(code_of([] { taylor_delta(P("z^2 + y"), 1, "z", "y"); }), ErrorCode::kVariableCollision);
  EXPECT_EQ(code_of([] { taylor_delta(P("z^2"), 1, "q", "zp"); }), ErrorCode::kUnknownVariable);
}

TEST(TaylorDelta, TaylorIdentity) {
  std::mt19937_64 rng(15);
  VarTable vars{"x", "y", "z"};
  for (int trial = 0; trial < 120; ++trial) {
    Poly F = testing::random_poly(rng, vars, 6, 6);
    int i = 1 + trial % 3;
    VarTable t = vars.with_appended("zp");
    Poly step = Poly::variable(t, "zp") - Poly::variable(t, "z");
    Poly lhs = substitute(F.over(t), std::map<std::string, Poly>{{"z", Poly::variable(t, "zp")}});
    Poly rhs(t);
    Poly D = F.over(t);
    Integer fact = 1;
    for (int j = 0; j < i; ++j) {
      if (j > 0) fact *= j;
      rhs += pow(step, static_cast<unsigned>(j)) * D * Rational(1, fact);
      D = derivative(D, "z");
    }
    rhs += pow(step, static_cast<unsigned>(i)) * taylor_delta(F, i, "z", "zp");
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(TaylorDelta, HomogeneousOnForms) {
  for (int d = 1; d <= 5; ++d) {
    GenericForm g = generic_form(3, d);
    for (int i = 1; i <= std::min(d, 3); ++i) {
      int deg = -1;
      Poly t = taylor_delta(g.body, i, "z", "zp");
      EXPECT_TRUE(is_homogeneous_in(t, {"x", "y", "z", "zp"}, &deg));
      EXPECT_EQ(deg, d - i);
    }
  }
}

TEST(Buse, CubicHasTrivialB) {
  GenericForm g = generic_form(3, 3);
  EXPECT_EQ(buse_b_squared(g.body, g.xvars, {"z", "y"}), Poly(g.body.vars(), 1));
  EXPECT_EQ(buse_b_factor(g.body, g.xvars, {"y", "z"}, Point{}), Rational(1));
}

TEST(Buse, WitnessFactors) {
  const std::vector<std::string> xs{"x", "y", "z"};
  Poly F = buse_witness(4);
  EXPECT_EQ(buse_a_factor(F, xs, {"y", "z"}, Point{{"w", 7}}), 0);
  EXPECT_EQ(buse_b_squared(F, xs, {"y", "z"}, Point{{"w", 7}}), 0);
  Poly a = buse_a_factor(F, xs, {"z", "y"});
  EXPECT_FALSE(a.is_zero());
  EXPECT_TRUE(divides(P("w"), a));
  for (long w : {3L, -5L, 11L}) {
    EXPECT_NE(buse_a_factor(F, xs, {"z", "y"}, Point{{"w", w}}), 0);
    EXPECT_NE(buse_b_factor(F, xs, {"z", "y"}, Point{{"w", w}}), 0);
  }
  EXPECT_EQ(buse_b_factor(F, xs, {"z", "y"}, Point{{"w", 0}}), 0);
}

TEST(Buse, AFactorRatioIsTheStatedConstant) {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<long> e(-1000, 1000);
  for (int d : {3, 4}) {
    GenericForm g = generic_form(3, d);
    for (int trial = 0; trial < 4; ++trial) {
      Point pt;
      for (const auto& p : g.params) pt[p] = e(rng);
      Rational res = macaulay_resultant(buse_a_system(g.body, g.xvars, {"z", "y"}), pt);
      Rational a = buse_a_factor(g.body, g.xvars, {"z", "y"}, pt);
      Rational C = pt.at(g.pure_power_param(2));
      Integer two;
      mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(d * (d - 1)));
      ASSERT_NE(a, 0);
      EXPECT_EQ(Rational(res / a), Rational(C * C * two));
    }
  }
}

TEST(Buse, SquareRootOfBSquared) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> e(-1000, 1000);
  GenericForm g = generic_form(3, 4);
  for (int trial = 0; trial < 3; ++trial) {
    Point pt;
    for (const auto& p : g.params) pt[p] = e(rng);
    Rational b = buse_b_factor(g.body, g.xvars, {"z", "y"}, pt);
    EXPECT_EQ(Rational(b * b), buse_b_squared(g.body, g.xvars, {"z", "y"}, pt));
  }
}

}  // namespace
}  // namespace discres
