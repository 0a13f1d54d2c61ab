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

#include <filesystem>
#include <fstream>

#include "discres/error.hpp"
#include "discres/euclid.hpp"
#include "discres/projection.hpp"
#include "discres/resultant.hpp"
#include "test_support.hpp"

namespace discres {
namespace {

using testing::P;

const char* kTernaryQuadratic = "a*x^2 + b*x*y + c*y^2 + d*x*z + e*y*z + f*z^2";
const char* kTernaryDelta = "4*a*c*f - a*e^2 - b^2*f + b*d*e - c*d^2";

TEST(BprojStep, Examples) {
  EXPECT_EQ(bproj_step(P("x^2 - 1"), "x"), Poly(VarTable(), -4));
  EXPECT_EQ(bproj_step(pow(P("x - 1"), 2) * P("x + 2"), "x"), Poly(VarTable(), -9));
  EXPECT_EQ(bproj_step(P("y^2 + 1"), "x"), P("y^2 + 1"));
  EXPECT_EQ(bproj_step(parse("y^2 + 1", VarTable{"x", "y"}), "x"), P("y^2 + 1"));
  EXPECT_TRUE(bproj_step(Poly(VarTable{"x"}), "x").is_zero());
}

TEST(Bproj, Examples) {
  Poly F = P("x^3*y + 2*y - 7");
  EXPECT_EQ(bproj(F, {}), F);
  EXPECT_EQ(bproj(P("x - y") * P("x + y"), {"x"}), P("-4*y^2"));
  EXPECT_THROW(bproj(F, {"x", "x"}), Error);
}

TEST(HprojBranch, Examples) {
  Poly F = P("x1^2*x2 - x2^3 + x1 + 5");
  EXPECT_EQ(hproj_branch(F, {"x1"}, "x1"), bproj_step(F, "x1"));
  EXPECT_EQ(hproj_branch(F, {"x1", "x2"}, "x1"), bproj_step(hproj(F, {"x2"}), "x1"));
  EXPECT_EQ(hproj_branch(F, {"x1", "x2"}, "x2"), bproj_step(hproj(F, {"x1"}), "x2"));
  try {
    hproj_branch(F, {"x1"}, "x2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVariableNotInOrder);
  }
}

TEST(Hproj, TwoVariableExpansion) {
  // Hproj(F,[x1,x2]) = gcd(Bproj(Bproj(F,[x2]),[x1]), Bproj(Bproj(F,[x1]),[x2])).
  Poly F = P("x1^2*x2^2 - 3*x1*x2 + x2^3 - a*x1 + 2");
  Poly left = bproj(F, {"x2", "x1"});
  Poly right = bproj(F, {"x1", "x2"});
  EXPECT_EQ(hproj(F, {"x1", "x2"}).value(), gcd(left, right).value());
}

TEST(Hproj, TernaryQuadratic) {
  NormalizedPoly h = hproj(P(kTernaryQuadratic), {"x", "y", "z"});
  EXPECT_TRUE(proportional(h, P(kTernaryDelta))) << canonical_string(h.value());
}

TEST(Hproj, RemarkPolynomialIsOne) {
  NormalizedPoly h = hproj(P("x*y + y^2 + x*z + y*z + k*z^2"), {"x", "y", "z"});
  EXPECT_TRUE(h.is_one()) << canonical_string(h.value());
  Poly G = P("x*y + y^2 + x*z + y*z + k*z^2");
  std::vector<Poly> branches;
  for (const char* v : {"x", "y", "z"}) branches.push_back(hproj_branch(G, {"x", "y", "z"}, v));
  EXPECT_TRUE(gcd(branches).is_one());
}

TEST(Hproj, EmptyOrderIsPrimitivePart) {
  Poly F = P("-6*x^2*y + 4*y");
  EXPECT_EQ(hproj(F, {}).value(), primitive_part(F).value());
}

class ProjectionProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{99};
  VarTable vars{"x", "y", "z"};
};

TEST_F(ProjectionProperties, HprojDividesSqrfreeBproj) {
  std::vector<ProjOrder> orders{{"x"}, {"z", "y"}, {"x", "y"}, {"z", "y", "x"}, {"y", "x", "z"}};
  for (int i = 0; i < 40; ++i) {
    Poly F = testing::random_nonconstant(rng, vars, 4, 3, 5);
    for (const auto& order : orders) {
      NormalizedPoly h = hproj(F, order);
      EXPECT_FALSE(h.value().is_zero());
      Poly b = bproj(F, order);
      EXPECT_TRUE(divides(h, b)) << "raw " << canonical_string(F) << " order size " << order.size();
      EXPECT_TRUE(divides(sqrfree_part(h), sqrfree_part(b))) << canonical_string(F) << " order size " << order.size();
    }
  }
}

TEST_F(ProjectionProperties, HprojTouchesEverySubOrderOnce) {
  for (std::size_t m = 1; m <= 3; ++m) {
    ProjOrder order(vars.names().begin(), vars.names().begin() + static_cast<long>(m));
    Poly F = testing::random_nonconstant(rng, vars, 4, 3, 5);
    ProjCache cache;
    hproj(F, order, &cache);
    EXPECT_EQ(cache.touched("hproj").size(), (1u << m) - 1);
  }
}

TEST_F(ProjectionProperties, StepsOfFormsStayHomogeneous) {
  // Generic ternary forms of degree 2 and 3 written out by hand.
  std::vector<Poly> forms{
      P(kTernaryQuadratic),
      P("a0*x^3 + a1*x^2*y + a2*x*y^2 + a3*y^3 + a4*x^2*z + a5*x*y*z + a6*y^2*z + a7*x*z^2 + a8*y*z^2 + a9*z^3")};
  for (const auto& f : forms) {
    for (const char* v : {"x", "y", "z"}) {
      Poly r = bproj_step(f, v);
      std::vector<std::string> rest;
      for (const char* w : {"x", "y", "z"})
        if (std::string(w) != v) rest.push_back(w);
      EXPECT_TRUE(is_homogeneous_in(r, rest)) << v;
    }
  }
}

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = std::filesystem::temp_directory_path() /
          ("discres-cache-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
           ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir);
  }
  void TearDown() override { std::filesystem::remove_all(dir); }
  std::filesystem::path dir;
};

TEST_F(CacheTest, PersistsAndHitsAreIdentical) {
  Poly F = P(kTernaryQuadratic);
  std::string first;
  {
    ProjCache cache(dir);
    first = canonical_string(hproj(F, {"x", "y", "z"}, &cache).value());
    EXPECT_GT(cache.stats().disk_entries, 0u);
  }
  ProjCache again(dir, /*verify=*/true);
  std::string second = canonical_string(hproj(F, {"x", "y", "z"}, &again).value());
  EXPECT_EQ(first, second);
  ProjCacheStats s = again.stats();
  EXPECT_GT(s.hits, 0u);
  EXPECT_EQ(s.verified, s.hits);
  again.clear();
  EXPECT_EQ(again.stats().disk_entries, 0u);
}

TEST_F(CacheTest, VerifyModeDetectsCorruption) {
  Poly F = P("x^2 - y");
  ProjCacheKey key = ProjCacheKey::make("bproj-step", "x", F);
  {
    ProjCache cache(dir);
    bproj_step(F, "x", &cache);
  }
  std::ofstream(dir / "bproj-step" / (key.hex() + ".poly"), std::ios::trunc) << "5*y\n";
  ProjCache plain(dir);
  EXPECT_EQ(bproj_step(F, "x", &plain), P("5*y"));
  ProjCache checking(dir, true);
  EXPECT_THROW(bproj_step(F, "x", &checking), Error);
}

}  // namespace
}  // namespace discres
