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

#include <thread>

#include "discres/deadline.hpp"
#include "discres/error.hpp"
#include "discres/euclid.hpp"
#include "discres/verify.hpp"
#include "json.hpp"
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

std::string value_of(const TrialRecord& t, const std::string& key) {
  for (const auto& [k, v] : t.values)
    if (k == key) return v;
  return {};
}

Point bindings_of(const TrialRecord& t) {
  Point p;
  for (const auto& [k, v] : t.bindings) p[k] = Rational(v);
  return p;
}

// Schoolbook remainder of univariate polynomials given as dense coefficient
// vectors, lowest degree first.
std::vector<Rational> remainder(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  std::size_t db = b.size() - 1;
  while (a.size() > db) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<Rational> dense(const Poly& p, const std::string& v) {
  std::vector<Rational> out;
  for (const auto& c : coefficients(p, v)) out.push_back(c.constant_value().value());
  return out;
}

TEST(Plan, Validation) {
  SpecializationPlan plan;
  EXPECT_NO_THROW(plan.validate({"a", "b"}));
  plan.trials = 0;
  EXPECT_EQ(code_of([&] { plan.validate({"a"}); }), ErrorCode::kInvalidArgument);
  plan.trials = 3;
  plan.range = 1;
  EXPECT_EQ(code_of([&] { plan.validate({"a"}); }), ErrorCode::kInvalidArgument);
  plan.range = 10;
  plan.kept_symbolic = {"c"};
  EXPECT_EQ(code_of([&] { plan.validate({"a", "b"}); }), ErrorCode::kInvalidArgument);
}

TEST(ProbabilisticDivides, Examples) {
  SpecializationPlan plan;
  auto pass = probabilistic_divides(P("x + y"), P("x + y") * P("x - y"), plan);
  EXPECT_EQ(pass.verdict, Verdict::kPass);
  EXPECT_EQ(pass.mode, CheckMode::kProbabilistic);
  EXPECT_EQ(pass.trials.size(), 5u);

  auto fail = probabilistic_divides(P("x + 1"), P("x^2 + 1"), plan);
  ASSERT_EQ(fail.verdict, Verdict::kFail);
  EXPECT_EQ(code_of([] { probabilistic_divides(Poly(VarTable{"x"}), P("x"), {}); }), ErrorCode::kZeroPolynomial);

  GenericForm q = generic_form(3, 2);
  auto thm = probabilistic_divides(multi_discriminant(q), hproj(q.body, q.xvars), plan);
  EXPECT_EQ(thm.verdict, Verdict::kPass);
}

TEST(ProbabilisticDivides, FailWitnessReverifies) {
  std::mt19937_64 rng(11);
  VarTable vars{"x", "y", "z"};
  int failures = 0;
  for (int i = 0; i < 30; ++i) {
    Poly p = testing::random_nonconstant(rng, vars, 3, 2);
    Poly q = testing::random_poly(rng, vars, 4, 3);
    SpecializationPlan plan;
    plan.seed = static_cast<std::uint64_t>(i);
    plan.trials = 3;
    auto rep = probabilistic_divides(p, q, plan);
    for (const auto& t : rep.trials) {
      if (t.ok) continue;
      ++failures;
      Point at = bindings_of(t);
      std::string v = value_of(t, "survivor");
      Poly ps = substitute(p, at), qs = substitute(q, at);
      ASSERT_FALSE(ps.is_zero());
      EXPECT_FALSE(remainder(dense(qs, v), dense(ps, v)).empty());
    }
    if (divides(p, q)) {
      EXPECT_EQ(rep.verdict == Verdict::kFail, false);
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(RatioConstancy, FabricatedIdentitiesPassForEverySeed) {
  std::mt19937_64 rng(5);
  VarTable vars{"a", "b", "c"};
  for (int i = 0; i < 20; ++i) {
    Poly R = testing::random_nonconstant(rng, vars, 4, 3);
    Rational c(static_cast<long>(rng() % 200) - 100, static_cast<long>(rng() % 7) + 1);
    c.canonicalize();
    if (c == 0) c = 3;
    Poly L = R * c;
    SpecializationPlan plan;
    plan.seed = static_cast<std::uint64_t>(i);
    plan.trials = 6;
    auto rep = ratio_constancy("fabricated", {"a", "b", "c"}, plan, [&](const Point& at, int) {
      return std::pair{evaluate(L, at), evaluate(R, at)};
    });
    EXPECT_EQ(rep.verdict, Verdict::kPass) << canonical_string(R);
    for (const auto& t : rep.trials) EXPECT_EQ(Rational(value_of(t, "ratio")), c);
  }
}

TEST(RatioConstancy, BrokenIdentityFailsWithWitness) {
  Poly R = P("a*b + c"), L = P("2*a*b + 2*c + a");
  SpecializationPlan plan;
  plan.trials = 4;
  auto rep = ratio_constancy("broken", {"a", "b", "c"}, plan,
                             [&](const Point& at, int) { return std::pair{evaluate(L, at), evaluate(R, at)}; });
  ASSERT_EQ(rep.verdict, Verdict::kFail);
  Rational first = Rational(value_of(rep.trials.front(), "ratio"));
  for (const auto& t : rep.trials) {
    Point at = bindings_of(t);
    Rational ratio = evaluate(L, at) / evaluate(R, at);
    EXPECT_EQ(ratio == first, t.ok);
  }
}

TEST(RatioConstancy, DegenerateTrialsAreRedrawn) {
  SpecializationPlan plan;
  plan.range = 2;
  plan.trials = 5;
  // a - b vanishes on about half of the draws from {-2, -1, 1, 2}^2.
  auto rep = ratio_constancy("redraw", {"a", "b"}, plan, [](const Point& at, int) {
    Rational r = at.at("a") - at.at("b");
    return std::pair<Rational, Rational>{3 * r, r};
  });
  EXPECT_EQ(rep.verdict, Verdict::kPass);
  ASSERT_FALSE(rep.notes.empty());
  EXPECT_EQ(rep.notes.front().rfind("redraws: ", 0), 0u);

  auto stuck = ratio_constancy("zero", {"a"}, plan, [](const Point&, int) {
    return std::pair{Rational(1), Rational(0)};
  });
  EXPECT_EQ(stuck.verdict, Verdict::kInconclusive);
}

TEST(Report, DeterministicAndSchemaShaped) {
  SpecializationPlan plan;
  plan.seed = 42;
  auto a = check_buse(3, plan), b = check_buse(3, plan);
  EXPECT_EQ(a.to_json(false), b.to_json(false));
  EXPECT_EQ(a.to_text(false), b.to_text(false));
  plan.seed = 43;
  EXPECT_NE(check_buse(3, plan).to_json(false), a.to_json(false));

  auto j = nlohmann::json::parse(a.to_json());
  for (const char* key : {"check", "mode", "verdict", "seed", "trials", "wall_ms"}) EXPECT_TRUE(j.contains(key));
  EXPECT_EQ(j["check"], "buse(3)");
  EXPECT_EQ(j["mode"], "probabilistic");
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["trials"].size(), 5u);
  EXPECT_TRUE(j["wall_ms"].is_number_integer());
  EXPECT_EQ(nlohmann::json::parse(a.to_json(false))["wall_ms"], 0);
}

TEST(CheckMain, ExactCases) {
  for (int n : {2, 3}) {
    auto rep = check_main(n, 2, {});
    EXPECT_EQ(rep.verdict, Verdict::kPass);
    EXPECT_EQ(rep.mode, CheckMode::kExact);
    ASSERT_EQ(rep.trials.size(), 1u);
    std::string quotient = value_of(rep.trials[0], "quotient");
    EXPECT_TRUE(P(quotient).is_constant()) << quotient;
  }
  auto binary = check_main(2, 2, {});
  EXPECT_TRUE(proportional(P(value_of(binary.trials[0], "delta")), P("C_11^2 - 4*C_20*C_02")));
}

TEST(CheckMain, GuardsAndModes) {
  EXPECT_EQ(code_of([] { check_main(2, 3, {}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { check_main(5, 4, {}); }), ErrorCode::kInfeasibleSize);
  EXPECT_EQ(code_of([] { check_main(1, 2, {}); }), ErrorCode::kInvalidDimension);
  CheckOptions conj;
  conj.conjecture_mode = true;
  auto rep = check_main(2, 3, {}, conj);
  EXPECT_EQ(rep.verdict, Verdict::kPass);
  EXPECT_EQ(rep.mode, CheckMode::kProbabilistic);
  ASSERT_FALSE(rep.notes.empty());
  EXPECT_EQ(rep.notes.front(), "conjecture-mode");

  auto quartic = check_main(2, 4, {});
  EXPECT_EQ(quartic.verdict, Verdict::kPass);
  EXPECT_EQ(quartic.mode, CheckMode::kProbabilistic);
}

TEST(CheckMain2, ExactSmallDegrees) {
  auto one = check_main2(1, {});
  EXPECT_EQ(one.verdict, Verdict::kPass);
  EXPECT_EQ(value_of(one.trials[0], "hproj"), "1");
  EXPECT_EQ(value_of(one.trials[0], "delta"), "1");

  auto two = check_main2(2, {});
  EXPECT_EQ(two.verdict, Verdict::kPass);
  EXPECT_EQ(two.mode, CheckMode::kExact);
  ASSERT_EQ(two.trials.size(), 2u);
  EXPECT_TRUE(two.trials[1].ok);
  EXPECT_EQ(code_of([] { check_main2(0, {}); }), ErrorCode::kInvalidDimension);
  EXPECT_EQ(code_of([] { check_main2(4, {}); }), ErrorCode::kInfeasibleSize);
}

TEST(CheckBuse, CubicAndQuartic) {
  SpecializationPlan plan;
  plan.trials = 8;
  auto cubic = check_buse(3, plan);
  EXPECT_EQ(cubic.verdict, Verdict::kPass);
  EXPECT_EQ(cubic.trials.size(), 8u);
  auto quartic = check_buse(4, plan);
  EXPECT_EQ(quartic.verdict, Verdict::kPass);
  for (const auto& t : quartic.trials) {
    EXPECT_NE(Rational(value_of(t, "L")), 0);
    EXPECT_NE(Rational(value_of(t, "R")), 0);
  }
  EXPECT_EQ(code_of([] { check_buse(2, {}); }), ErrorCode::kInvalidDimension);
}

TEST(CheckBuse, FaultInjectionFails) {
  SpecializationPlan plan;
  plan.trials = 8;
  CheckOptions opts;
  opts.fault_trial = 5;
  auto rep = check_buse(3, plan, opts);
  EXPECT_EQ(rep.verdict, Verdict::kFail);
  for (const auto& t : rep.trials) EXPECT_EQ(t.ok, t.index != 5);
}

TEST(CheckWitness, QuarticAndSingleSubcheck) {
  auto rep = check_witness(4, {});
  EXPECT_EQ(rep.verdict, Verdict::kPass);
  EXPECT_EQ(rep.trials.size(), 4u);
  EXPECT_EQ(buse_a_factor(buse_witness(4), {"x", "y", "z"}, {"y", "z"}, Point{{"w", Rational(7)}}), 0);
  EXPECT_EQ(code_of([] { check_witness(3, {}); }), ErrorCode::kInvalidDimension);
}

TEST(CheckRemark, Values) {
  auto rep = check_remark();
  EXPECT_EQ(rep.verdict, Verdict::kPass);
  EXPECT_EQ(rep.mode, CheckMode::kExact);
  ASSERT_EQ(rep.trials.size(), 4u);
  EXPECT_EQ(value_of(rep.trials[0], "hproj"), "1");
  EXPECT_TRUE(proportional(P(value_of(rep.trials[1], "delta")), P("k")));
  EXPECT_EQ(value_of(rep.trials[3], "resultant"), "0");
}

TEST(Timeout, YieldsInconclusivePartialReport) {
  DeadlineScope scope(std::chrono::milliseconds(1));
  std::this_thread::sleep_for(std::chrono::milliseconds(5));
  auto rep = check_main(3, 4, {});
  EXPECT_TRUE(rep.timed_out);
  EXPECT_EQ(rep.verdict, Verdict::kInconclusive);
}

}  // namespace
}  // namespace discres
