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

#include "discres/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "discres/deadline.hpp"
#include "discres/error.hpp"
#include "discres/euclid.hpp"
#include "discres/resultant.hpp"
#include "json.hpp"

namespace discres {
namespace {

constexpr int kMaxRedraws = 8;

enum class Outcome { kOk, kFail, kDegenerate };

// Each (seed, trial, attempt) gets its own generator, so a trial's draws do
// not depend on what earlier trials consumed.
std::mt19937_64 trial_rng(std::uint64_t seed, int trial, int attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(attempt)};
  return std::mt19937_64(seq);
}

long draw_nonzero(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  for (;;) {
    long v = dist(rng);
    if (v != 0) return v;
  }
}

std::vector<std::string> pick(std::mt19937_64& rng, const std::vector<std::string>& from, std::size_t k) {
  std::vector<std::string> pool = from, out;
  for (std::size_t i = 0; i < k && !pool.empty(); ++i) {
    std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
    std::size_t j = dist(rng);
    out.push_back(pool[j]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return out;
}

// Binds every name not in `keep`, recording the bindings in `rec`.
Point bind_others(std::mt19937_64& rng, const std::vector<std::string>& names, const std::vector<std::string>& keep,
                  long range, TrialRecord& rec) {
  Point point;
  for (const auto& name : names) {
    if (std::find(keep.begin(), keep.end(), name) != keep.end()) continue;
    Rational v(draw_nonzero(rng, range));
    point[name] = v;
    rec.bindings.emplace_back(name, to_string(v));
  }
  return point;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

// Runs plan.trials trials, redrawing degenerate ones. Sets the verdict to
// fail on any failed trial, inconclusive when a trial stays degenerate.
void run_trials(CheckReport& rep, const SpecializationPlan& plan,
                const std::function<Outcome(std::mt19937_64&, TrialRecord&)>& body) {
  int redraws = 0;
  bool failed = false, stuck = false;
  for (int t = 0; t < plan.trials; ++t) {
    TrialRecord rec;
    Outcome outcome = Outcome::kDegenerate;
    for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
      poll_deadline();
      rec = TrialRecord{};
      rec.index = t;
      auto rng = trial_rng(plan.seed, t, attempt);
      try {
        outcome = body(rng, rec);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDegenerateTrial) throw;
        outcome = Outcome::kDegenerate;
      }
      if (outcome != Outcome::kDegenerate) break;
      ++redraws;
    }
    rec.ok = outcome == Outcome::kOk;
    if (outcome == Outcome::kFail) failed = true;
    if (outcome == Outcome::kDegenerate) {
      stuck = true;
      rec.values.emplace_back("degenerate", "true");
    }
    rep.trials.push_back(std::move(rec));
  }
  if (redraws > 0) rep.notes.push_back("redraws: " + std::to_string(redraws));
  rep.verdict = failed ? Verdict::kFail : stuck ? Verdict::kInconclusive : Verdict::kPass;
}

CheckReport run_check(std::string name, CheckMode mode, std::uint64_t seed,
                      const std::function<void(CheckReport&)>& body) {
  CheckReport rep;
  rep.check = std::move(name);
  rep.mode = mode;
  rep.seed = seed;
  auto start = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTimeout) throw;
    rep.timed_out = true;
    rep.verdict = Verdict::kInconclusive;
    rep.notes.push_back("timed out");
  }
  rep.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<std::string> reversed(std::vector<std::string> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::string degree_profile(const Poly& p, const std::vector<std::string>& names) {
  std::string out = std::to_string(total_degree(p));
  for (const auto& n : names) out += " " + n + ":" + std::to_string(degree(p, n));
  return out;
}

}  // namespace

void SpecializationPlan::validate(const std::vector<std::string>& params) const {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  if (range < 2) throw Error(ErrorCode::kInvalidArgument, "value range must be at least 2");
  for (const auto& k : kept_symbolic) {
    if (std::find(params.begin(), params.end(), k) == params.end())
      throw Error(ErrorCode::kInvalidArgument, "kept-symbolic name " + k + " is not a parameter");
  }
}

const char* to_string(CheckMode m) { return m == CheckMode::kExact ? "exact" : "probabilistic"; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string CheckReport::to_json(bool include_timing) const {
  using Json = nlohmann::ordered_json;
  Json j;
  j["check"] = check;
  j["mode"] = to_string(mode);
  j["verdict"] = to_string(verdict);
  j["seed"] = seed;
  Json ts = Json::array();
  for (const auto& t : trials) {
    Json jt;
    jt["index"] = t.index;
    jt["ok"] = t.ok;
    Json b = Json::object();
    for (const auto& [k, v] : t.bindings) b[k] = v;
    jt["bindings"] = b;
    Json vals = Json::object();
    for (const auto& [k, v] : t.values) vals[k] = v;
    jt["values"] = vals;
    ts.push_back(std::move(jt));
  }
  j["trials"] = std::move(ts);
  j["wall_ms"] = include_timing ? wall_ms : 0;
  j["notes"] = notes;
  return j.dump(2);
}

std::string CheckReport::to_text(bool include_timing) const {
  std::ostringstream os;
  os << "check " << check << ": " << to_string(verdict) << " (" << to_string(mode) << ", seed " << seed << ", "
     << trials.size() << (trials.size() == 1 ? " trial" : " trials");
  if (include_timing) os << ", " << wall_ms << " ms";
  os << ")\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  for (const auto& t : trials) {
    os << "  trial " << t.index << ": " << (t.ok ? "ok" : "FAILED") << "\n";
    if (t.ok) continue;
    for (const auto& [k, v] : t.bindings) os << "    " << k << " = " << v << "\n";
    for (const auto& [k, v] : t.values) os << "    " << k << ": " << v << "\n";
  }
  return os.str();
}

bool main_is_exact(int n, int d) { return d == 2 && n >= 2 && n <= 3; }

bool main_is_feasible(int n, int d) {
  if (n < 2 || d < 1) return false;
  if (n == 2) return d <= 12;
  if (n == 3) return d <= 4;
  return n == 4 && d <= 2;
}

bool main2_is_feasible(int d) { return d >= 1 && d <= 3; }

CheckReport probabilistic_divides(const Poly& P, const Poly& Q, const SpecializationPlan& plan) {
  if (P.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "divisor is zero");
  VarTable table = P.vars().merged_with(Q.vars());
  Poly p = P.over(table), q = Q.over(table);
  std::vector<std::string> names;
  for (const auto& n : table.names()) {
    if (degree(p, n) > 0 || degree(q, n) > 0) names.push_back(n);
  }
  plan.validate(names);
  return run_check("divides", CheckMode::kProbabilistic, plan.seed, [&](CheckReport& rep) {
    bool nonconstant = false;
    run_trials(rep, plan, [&](std::mt19937_64& rng, TrialRecord& rec) {
      std::vector<std::string> keep =
          !plan.kept_symbolic.empty() ? std::vector<std::string>{plan.kept_symbolic.front()} : pick(rng, names, 1);
      Point point = bind_others(rng, names, keep, plan.range, rec);
      Poly ps = substitute(p, point), qs = substitute(q, point);
      if (ps.is_zero()) return Outcome::kDegenerate;
      rec.values.emplace_back("survivor", keep.empty() ? "" : keep.front());
      rec.values.emplace_back("P", canonical_string(ps));
      rec.values.emplace_back("Q", canonical_string(qs));
      if (!ps.is_constant()) nonconstant = true;
      return try_exact_div(qs, ps) ? Outcome::kOk : Outcome::kFail;
    });
    if (rep.verdict == Verdict::kPass && !nonconstant) {
      rep.verdict = Verdict::kInconclusive;
      rep.notes.push_back("every specialized divisor was constant");
    }
  });
}

CheckReport ratio_constancy(const std::string& name, const std::vector<std::string>& params,
                            const SpecializationPlan& plan, const RatioTrial& trial) {
  plan.validate(params);
  return run_check(name, CheckMode::kProbabilistic, plan.seed, [&](CheckReport& rep) {
    std::optional<Rational> first;
    run_trials(rep, plan, [&](std::mt19937_64& rng, TrialRecord& rec) {
      Point point = bind_others(rng, params, {}, plan.range, rec);
      auto [L, R] = trial(point, rec.index);
      if (sgn(L) == 0 || sgn(R) == 0) return Outcome::kDegenerate;
      Rational ratio = L / R;
      rec.values.emplace_back("L", to_string(L));
      rec.values.emplace_back("R", to_string(R));
      rec.values.emplace_back("ratio", to_string(ratio));
      if (!first) first = ratio;
      return ratio == *first ? Outcome::kOk : Outcome::kFail;
    });
    if (first) rep.notes.push_back("ratio: " + to_string(*first));
  });
}

CheckReport check_main(int n, int d, const SpecializationPlan& plan, const CheckOptions& options) {
  if (n < 2 || d < 1) throw Error(ErrorCode::kInvalidDimension, "check main needs n >= 2 and d >= 1");
  if (d % 2 != 0 && !options.conjecture_mode)
    throw Error(ErrorCode::kInvalidArgument, "check main needs an even degree; odd degrees run only in conjecture mode");
  if (!main_is_feasible(n, d) && !options.force)
    throw Error(ErrorCode::kInfeasibleSize,
                "check main is not configured for n=" + std::to_string(n) + ", d=" + std::to_string(d));
  GenericForm g = generic_form(n, d);
  ProjOrder order = reversed(g.xvars);
  std::string name = "main(" + std::to_string(n) + "," + std::to_string(d) + ")";

  if (main_is_exact(n, d)) {
    auto rep = run_check(name, CheckMode::kExact, plan.seed, [&](CheckReport& rep) {
      NormalizedPoly delta = multi_discriminant(g);
      NormalizedPoly h = hproj(g.body, order, options.cache);
      TrialRecord rec;
      rec.values.emplace_back("order", join(order));
      rec.values.emplace_back("delta", canonical_string(delta));
      rec.values.emplace_back("hproj", canonical_string(h));
      auto quotient = try_exact_div(h, delta);
      rec.ok = quotient.has_value();
      if (quotient) rec.values.emplace_back("quotient", canonical_string(*quotient));
      rep.trials.push_back(std::move(rec));
      rep.verdict = rep.trials.back().ok ? Verdict::kPass : Verdict::kFail;
    });
    if (options.conjecture_mode && d % 2 != 0) rep.notes.insert(rep.notes.begin(), "conjecture-mode");
    return rep;
  }

  plan.validate(g.params);
  auto rep = run_check(name, CheckMode::kProbabilistic, plan.seed, [&](CheckReport& rep) {
    bool nonconstant = false;
    run_trials(rep, plan, [&](std::mt19937_64& rng, TrialRecord& rec) {
      std::vector<std::string> keep = !plan.kept_symbolic.empty() ? plan.kept_symbolic : pick(rng, g.params, 1);
      Point point = bind_others(rng, g.params, keep, plan.range, rec);
      Poly f = substitute(g.body, point);
      NormalizedPoly delta = multi_discriminant(f, g.xvars);
      if (delta.value().is_zero()) return Outcome::kDegenerate;
      NormalizedPoly h = hproj(f, order, options.cache);
      rec.values.emplace_back("kept", join(keep));
      rec.values.emplace_back("delta", canonical_string(delta));
      rec.values.emplace_back("hproj", canonical_string(h));
      if (!delta.value().is_constant()) nonconstant = true;
      return divides(delta, h) ? Outcome::kOk : Outcome::kFail;
    });
    if (rep.verdict == Verdict::kPass && !nonconstant) {
      rep.verdict = Verdict::kInconclusive;
      rep.notes.push_back("every specialized discriminant was constant");
    }
  });
  if (options.conjecture_mode && d % 2 != 0) rep.notes.insert(rep.notes.begin(), "conjecture-mode");
  return rep;
}

CheckReport check_main2(int d, const SpecializationPlan& plan, const CheckOptions& options) {
  if (d < 1) throw Error(ErrorCode::kInvalidDimension, "check main2 needs d >= 1");
  if (!main2_is_feasible(d) && !options.force)
    throw Error(ErrorCode::kInfeasibleSize, "check main2 is not configured for d=" + std::to_string(d));
  GenericForm g = generic_form(3, d);
  ProjOrder order = g.xvars;
  std::string name = "main2(" + std::to_string(d) + ")";

  if (d <= 2) {
    return run_check(name, CheckMode::kExact, plan.seed, [&](CheckReport& rep) {
      NormalizedPoly delta = multi_discriminant(g);
      NormalizedPoly h = hproj(g.body, order, options.cache);
      TrialRecord rec;
      rec.values.emplace_back("delta", canonical_string(delta));
      rec.values.emplace_back("hproj", canonical_string(h));
      Rational ratio;
      rec.ok = proportional(h, delta, &ratio);
      if (rec.ok) rec.values.emplace_back("ratio", to_string(ratio));
      rep.trials.push_back(std::move(rec));

      if (d == 2) {
        // sqrfree(Hp(f, [y, z])) against Delta(f) Delta(f(0, y, z)) x.
        const std::string& x = g.xvars[0];
        Poly f0 = substitute(g.body, Point{{x, Rational(0)}});
        NormalizedPoly delta0 = multi_discriminant(f0, {g.xvars[1], g.xvars[2]});
        Poly rhs = delta.value() * delta0.value() * Poly::variable(g.body.vars(), x);
        NormalizedPoly lhs = sqrfree_part(hproj(g.body, {g.xvars[1], g.xvars[2]}, options.cache));
        TrialRecord id;
        id.index = 1;
        id.values.emplace_back("sqrfree_hp_yz", canonical_string(lhs));
        id.values.emplace_back("delta_f0", canonical_string(delta0));
        id.ok = proportional(lhs, rhs, &ratio);
        if (id.ok) id.values.emplace_back("ratio", to_string(ratio));
        rep.trials.push_back(std::move(id));
      }
      bool ok = std::all_of(rep.trials.begin(), rep.trials.end(), [](const TrialRecord& t) { return t.ok; });
      rep.verdict = ok ? Verdict::kPass : Verdict::kFail;
    });
  }

  plan.validate(g.params);
  return run_check(name, CheckMode::kProbabilistic, plan.seed, [&](CheckReport& rep) {
    run_trials(rep, plan, [&](std::mt19937_64& rng, TrialRecord& rec) {
      std::vector<std::string> keep = !plan.kept_symbolic.empty() ? plan.kept_symbolic : pick(rng, g.params, 2);
      Point point = bind_others(rng, g.params, keep, plan.range, rec);
      Poly f = substitute(g.body, point);
      NormalizedPoly delta = multi_discriminant(f, g.xvars);
      if (delta.value().is_zero()) return Outcome::kDegenerate;
      NormalizedPoly h = hproj(f, order, options.cache);
      std::string dd = degree_profile(delta, keep), hd = degree_profile(h, keep);
      rec.values.emplace_back("kept", join(keep));
      rec.values.emplace_back("delta_degrees", dd);
      rec.values.emplace_back("hproj_degrees", hd);
      rec.values.emplace_back("delta", canonical_string(delta));
      rec.values.emplace_back("hproj", canonical_string(h));
      return divides(delta, h) && dd == hd ? Outcome::kOk : Outcome::kFail;
    });
    if (d != 3 || rep.verdict == Verdict::kFail) return;
    // a_{y,z} and a_{z,y} are distinct: their ratio moves between two
    // points of parameter space.
    TrialRecord rec;
    rec.index = plan.trials;
    std::vector<Rational> ratios;
    for (int attempt = 0; attempt <= kMaxRedraws && ratios.size() < 2; ++attempt) {
      auto rng = trial_rng(plan.seed, plan.trials, attempt);
      TrialRecord scratch;
      Point point = bind_others(rng, g.params, {}, plan.range, scratch);
      Rational ayz = buse_a_factor(g.body, g.xvars, {g.xvars[1], g.xvars[2]}, point);
      Rational azy = buse_a_factor(g.body, g.xvars, {g.xvars[2], g.xvars[1]}, point);
      if (sgn(ayz) == 0 || sgn(azy) == 0) continue;
      ratios.push_back(ayz / azy);
      rec.values.emplace_back("a_ratio_" + std::to_string(ratios.size()), to_string(ratios.back()));
    }
    rec.ok = ratios.size() == 2 && ratios[0] != ratios[1];
    rep.notes.push_back(rec.ok ? "a_{y,z} and a_{z,y} are not proportional"
                               : "could not separate a_{y,z} from a_{z,y}");
    if (!rec.ok) rep.verdict = Verdict::kInconclusive;
    rep.trials.push_back(std::move(rec));
  });
}

CheckReport check_buse(int d, const SpecializationPlan& plan, const CheckOptions& options) {
  if (d < 3) throw Error(ErrorCode::kInvalidDimension, "check buse needs d >= 3");
  if (d > 5 && !options.force)
    throw Error(ErrorCode::kInfeasibleSize, "check buse is not configured for d=" + std::to_string(d));
  GenericForm g = generic_form(3, d);
  const std::string &x = g.xvars[0], &y = g.xvars[1], &z = g.xvars[2];
  const std::string& c_name = g.pure_power_param(2);
  BusePair pair{z, y};
  auto rep = ratio_constancy("buse(" + std::to_string(d) + ")", g.params, plan, [&](const Point& point, int t) {
    Poly f = substitute(g.body, point);
    Poly affine = substitute(f, Point{{x, Rational(1)}});
    Poly inner = discriminant(affine, z);
    if (inner.is_zero()) throw Error(ErrorCode::kDegenerateTrial, "inner discriminant vanishes");
    auto L = discriminant(inner, y).constant_value();
    Point rpoint = point;
    if (options.fault_trial && *options.fault_trial == t) rpoint[c_name] += 1;
    Rational C = rpoint.at(c_name);
    Rational delta = multi_discriminant_at(g.body, g.xvars, rpoint);
    Rational a = buse_a_factor(g.body, g.xvars, pair, rpoint);
    Rational b = buse_b_factor(g.body, g.xvars, pair, rpoint);
    return std::pair<Rational, Rational>{L.value_or(Rational(0)), C * delta * a * a * a * b * b};
  });
  if (d == 3) rep.notes.push_back("b = 1 at d = 3");
  if (options.fault_trial) rep.notes.push_back("fault injected in trial " + std::to_string(*options.fault_trial));
  return rep;
}

CheckReport check_witness(int d, const SpecializationPlan& plan, const CheckOptions& options) {
  (void)options;
  if (d < 4) throw Error(ErrorCode::kInvalidDimension, "check witness needs d >= 4");
  if (d > 5 && !options.force)
    throw Error(ErrorCode::kInfeasibleSize, "check witness is not configured for d=" + std::to_string(d));
  plan.validate({"w"});
  Poly F = buse_witness(d);
  std::vector<std::string> xvars{"x", "y", "z"};
  BusePair yz{"y", "z"}, zy{"z", "y"};
  return run_check("witness(" + std::to_string(d) + ")", CheckMode::kProbabilistic, plan.seed, [&](CheckReport& rep) {
    auto rng = trial_rng(plan.seed, 0, 0);
    Rational w(draw_nonzero(rng, plan.range));
    Point at_w{{"w", w}}, at_zero{{"w", Rational(0)}};
    auto record = [&](const std::string& claim, std::vector<std::pair<std::string, Rational>> values, bool ok) {
      TrialRecord rec;
      rec.index = static_cast<int>(rep.trials.size());
      rec.bindings.emplace_back("w", to_string(w));
      rec.values.emplace_back("claim", claim);
      for (auto& [k, v] : values) rec.values.emplace_back(k, to_string(v));
      rec.ok = ok;
      rep.trials.push_back(std::move(rec));
    };
    Rational a_yz = buse_a_factor(F, xvars, yz, at_w);
    record("a_{y,z}(F) = 0", {{"a_yz", a_yz}}, sgn(a_yz) == 0);
    Rational b_yz = buse_b_squared(F, xvars, yz, at_w);
    record("b_{y,z}(F) = 0", {{"b_yz_squared", b_yz}}, sgn(b_yz) == 0);
    Rational a_zy = buse_a_factor(F, xvars, zy, at_w), a_zy0 = buse_a_factor(F, xvars, zy, at_zero);
    record("w | a_{z,y}(F) != 0", {{"a_zy", a_zy}, {"a_zy_at_0", a_zy0}}, sgn(a_zy) != 0 && sgn(a_zy0) == 0);
    Rational b_zy = buse_b_squared(F, xvars, zy, at_w), b_zy0 = buse_b_squared(F, xvars, zy, at_zero);
    record("w | b_{z,y}(F) != 0", {{"b_zy_squared", b_zy}, {"b_zy_squared_at_0", b_zy0}},
           sgn(b_zy) != 0 && sgn(b_zy0) == 0);
    bool ok = std::all_of(rep.trials.begin(), rep.trials.end(), [](const TrialRecord& t) { return t.ok; });
    rep.verdict = ok ? Verdict::kPass : Verdict::kFail;
  });
}

CheckReport check_remark(const CheckOptions& options) {
  return run_check("remark", CheckMode::kExact, 0, [&](CheckReport& rep) {
    Poly F = remark_polynomial();
    std::vector<std::string> xvars{"x", "y", "z"};
    Poly k = Poly::variable(F.vars(), "k");
    auto add = [&](std::string claim, std::vector<std::pair<std::string, std::string>> values, bool ok) {
      TrialRecord rec;
      rec.index = static_cast<int>(rep.trials.size());
      rec.values.emplace_back("claim", std::move(claim));
      for (auto& kv : values) rec.values.push_back(std::move(kv));
      rec.ok = ok;
      rep.trials.push_back(std::move(rec));
    };
    NormalizedPoly h = hproj(F, xvars, options.cache);
    add("Hproj(F, [x, y, z]) = 1", {{"hproj", canonical_string(h)}}, h.is_one());
    // The gradient resultant carries an integer content; Delta is its
    // primitive part.
    Poly raw = macaulay_resultant(gradient_system(F, xvars));
    NormalizedPoly delta = multi_discriminant(F, xvars);
    Rational ratio;
    bool prop = proportional(delta, k, &ratio);
    add("Delta(F) = +-k",
        {{"resultant", canonical_string(raw)}, {"delta", canonical_string(delta)},
         {"ratio", prop ? to_string(ratio) : "none"}},
        prop && abs(ratio) == 1);
    add("Hproj | Delta", {}, divides(h, delta));
    Poly F0 = substitute(F, Point{{"k", Rational(0)}});
    NormalizedPoly h0 = hproj(F0, xvars, options.cache);
    Poly raw0 = macaulay_resultant(gradient_system(F0, xvars));
    add("k = 0: Delta = 0 and Hproj = 1", {{"hproj", canonical_string(h0)}, {"resultant", canonical_string(raw0)}},
        raw0.is_zero() && h0.is_one());
    bool ok = std::all_of(rep.trials.begin(), rep.trials.end(), [](const TrialRecord& t) { return t.ok; });
    rep.verdict = ok ? Verdict::kPass : Verdict::kFail;
  });
}

}  // namespace discres
