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

#ifndef DISCRES_VERIFY_HPP
#define DISCRES_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discres/genform.hpp"
#include "discres/poly.hpp"
#include "discres/projection.hpp"

namespace discres {

// How parameters are drawn in probabilistic checks. Values are uniform in
// [-range, range] with 0 excluded, so no leading coefficient of a generic
// form is zeroed by the draw itself.
struct SpecializationPlan {
  std::uint64_t seed = 0;
  int trials = 5;
  std::vector<std::string> kept_symbolic;  // empty: the check picks
  long range = 1000000;

  // InvalidArgument unless trials >= 1, range >= 2 and kept_symbolic is a
  // subset of `params`.
  void validate(const std::vector<std::string>& params) const;
};

enum class CheckMode { kExact, kProbabilistic };
enum class Verdict { kPass, kFail, kInconclusive };

const char* to_string(CheckMode m);
const char* to_string(Verdict v);

struct TrialRecord {
  int index = 0;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::vector<std::pair<std::string, std::string>> values;
  bool ok = true;
};

struct CheckReport {
  std::string check;
  CheckMode mode = CheckMode::kExact;
  Verdict verdict = Verdict::kInconclusive;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;
  std::int64_t wall_ms = 0;
  std::vector<std::string> notes;
  bool timed_out = false;

  // {"check","mode","verdict","seed","trials","wall_ms","notes"}; with
  // include_timing false, wall_ms is written as 0.
  std::string to_json(bool include_timing = true) const;
  std::string to_text(bool include_timing = true) const;
};

struct CheckOptions {
  bool force = false;            // run sizes outside the feasibility table
  bool conjecture_mode = false;  // check_main on odd d
  std::optional<int> fault_trial;  // check_buse: corrupt R in this trial
  ProjCache* cache = nullptr;
};

// Per trial: keep one randomly chosen variable, bind the rest, and test
// exact univariate divisibility of Q by P. One-sided: a fail with nonzero
// specialized P is a certified counterexample.
CheckReport probabilistic_divides(const Poly& P, const Poly& Q, const SpecializationPlan& plan);

// Ratio-constancy harness: per trial draw every parameter, evaluate
// (L, R) and require both nonzero and L/R identical across trials. Trials
// where either side vanishes are redrawn.
using RatioTrial = std::function<std::pair<Rational, Rational>(const Point&, int trial)>;
CheckReport ratio_constancy(const std::string& name, const std::vector<std::string>& params,
                            const SpecializationPlan& plan, const RatioTrial& trial);

// Delta(f) divides Hproj(f, [x_n, ..., x_1]) for the generic form of even
// degree d: exact for the small cases, probabilistic otherwise.
CheckReport check_main(int n, int d, const SpecializationPlan& plan, const CheckOptions& options = {});
// Hproj(f, [x, y, z]) equals Delta(f) up to a constant.
CheckReport check_main2(int d, const SpecializationPlan& plan, const CheckOptions& options = {});
// disc_y(disc_z(f(1, y, z))) / (C Delta a^3 b^2) is constant.
CheckReport check_buse(int d, const SpecializationPlan& plan, const CheckOptions& options = {});
// The four vanishing claims on z^d + w z x^(d-1) + y^d.
CheckReport check_witness(int d, const SpecializationPlan& plan, const CheckOptions& options = {});
// xy + y^2 + xz + yz + k z^2: Hproj = 1, Delta = +-k.
CheckReport check_remark(const CheckOptions& options = {});

// Whether check_main / check_main2 run for these sizes without `force`, and
// in which mode.
bool main_is_exact(int n, int d);
bool main_is_feasible(int n, int d);
bool main2_is_feasible(int d);

}  // namespace discres

#endif  // DISCRES_VERIFY_HPP
