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

#include "discres/discres.h"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "discres/deadline.hpp"
#include "discres/error.hpp"
#include "discres/euclid.hpp"
#include "discres/genform.hpp"
#include "discres/projection.hpp"
#include "discres/resultant.hpp"
#include "discres/verify.hpp"

struct discres_poly {
  discres::Poly value;
  std::vector<std::string> form_vars;
};

struct discres_cache {
  std::unique_ptr<discres::ProjCache> impl;
};

struct discres_report {
  discres::CheckReport value;
};

static_assert(DISCRES_INCOMPATIBLE_VARIABLES == static_cast<int>(discres::ErrorCode::kIncompatibleVariables));
static_assert(DISCRES_INFEASIBLE_SIZE == static_cast<int>(discres::ErrorCode::kInfeasibleSize));
static_assert(DISCRES_IO == static_cast<int>(discres::ErrorCode::kIo));
static_assert(DISCRES_FAIL == static_cast<int>(discres::Verdict::kFail));
static_assert(DISCRES_INCONCLUSIVE == static_cast<int>(discres::Verdict::kInconclusive));

namespace {

using discres::Error;
using discres::ErrorCode;

thread_local std::string last_error;
thread_local double timeout_seconds = 0;

discres_status fail(discres_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
discres_status guarded(F&& body) {
  try {
    std::optional<discres::DeadlineScope> scope;
    if (timeout_seconds > 0)
      scope.emplace(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(timeout_seconds)));
    body();
    return DISCRES_OK;
  } catch (const Error& e) {
    return fail(static_cast<discres_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DISCRES_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DISCRES_INTERNAL, e.what());
  }
}

std::vector<std::string> split_list(const char* s) {
  std::vector<std::string> out;
  if (s == nullptr) return out;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (const char* p = s; *p; ++p) {
    if (*p == ',') flush();
    else cur += *p;
  }
  flush();
  return out;
}

std::string join_list(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

discres_poly* wrap(discres::Poly p, std::vector<std::string> form_vars = {}) {
  return new discres_poly{std::move(p), std::move(form_vars)};
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::kInvalidArgument, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

#define DISCRES_REQUIRE(x) \
  if ((x) == nullptr) return fail(DISCRES_NULL_ARGUMENT, #x " is null")

}  // namespace

extern "C" {

const char* discres_version(void) { return "0.1.0"; }

const char* discres_status_name(discres_status status) {
  switch (status) {
    case DISCRES_OK: return "Ok";
    case DISCRES_NULL_ARGUMENT: return "NullArgument";
    case DISCRES_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= DISCRES_INCOMPATIBLE_VARIABLES && status <= DISCRES_IO)
    return discres::error_code_name(static_cast<ErrorCode>(status));
  return "Unknown";
}

const char* discres_last_error(void) { return last_error.c_str(); }

void discres_string_free(char* s) { std::free(s); }

discres_status discres_set_timeout(double seconds) {
  if (!(seconds >= 0)) return fail(DISCRES_INVALID_ARGUMENT, "timeout must be nonnegative");
  timeout_seconds = seconds;
  return DISCRES_OK;
}

discres_status discres_poly_parse(const char* text, const char* vars, discres_poly** out) {
  DISCRES_REQUIRE(text);
  DISCRES_REQUIRE(out);
  return guarded([&] {
    auto names = split_list(vars);
    *out = wrap(discres::parse(text, names.empty() ? discres::VarTable() : discres::VarTable(names)));
  });
}

discres_status discres_poly_from_json(const char* json, discres_poly** out) {
  DISCRES_REQUIRE(json);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = wrap(discres::from_json(json)); });
}

discres_status discres_poly_builtin(const char* builtin, discres_poly** out) {
  DISCRES_REQUIRE(builtin);
  DISCRES_REQUIRE(out);
  return guarded([&] {
    std::string_view s(builtin);
    std::vector<std::string> xyz{"x", "y", "z"};
    if (s == "remark") {
      *out = wrap(discres::remark_polynomial(), xyz);
    } else if (s.rfind("buse-witness:", 0) == 0) {
      *out = wrap(discres::buse_witness(parse_int(s.substr(13))), xyz);
    } else if (s.rfind("generic:", 0) == 0) {
      auto args = s.substr(8);
      auto comma = args.find(',');
      if (comma == std::string_view::npos) throw Error(ErrorCode::kInvalidArgument, "expected generic:n,d");
      auto g = discres::generic_form(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
      *out = wrap(g.body, g.xvars);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown builtin '" + std::string(s) + "' (generic:n,d, buse-witness:d, remark)");
    }
  });
}

void discres_poly_free(discres_poly* p) { delete p; }

discres_status discres_poly_to_string(const discres_poly* p, char** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = dup_string(discres::canonical_string(p->value)); });
}

discres_status discres_poly_to_json(const discres_poly* p, char** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = dup_string(discres::to_json(p->value)); });
}

discres_status discres_poly_variables(const discres_poly* p, char** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = dup_string(join_list(p->value.vars().names())); });
}

discres_status discres_poly_form_variables(const discres_poly* p, char** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = dup_string(join_list(p->form_vars)); });
}

discres_status discres_poly_set_form_variables(discres_poly* p, const char* vars) {
  DISCRES_REQUIRE(p);
  return guarded([&] {
    auto names = split_list(vars);
    for (const auto& n : names) {
      if (!discres::is_identifier(n)) throw Error(ErrorCode::kInvalidArgument, "bad variable name '" + n + "'");
    }
    p->form_vars = std::move(names);
  });
}

discres_status discres_poly_equal(const discres_poly* a, const discres_poly* b, int* out) {
  DISCRES_REQUIRE(a);
  DISCRES_REQUIRE(b);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = a->value == b->value ? 1 : 0; });
}

discres_status discres_sqrfree(const discres_poly* p, discres_poly** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = wrap(discres::sqrfree_part(p->value), p->form_vars); });
}

discres_status discres_gcd(const discres_poly* p, const discres_poly* q, discres_poly** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(q);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = wrap(discres::gcd(p->value, q->value)); });
}

discres_status discres_resultant(const discres_poly* p, const discres_poly* q, const char* var, discres_poly** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(q);
  DISCRES_REQUIRE(var);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = wrap(discres::resultant(p->value, q->value, var)); });
}

discres_status discres_discriminant(const discres_poly* p, const char* var, discres_poly** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(var);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = wrap(discres::discriminant(p->value, var)); });
}

discres_status discres_bproj(const discres_poly* p, const char* order, discres_cache* cache, discres_poly** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(order);
  DISCRES_REQUIRE(out);
  return guarded([&] {
    *out = wrap(discres::bproj(p->value, split_list(order), cache ? cache->impl.get() : nullptr));
  });
}

discres_status discres_hproj(const discres_poly* p, const char* order, discres_cache* cache, discres_poly** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(order);
  DISCRES_REQUIRE(out);
  return guarded([&] {
    *out = wrap(discres::hproj(p->value, split_list(order), cache ? cache->impl.get() : nullptr));
  });
}

discres_status discres_multi_discriminant(const discres_poly* p, const char* vars, discres_poly** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(out);
  return guarded([&] {
    auto xs = vars ? split_list(vars) : p->form_vars;
    if (xs.empty()) throw Error(ErrorCode::kInvalidArgument, "no form variables given");
    *out = wrap(discres::multi_discriminant(p->value, xs));
  });
}

discres_status discres_macaulay(const discres_poly* const* forms, size_t count, const char* vars, int allow_large,
                                discres_poly** out) {
  DISCRES_REQUIRE(forms);
  DISCRES_REQUIRE(vars);
  DISCRES_REQUIRE(out);
  for (size_t i = 0; i < count; ++i) DISCRES_REQUIRE(forms[i]);
  return guarded([&] {
    std::vector<discres::Poly> fs;
    for (size_t i = 0; i < count; ++i) fs.push_back(forms[i]->value);
    auto sys = discres::MacaulaySystem::make(std::move(fs), split_list(vars));
    discres::MacaulayOptions options;
    options.allow_large = allow_large != 0;
    *out = wrap(discres::macaulay_resultant(sys, options));
  });
}

discres_status discres_taylor_delta(const discres_poly* p, int i, const char* var, const char* var_prime,
                                    discres_poly** out) {
  DISCRES_REQUIRE(p);
  DISCRES_REQUIRE(var);
  DISCRES_REQUIRE(var_prime);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = wrap(discres::taylor_delta(p->value, i, var, var_prime)); });
}

discres_status discres_cache_open(const char* dir, int verify, discres_cache** out) {
  DISCRES_REQUIRE(out);
  return guarded([&] {
    auto c = std::make_unique<discres_cache>();
    if (dir == nullptr || *dir == '\0') {
      c->impl = std::make_unique<discres::ProjCache>();
      c->impl->set_verify_mode(verify != 0);
    } else {
      c->impl = std::make_unique<discres::ProjCache>(std::filesystem::path(dir), verify != 0);
    }
    *out = c.release();
  });
}

void discres_cache_free(discres_cache* c) { delete c; }

discres_status discres_cache_clear(discres_cache* c) {
  DISCRES_REQUIRE(c);
  return guarded([&] { c->impl->clear(); });
}

discres_status discres_cache_stats_get(const discres_cache* c, discres_cache_stats* out) {
  DISCRES_REQUIRE(c);
  DISCRES_REQUIRE(out);
  return guarded([&] {
    auto s = c->impl->stats();
    *out = {s.hits, s.misses, s.verified, s.disk_entries, s.disk_bytes};
  });
}

void discres_check_options_init(discres_check_options* opts) {
  if (opts == nullptr) return;
  *opts = discres_check_options{};
  opts->n = 3;
  opts->d = 2;
  opts->trials = 5;
  opts->range = 1000000;
  opts->fault_trial = -1;
}

discres_status discres_check(const char* name, const discres_check_options* opts, discres_report** out) {
  DISCRES_REQUIRE(name);
  DISCRES_REQUIRE(out);
  discres_check_options defaults;
  discres_check_options_init(&defaults);
  const discres_check_options& o = opts ? *opts : defaults;
  return guarded([&] {
    discres::SpecializationPlan plan;
    plan.seed = o.seed;
    plan.trials = o.trials;
    plan.range = o.range;
    plan.kept_symbolic = split_list(o.kept_symbolic);
    discres::CheckOptions options;
    options.force = o.force != 0;
    options.conjecture_mode = o.conjecture_mode != 0;
    if (o.fault_trial >= 0) options.fault_trial = o.fault_trial;
    options.cache = o.cache ? o.cache->impl.get() : nullptr;
    std::string_view n(name);
    discres::CheckReport rep;
    if (n == "main") rep = discres::check_main(o.n, o.d, plan, options);
    else if (n == "main2") rep = discres::check_main2(o.d, plan, options);
    else if (n == "buse") rep = discres::check_buse(o.d, plan, options);
    else if (n == "witness") rep = discres::check_witness(o.d, plan, options);
    else if (n == "remark") rep = discres::check_remark(options);
    else throw Error(ErrorCode::kInvalidArgument, "unknown check '" + std::string(n) + "'");
    *out = new discres_report{std::move(rep)};
  });
}

void discres_report_free(discres_report* r) { delete r; }

discres_verdict discres_report_verdict(const discres_report* r) {
  if (r == nullptr) return DISCRES_INCONCLUSIVE;
  return static_cast<discres_verdict>(r->value.verdict);
}

int discres_report_timed_out(const discres_report* r) { return r != nullptr && r->value.timed_out ? 1 : 0; }

discres_status discres_report_to_json(const discres_report* r, int include_timing, char** out) {
  DISCRES_REQUIRE(r);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = dup_string(r->value.to_json(include_timing != 0)); });
}

discres_status discres_report_to_text(const discres_report* r, int include_timing, char** out) {
  DISCRES_REQUIRE(r);
  DISCRES_REQUIRE(out);
  return guarded([&] { *out = dup_string(r->value.to_text(include_timing != 0)); });
}

}  // extern "C"
