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

// discres command-line tool. Everything goes through the C interface.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "discres/discres.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct PolyFree {
  void operator()(discres_poly* p) const { discres_poly_free(p); }
};
struct CacheFree {
  void operator()(discres_cache* c) const { discres_cache_free(c); }
};
struct ReportFree {
  void operator()(discres_report* r) const { discres_report_free(r); }
};
using PolyPtr = std::unique_ptr<discres_poly, PolyFree>;
using CachePtr = std::unique_ptr<discres_cache, CacheFree>;
using ReportPtr = std::unique_ptr<discres_report, ReportFree>;

struct Failure {
  discres_status status;
  std::string message;
};

void check(discres_status s) {
  if (s != DISCRES_OK) throw Failure{s, discres_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  discres_string_free(s);
  return out;
}

struct Config {
  std::string format = "text";
  double timeout = 600;
  std::uint64_t seed = 0;
  std::string cache_dir;
  bool no_cache = false;
  bool verify_cache = false;
  bool no_timing = false;

  std::vector<std::string> polys, files, builtins;
  std::string vars;

  std::string var, order, form_vars;
  bool allow_large = false;

  int n = 3, d = 2, trials = 5, fault_trial = -1;
  long range = 1000000;
  std::string kept;
  bool conjecture = false, force = false;

  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  bool json() const { return format == "json"; }

  // Each library call gets what is left of the per-command budget.
  void arm() const {
    double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double left = timeout - used;
    if (left <= 0) throw Failure{DISCRES_TIMEOUT, "command exceeded its time budget"};
    check(discres_set_timeout(left));
  }
};

std::string resolved_cache_dir(const Config& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("DISCRES_CACHE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/discres";
  return {};
}

CachePtr open_cache(const Config& cfg) {
  discres_cache* c = nullptr;
  std::string dir = cfg.no_cache ? std::string() : resolved_cache_dir(cfg);
  check(discres_cache_open(dir.c_str(), cfg.verify_cache ? 1 : 0, &c));
  return CachePtr(c);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{DISCRES_IO, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inputs in the order --poly, --file, --builtin.
std::vector<PolyPtr> inputs(const Config& cfg) {
  std::vector<PolyPtr> out;
  const char* vars = cfg.vars.empty() ? nullptr : cfg.vars.c_str();
  for (const auto& text : cfg.polys) {
    discres_poly* p = nullptr;
    check(discres_poly_parse(text.c_str(), vars, &p));
    out.emplace_back(p);
  }
  for (const auto& path : cfg.files) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    discres_poly* p = nullptr;
    if (first != std::string::npos && text[first] == '{') check(discres_poly_from_json(text.c_str(), &p));
    else check(discres_poly_parse(text.c_str(), vars, &p));
    out.emplace_back(p);
  }
  for (const auto& name : cfg.builtins) {
    discres_poly* p = nullptr;
    check(discres_poly_builtin(name.c_str(), &p));
    out.emplace_back(p);
  }
  if (!cfg.form_vars.empty()) {
    for (auto& p : out) check(discres_poly_set_form_variables(p.get(), cfg.form_vars.c_str()));
  }
  return out;
}

std::vector<PolyPtr> exactly(const Config& cfg, std::size_t count) {
  auto in = inputs(cfg);
  if (in.size() != count)
    throw Failure{DISCRES_INVALID_ARGUMENT, "expected " + std::to_string(count) + " input polynomial" +
                                                (count == 1 ? "" : "s") + ", got " + std::to_string(in.size())};
  return in;
}

int emit(const Config& cfg, const discres_poly* p) {
  char* s = nullptr;
  check(cfg.json() ? discres_poly_to_json(p, &s) : discres_poly_to_string(p, &s));
  std::cout << take(s) << "\n";
  return kExitOk;
}

int emit(const Config& cfg, discres_poly* p) {
  PolyPtr owned(p);
  return emit(cfg, static_cast<const discres_poly*>(owned.get()));
}

ReportPtr run_check(const Config& cfg, const std::string& name, int n, int d, discres_cache* cache) {
  discres_check_options o;
  discres_check_options_init(&o);
  o.n = n;
  o.d = d;
  o.seed = cfg.seed;
  o.trials = cfg.trials;
  o.range = cfg.range;
  o.kept_symbolic = cfg.kept.empty() ? nullptr : cfg.kept.c_str();
  o.conjecture_mode = cfg.conjecture ? 1 : 0;
  o.force = cfg.force ? 1 : 0;
  o.fault_trial = cfg.fault_trial;
  o.cache = cache;
  cfg.arm();
  discres_report* r = nullptr;
  check(discres_check(name.c_str(), &o, &r));
  return ReportPtr(r);
}

int exit_code(const discres_report* r) {
  if (discres_report_timed_out(r)) return kExitError;
  switch (discres_report_verdict(r)) {
    case DISCRES_PASS: return kExitOk;
    case DISCRES_FAIL: return kExitCheckFailed;
    default: return kExitError;
  }
}

int cmd_check(const Config& cfg, const std::string& which) {
  auto cache = open_cache(cfg);
  struct Item {
    std::string name;
    int n, d;
  };
  std::vector<Item> items;
  if (which == "all") {
    items = {{"remark", 0, 0}, {"main2", 3, 1}, {"main2", 3, 2}, {"main", 2, 2}, {"main", 3, 2},
             {"main", 3, 4},   {"buse", 3, 3},  {"buse", 3, 4},  {"witness", 3, 4}, {"witness", 3, 5}};
  } else {
    items = {{which, cfg.n, cfg.d}};
  }
  std::vector<std::string> rendered;
  int worst = kExitOk;
  for (const auto& it : items) {
    ReportPtr r = run_check(cfg, it.name, it.n, it.d, cache.get());
    char* s = nullptr;
    int timing = cfg.no_timing ? 0 : 1;
    check(cfg.json() ? discres_report_to_json(r.get(), timing, &s) : discres_report_to_text(r.get(), timing, &s));
    rendered.push_back(take(s));
    int code = exit_code(r.get());
    if (code == kExitError || (code == kExitCheckFailed && worst == kExitOk)) worst = code;
    if (discres_report_timed_out(r.get())) break;
  }
  if (cfg.json() && which == "all") {
    std::cout << "[\n";
    for (std::size_t i = 0; i < rendered.size(); ++i) std::cout << rendered[i] << (i + 1 < rendered.size() ? ",\n" : "\n");
    std::cout << "]\n";
  } else {
    for (const auto& s : rendered) std::cout << s << (cfg.json() ? "\n" : "");
  }
  return worst;
}

int cmd_cache(const Config& cfg, const std::string& action) {
  if (cfg.no_cache) throw Failure{DISCRES_INVALID_ARGUMENT, "cache commands need a cache directory"};
  std::string dir = resolved_cache_dir(cfg);
  if (dir.empty()) throw Failure{DISCRES_INVALID_ARGUMENT, "no cache directory (set --cache-dir or DISCRES_CACHE)"};
  auto cache = open_cache(cfg);
  if (action == "clear") {
    check(discres_cache_clear(cache.get()));
    if (!cfg.json()) std::cout << "cleared " << dir << "\n";
    else std::cout << "{\"cleared\": \"" << dir << "\"}\n";
    return kExitOk;
  }
  discres_cache_stats s{};
  check(discres_cache_stats_get(cache.get(), &s));
  if (cfg.json()) {
    std::cout << "{\"directory\": \"" << dir << "\", \"entries\": " << s.disk_entries << ", \"bytes\": " << s.disk_bytes
              << "}\n";
  } else {
    std::cout << "directory " << dir << "\nentries " << s.disk_entries << "\nbytes " << s.disk_bytes << "\n";
  }
  return kExitOk;
}

void add_input_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--poly", cfg.polys, "Polynomial in text form (repeatable)");
  cmd->add_option("--file", cfg.files, "File holding a polynomial in text or JSON form (repeatable)");
  cmd->add_option("--builtin", cfg.builtins, "generic:n,d | buse-witness:d | remark (repeatable)");
  cmd->add_option("--vars", cfg.vars, "Variable order for parsed input, comma-separated");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Discriminants, resultants and projection operators over exact rationals"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--timeout", cfg.timeout, "Time budget in seconds")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized steps");
  app.add_option("--cache-dir", cfg.cache_dir, "Projection cache directory");
  app.add_flag("--no-cache", cfg.no_cache, "Keep the projection cache in memory only");
  app.add_flag("--verify-cache", cfg.verify_cache, "Recompute cache hits and compare");
  app.add_flag("--no-timing", cfg.no_timing, "Write wall_ms as 0 in reports");

  auto* gen = app.add_subcommand("gen", "Print a builtin polynomial");
  add_input_options(gen, cfg);
  auto* sqrfree = app.add_subcommand("sqrfree", "Squarefree part");
  add_input_options(sqrfree, cfg);
  auto* res = app.add_subcommand("res", "Resultant of two polynomials in one variable");
  add_input_options(res, cfg);
  res->add_option("--var", cfg.var, "Elimination variable")->required();
  auto* disc = app.add_subcommand("disc", "Discriminant in one variable");
  add_input_options(disc, cfg);
  disc->add_option("--var", cfg.var, "Variable")->required();
  auto* bproj = app.add_subcommand("bproj", "Iterated resultant along an order");
  add_input_options(bproj, cfg);
  bproj->add_option("--order", cfg.order, "Variable order, comma-separated")->required();
  auto* hp = app.add_subcommand("hp", "Gcd over all branch orders of iterated resultants");
  add_input_options(hp, cfg);
  hp->add_option("--order", cfg.order, "Variable order, comma-separated")->required();
  auto* delta = app.add_subcommand("delta", "Multivariate discriminant of a form");
  add_input_options(delta, cfg);
  delta->add_option("--form-vars", cfg.form_vars, "Homogeneous variables, comma-separated");
  auto* mac = app.add_subcommand("macaulay", "Macaulay resultant of n forms in n variables");
  add_input_options(mac, cfg);
  mac->add_option("--form-vars", cfg.form_vars, "Homogeneous variables, comma-separated");
  mac->add_flag("--allow-large", cfg.allow_large, "Skip the exact-size guard");

  auto* chk = app.add_subcommand("check", "Run a verification check");
  std::string which;
  chk->add_option("which", which, "main | main2 | buse | witness | remark | all")
      ->required()
      ->check(CLI::IsMember({"main", "main2", "buse", "witness", "remark", "all"}));
  chk->add_option("--n", cfg.n, "Number of variables (main)");
  chk->add_option("--d", cfg.d, "Degree");
  chk->add_option("--trials", cfg.trials, "Trials per probabilistic check");
  chk->add_option("--range", cfg.range, "Bound for random parameter values");
  chk->add_option("--kept", cfg.kept, "Parameters kept symbolic, comma-separated");
  chk->add_flag("--conjecture", cfg.conjecture, "Allow odd degree in check main (conjecture mode)");
  chk->add_flag("--force", cfg.force, "Run sizes outside the feasibility table");
  chk->add_option("--fault-trial", cfg.fault_trial, "Corrupt one trial of check buse");

  auto* cache = app.add_subcommand("cache", "Manage the projection cache");
  std::string action;
  cache->add_option("action", action, "clear | stats")->required()->check(CLI::IsMember({"clear", "stats"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*chk) return cmd_check(cfg, which);
    if (*cache) return cmd_cache(cfg, action);
    cfg.arm();
    if (*gen) {
      auto in = exactly(cfg, 1);
      return emit(cfg, static_cast<const discres_poly*>(in[0].get()));
    }
    discres_poly* out = nullptr;
    if (*sqrfree) {
      check(discres_sqrfree(exactly(cfg, 1)[0].get(), &out));
    } else if (*res) {
      auto in = exactly(cfg, 2);
      check(discres_resultant(in[0].get(), in[1].get(), cfg.var.c_str(), &out));
    } else if (*disc) {
      check(discres_discriminant(exactly(cfg, 1)[0].get(), cfg.var.c_str(), &out));
    } else if (*bproj || *hp) {
      auto c = open_cache(cfg);
      auto in = exactly(cfg, 1);
      auto op = *bproj ? discres_bproj : discres_hproj;
      check(op(in[0].get(), cfg.order.c_str(), c.get(), &out));
    } else if (*delta) {
      check(discres_multi_discriminant(exactly(cfg, 1)[0].get(), nullptr, &out));
    } else if (*mac) {
      auto in = inputs(cfg);
      if (in.empty()) throw Failure{DISCRES_INVALID_ARGUMENT, "macaulay needs at least one form"};
      char* fv = nullptr;
      check(discres_poly_form_variables(in[0].get(), &fv));
      std::string vars = take(fv);
      if (vars.empty()) throw Failure{DISCRES_INVALID_ARGUMENT, "macaulay needs --form-vars"};
      std::vector<const discres_poly*> forms;
      for (auto& p : in) forms.push_back(p.get());
      check(discres_macaulay(forms.data(), forms.size(), vars.c_str(), cfg.allow_large ? 1 : 0, &out));
    }
    return emit(cfg, out);
  } catch (const Failure& f) {
    std::cerr << "discres: " << discres_status_name(f.status) << ": " << f.message << "\n";
    return kExitError;
  }
}
