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

#include "discres/projection.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include "discres/deadline.hpp"
#include "discres/error.hpp"
#include "discres/resultant.hpp"

namespace discres {

namespace fs = std::filesystem;

void validate_order(const ProjOrder& order) {
  std::set<std::string> seen;
  for (const auto& v : order) {
    if (!seen.insert(v).second) throw Error(ErrorCode::kInvalidArgument, "repeated variable '" + v + "' in order");
  }
}

namespace {

std::string join(const ProjOrder& order) {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) s += ',';
    s += order[i];
  }
  return s;
}

std::string table_text(const VarTable& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += t.name(i);
  }
  return s;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

ProjCacheKey ProjCacheKey::make(std::string op, std::string arg, const Poly& input) {
  return {std::move(op), std::move(arg), table_text(input.vars()) + "|" + canonical_string(input)};
}

std::string ProjCacheKey::full() const { return op + "\t" + arg + "\t" + input; }

std::uint64_t ProjCacheKey::hash() const { return fnv1a(full()); }

std::string ProjCacheKey::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

// ---- ProjCache ----------------------------------------------------------------

ProjCache::ProjCache(fs::path dir, bool verify) : dir_(std::move(dir)), verify_(verify) {
  std::error_code ec;
  fs::create_directories(*dir_, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create cache directory " + dir_->string() + ": " + ec.message());
  load_index();
}

void ProjCache::load_index() {
  std::ifstream in(*dir_ / "index.tsv");
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    index_[line.substr(0, tab)] = line.substr(tab + 1);
  }
}

std::optional<std::string> ProjCache::read_entry(const ProjCacheKey& key) {
  const std::string hex = key.hex();
  auto it = index_.find(hex);
  if (it == index_.end() || it->second != key.full()) return std::nullopt;
  std::ifstream in(*dir_ / key.op / (hex + ".poly"));
  if (!in) return std::nullopt;
  std::string text;
  std::getline(in, text);
  if (text.empty()) return std::nullopt;
  return text;
}

void ProjCache::write_entry(const ProjCacheKey& key, const std::string& text) {
  const std::string hex = key.hex();
  auto existing = index_.find(hex);
  if (existing != index_.end() && existing->second != key.full()) return;  // hash collision: keep in memory only
  fs::path sub = *dir_ / key.op;
  std::error_code ec;
  fs::create_directories(sub, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + sub.string());
  // Write-then-rename so readers never see a partial entry.
  static thread_local std::mt19937_64 tag_rng{std::random_device{}()};
  fs::path tmp = sub / (hex + ".tmp" + std::to_string(tag_rng()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << text << '\n';
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  fs::rename(tmp, sub / (hex + ".poly"), ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot rename " + tmp.string());
  if (existing == index_.end()) {
    index_[hex] = key.full();
    std::ofstream idx(*dir_ / "index.tsv", std::ios::app);
    idx << hex << '\t' << key.full() << '\n';
  }
}

std::optional<Poly> ProjCache::lookup(const ProjCacheKey& key, const VarTable& vars) {
  std::string text;
  {
    std::lock_guard lock(mu_);
    touched_.emplace(key.op, key.full());
    auto it = memory_.find(key.full());
    if (it != memory_.end()) {
      text = it->second;
    } else if (dir_) {
      auto disk = read_entry(key);
      if (disk) {
        text = *disk;
        memory_.emplace(key.full(), text);
      }
    }
    if (text.empty()) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
  }
  return parse(text, vars);
}

void ProjCache::store(const ProjCacheKey& key, const Poly& value) {
  std::string text = canonical_string(value);
  std::lock_guard lock(mu_);
  touched_.emplace(key.op, key.full());
  memory_[key.full()] = text;
  if (dir_) write_entry(key, text);
}

void ProjCache::count_verified() {
  std::lock_guard lock(mu_);
  ++verified_;
}

std::set<std::string> ProjCache::touched(std::string_view op) const {
  std::lock_guard lock(mu_);
  std::set<std::string> out;
  for (const auto& [o, k] : touched_) {
    if (o == op) out.insert(k);
  }
  return out;
}

void ProjCache::reset_touched() {
  std::lock_guard lock(mu_);
  touched_.clear();
}

ProjCacheStats ProjCache::stats() const {
  std::lock_guard lock(mu_);
  ProjCacheStats s;
  s.hits = hits_;
  s.misses = misses_;
  s.verified = verified_;
  if (dir_ && fs::exists(*dir_)) {
    for (const auto& e : fs::recursive_directory_iterator(*dir_)) {
      if (e.is_regular_file() && e.path().extension() == ".poly") {
        ++s.disk_entries;
        s.disk_bytes += e.file_size();
      }
    }
  }
  return s;
}

void ProjCache::clear() {
  std::lock_guard lock(mu_);
  memory_.clear();
  index_.clear();
  touched_.clear();
  hits_ = misses_ = verified_ = 0;
  if (dir_) {
    std::error_code ec;
    // Only what the cache itself writes; the directory may be shared.
    for (const char* op : {"bproj-step", "hproj"}) fs::remove_all(*dir_ / op, ec);
    fs::remove(*dir_ / "index.tsv", ec);
  }
}

// ---- operators ------------------------------------------------------------------

namespace {

template <class Compute>
Poly memo(ProjCache& cache, const ProjCacheKey& key, const VarTable& vars, Compute&& compute) {
  if (auto hit = cache.lookup(key, vars)) {
    if (cache.verify_mode()) {
      Poly fresh = compute().over(vars);
      if (canonical_string(fresh) != canonical_string(*hit)) {
        throw Error(ErrorCode::kIo, "cache entry " + key.hex() + " differs from recomputation");
      }
      cache.count_verified();
    }
    return *hit;
  }
  Poly value = compute().over(vars);
  cache.store(key, value);
  return value;
}

Poly bproj_step_raw(const Poly& F, std::string_view v) {
  poll_deadline();
  if (F.is_zero()) return F;
  Poly s = sqrfree_part(F).value();
  if (degree(s, v) <= 0) return F;
  return resultant(s, derivative(s, v), v).over(F.vars());
}

Poly hproj_rec(const Poly& F, const ProjOrder& order, ProjCache& cache);

Poly branch_rec(const Poly& F, const ProjOrder& order, std::string_view v, ProjCache& cache) {
  ProjOrder rest;
  for (const auto& y : order) {
    if (y != v) rest.push_back(y);
  }
  if (rest.size() == order.size()) {
    throw Error(ErrorCode::kVariableNotInOrder, "variable '" + std::string(v) + "' is not in the order");
  }
  Poly base = rest.empty() ? F : hproj_rec(F, rest, cache);
  return bproj_step(base, v, &cache);
}

Poly hproj_rec(const Poly& F, const ProjOrder& order, ProjCache& cache) {
  return memo(cache, ProjCacheKey::make("hproj", join(order), F), F.vars(), [&] {
    std::vector<Poly> branches;
    branches.reserve(order.size());
    for (const auto& v : order) branches.push_back(branch_rec(F, order, v, cache));
    return gcd(branches).value();
  });
}

}  // namespace

Poly bproj_step(const Poly& F, std::string_view v, ProjCache* cache) {
  if (!cache) return bproj_step_raw(F, v);
  return memo(*cache, ProjCacheKey::make("bproj-step", std::string(v), F), F.vars(),
              [&] { return bproj_step_raw(F, v); });
}

Poly bproj(const Poly& F, const ProjOrder& order, ProjCache* cache) {
  validate_order(order);
  Poly acc = F;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && !acc.is_zero()) acc = primitive_part(acc).value();
    acc = bproj_step(acc, order[i], cache);
  }
  return acc;
}

Poly hproj_branch(const Poly& F, const ProjOrder& order, std::string_view v, ProjCache* cache) {
  validate_order(order);
  ProjCache local;
  return branch_rec(F, order, v, cache ? *cache : local);
}

NormalizedPoly hproj(const Poly& F, const ProjOrder& order, ProjCache* cache) {
  validate_order(order);
  if (order.empty()) return F.is_zero() ? normalized_zero(F.vars()) : primitive_part(F);
  ProjCache local;
  Poly g = hproj_rec(F, order, cache ? *cache : local);
  return g.is_zero() ? normalized_zero(F.vars()) : primitive_part(g);
}

}  // namespace discres
