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

#ifndef DISCRES_PROJECTION_HPP
#define DISCRES_PROJECTION_HPP

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "discres/euclid.hpp"
#include "discres/poly.hpp"

namespace discres {

// Ordered list of distinct variable names [y_1, ..., y_m].
using ProjOrder = std::vector<std::string>;

// Throws InvalidArgument on repeated names.
void validate_order(const ProjOrder& order);

struct ProjCacheKey {
  std::string op;     // "bproj-step" or "hproj"
  std::string arg;    // variable, or comma-joined order
  std::string input;  // variable table and canonical text of the input

  static ProjCacheKey make(std::string op, std::string arg, const Poly& input);
  std::uint64_t hash() const;
  std::string hex() const;
  std::string full() const;
};

struct ProjCacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t verified = 0;
  std::uint64_t disk_entries = 0;
  std::uint64_t disk_bytes = 0;
};

// Memo table for projection steps. With a directory, entries persist as
//   <dir>/<op>/<hex>.poly
// holding canonical text, plus <dir>/index.tsv mapping hashes to full keys.
// In verify mode every hit is recomputed and compared byte for byte.
class ProjCache {
 public:
  ProjCache() = default;
  explicit ProjCache(std::filesystem::path dir, bool verify = false);

  bool verify_mode() const noexcept { return verify_; }
  void set_verify_mode(bool on) noexcept { verify_ = on; }
  const std::optional<std::filesystem::path>& directory() const noexcept { return dir_; }

  std::optional<Poly> lookup(const ProjCacheKey& key, const VarTable& vars);
  void store(const ProjCacheKey& key, const Poly& value);
  void count_verified();

  // Distinct keys looked up or stored since the last reset, per op tag.
  std::set<std::string> touched(std::string_view op) const;
  void reset_touched();

  ProjCacheStats stats() const;
  // Removes every entry, in memory and on disk.
  void clear();

 private:
  std::optional<std::string> read_entry(const ProjCacheKey& key);
  void write_entry(const ProjCacheKey& key, const std::string& text);
  void load_index();

  std::optional<std::filesystem::path> dir_;
  bool verify_ = false;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::string> memory_;  // full key -> canonical text
  std::unordered_map<std::string, std::string> index_;   // hex -> full key
  std::set<std::pair<std::string, std::string>> touched_;
  std::uint64_t hits_ = 0, misses_ = 0, verified_ = 0;
};

// One Bproj step: Res(s, ds/dv, v) with s = sqrfree_part(F) when s has
// positive degree in v, F itself otherwise. The zero polynomial maps to 0.
Poly bproj_step(const Poly& F, std::string_view v, ProjCache* cache = nullptr);

// Left fold of bproj_step along `order`; intermediate values are replaced by
// their primitive parts before the next step.
Poly bproj(const Poly& F, const ProjOrder& order, ProjCache* cache = nullptr);

// bproj_step(hproj(F, order minus v), v), with F itself standing in for the
// empty order.
Poly hproj_branch(const Poly& F, const ProjOrder& order, std::string_view v, ProjCache* cache = nullptr);

// Normalized gcd of all branches; primitive_part(F) for the empty order.
NormalizedPoly hproj(const Poly& F, const ProjOrder& order, ProjCache* cache = nullptr);

}  // namespace discres

#endif  // DISCRES_PROJECTION_HPP
