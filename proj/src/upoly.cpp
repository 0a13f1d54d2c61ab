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

#include "upoly.hpp"

#include "discres/deadline.hpp"

namespace discres::detail {

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly pseudo_remainder(UPoly r, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const Poly& lb = b.back();
  int e = static_cast<int>(r.size()) - static_cast<int>(db);
  while (!r.empty() && r.size() - 1 >= db) {
    poll_deadline();
    Poly s = r.back();
    std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= s * b[i];
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    Poly f = pow(lb, static_cast<unsigned>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

}  // namespace discres::detail
