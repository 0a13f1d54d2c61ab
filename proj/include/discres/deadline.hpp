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

#ifndef DISCRES_DEADLINE_HPP
#define DISCRES_DEADLINE_HPP

#include <chrono>
#include <optional>

namespace discres {

// Cooperative cancellation. A DeadlineScope installs a wall-clock limit for
// the current thread; long-running loops call poll_deadline(), which throws
// Error(kTimeout) once the limit has passed. Scopes nest; the innermost wins.
class DeadlineScope {
 public:
  explicit DeadlineScope(std::chrono::steady_clock::duration budget);
  ~DeadlineScope();
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void poll_deadline();

}  // namespace discres

#endif  // DISCRES_DEADLINE_HPP
