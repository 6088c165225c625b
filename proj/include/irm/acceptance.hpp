// Copyright 2026 The irrmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace irm {

enum class Status { pass, fail, indeterminate };
std::string to_string(Status s);

struct CriterionOutcome {
  int id = 0;
  Status status = Status::fail;
  std::string title;
  std::string tolerance;  // the pinned threshold, as printed
  std::string detail;     // measured values
  double seconds = 0;
};

struct AcceptanceOptions {
  bool long_run = false;  // also run the ~minutes cube-root-of-2 expansion
  int jobs = 1;
  std::uint64_t sieve_x_max = 1000000000;
};

// Runs criteria 1..10. The sieve behind criteria 5 and 6 is shared across
// calls on the same runner.
class AcceptanceRunner {
 public:
  explicit AcceptanceRunner(AcceptanceOptions opt = {});
  ~AcceptanceRunner();
  CriterionOutcome run(int id);
  static constexpr int kCount = 10;

 private:
  struct Cache;
  AcceptanceOptions opt_;
  std::unique_ptr<Cache> cache_;
};

// "criterion 5: PASS  <title> [tolerance] measured"
std::string format_line(const CriterionOutcome& o);

}  // namespace irm
