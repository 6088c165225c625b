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

// Prints one PASS/FAIL line per acceptance criterion. Arguments are the
// criteria expected to fail; the exit status is 0 iff exactly those fail.
// IRM_LONG_RUN=1 adds the long-run continued fraction target.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "irm/acceptance.hpp"

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) expected.insert(std::atoi(argv[i]));
  irm::AcceptanceOptions opt;
  const char* lr = std::getenv("IRM_LONG_RUN");
  opt.long_run = lr && *lr && std::string(lr) != "0";
  irm::AcceptanceRunner runner(opt);
  std::set<int> failed;
  for (int id = 1; id <= irm::AcceptanceRunner::kCount; ++id) {
    const auto o = runner.run(id);
    std::cout << irm::format_line(o) << std::endl;
    if (o.status != irm::Status::pass) failed.insert(id);
  }
  std::cout << failed.size() << " of " << irm::AcceptanceRunner::kCount << " criteria failed";
  if (!expected.empty()) std::cout << (failed == expected ? " (as expected)" : " (differs from the expected set)");
  std::cout << "\n";
  return failed == expected ? 0 : 1;
}
