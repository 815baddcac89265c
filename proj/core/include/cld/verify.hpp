// Copyright 2026 The cld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLD_VERIFY_HPP_
#define CLD_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cld/engine.hpp"

namespace cld {

struct CheckResult {
  int criterion = 0;  // 1..12 for acceptance criteria, 0 for extra properties
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t threads = 1;
};

// Accumulates the checks that ride along on every simulated run: the
// equilibrium-gap bounds, the learning-rate laws and the RVU audits.
class RunAuditor {
 public:
  RunAuditor();
  ~RunAuditor();
  RunAuditor(const RunAuditor&) = delete;
  RunAuditor& operator=(const RunAuditor&) = delete;

  void add(const RunResult& run, const GameModel& game);
  std::vector<CheckResult> checks() const;
  std::size_t runs() const;

 private:
  struct Tally;
  std::unique_ptr<Tally> tally_;
};

std::vector<std::string> suite_names();

// Throws kInvalidArgument for an unknown suite. When `shared` is given, runs
// are fed to it and the ride-along checks are left to the caller.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options,
                      RunAuditor* shared = nullptr);

std::string suite_text(const SuiteReport& report);
std::string suite_json(const SuiteReport& report);

}  // namespace cld

#endif  // CLD_VERIFY_HPP_
