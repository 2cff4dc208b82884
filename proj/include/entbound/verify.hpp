// Copyright 2026 The entbound Authors
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

#ifndef ENTBOUND_VERIFY_HPP
#define ENTBOUND_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace entbound {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double value = 0.0;      // the measured worst case
  double tolerance = 0.0;  // what it was held to
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  std::string to_json() const;
};

/// Known suites: linalg, measures, bounds, region, surface, spectrum.
const std::vector<std::string>& verify_suites();

/// Runs one suite (or "all"). `samples` scales every randomized check.
/// Throws DomainError for an unknown suite name.
VerifyReport run_verify(std::string_view suite, std::size_t samples, std::uint64_t seed);

}  // namespace entbound

#endif  // ENTBOUND_VERIFY_HPP
