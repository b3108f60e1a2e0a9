// Copyright 2026 The pcwords Authors
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

// Exhaustive and seeded-random checks of the structural properties of
// perfectly clustering words, at configurable sizes.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pcw {

struct VerifyOptions {
  std::size_t alphabet_size = 3;
  std::size_t max_length = 8;
  std::uint64_t seed = 0;
  std::size_t random_samples = 10000;
  std::size_t jobs = 1;
};

struct CheckResult {
  std::string name;
  std::string statement;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return failures == 0; }
};

/// Names of every check, in the order run_verification reports them.
std::vector<std::string> verification_check_names();

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace pcw
