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

#include <set>

#include "doctest.h"
#include "pcw/verify.hpp"

namespace pcw {
namespace {

TEST_CASE("check names are unique and match the run") {
  const auto names = verification_check_names();
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  const auto results = run_verification({2, 6, 1, 200, 1});
  REQUIRE(results.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(results[i].name == names[i]);
}

TEST_CASE("small runs pass with work in every check") {
  for (std::size_t k : {1u, 2u, 3u}) {
    for (const CheckResult& r : run_verification({k, 7, 3, 500, 2})) {
      INFO(r.name, " k=", k, " ", r.counterexample.value_or(""));
      CHECK(r.passed());
      CHECK_FALSE(r.statement.empty());
    }
  }
  for (const CheckResult& r : run_verification({3, 8, 0, 500, 4})) {
    INFO(r.name);
    CHECK(r.instances > 0);
  }
}

TEST_CASE("results do not depend on the worker count") {
  const auto serial = run_verification({3, 7, 5, 300, 1});
  const auto parallel = run_verification({3, 7, 5, 300, 3});
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].instances == parallel[i].instances);
    CHECK(serial[i].failures == parallel[i].failures);
  }
}

}  // namespace
}  // namespace pcw
