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

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pcw/cli.hpp"

namespace pcw {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

TEST_CASE("bwt text") {
  const Outcome r = run({"bwt", "aluminium"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("bwt = mmnauuiil, 451623-clustering\n") != std::string::npos);
  CHECK(run({"bwt", "acacacbbbc"}).out.find("bwt = ccccbbbaaa, 321-clustering, perfectly clustering") !=
        std::string::npos);
  CHECK(run({"bwt", "apartment"}).out.find("bwt = tpmteaanr, not clustering") != std::string::npos);
}

TEST_CASE("bwt json and stdin") {
  const Outcome r = run({"--json", "bwt", "-"}, "aab\n\n  ab \n");
  REQUIRE(r.code == cli::kExitOk);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  REQUIRE(doc.is_array());
  CHECK(doc[0]["bwt"] == "baa");
  CHECK(doc[0]["clustering"]["perfect"] == true);
  CHECK(doc[1]["source"] == "ab");
  CHECK(doc.dump(2) + "\n" == r.out);

  const auto single = nlohmann::ordered_json::parse(run({"--format", "json", "bwt", "apartment"}).out);
  CHECK(single["clustering"]["pi"].is_null());
}

TEST_CASE("factor") {
  CHECK(run({"factor", "acacacbbbc"}).out == "a|cacac|b|bb|c (palindromic), W = cbbbcacaca\n");
  CHECK(run({"factor", "--all", "abbbcccd"}).out.find('\n') != std::string::npos);
  CHECK(run({"factor", "ba"}).out == "ba: no special factorization\n");
  const auto doc = nlohmann::ordered_json::parse(run({"--json", "factor", "acacacbbbc"}).out);
  CHECK(doc["gaps"] == nlohmann::ordered_json({"cacac", "bb"}));
  CHECK(doc["W"] == "cbbbcacaca");
}

TEST_CASE("rows") {
  const Outcome r = run({"rows", "acacacbbbc"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("1-2: acac[acbbb]c / acac[bbbca]c  xy = \"cacac\" (gap 1)") != std::string::npos);
  CHECK(r.out.find("4-5: bb[bcacacac] / bb[cacacacb]  xy = \"bb\" (gap 2)") != std::string::npos);
  CHECK(run({"rows", "ba"}).out == "1-2: [ab] / [ba]  xy = \"\" (gap 1)\n");
  CHECK(run({"rows", "abc"}).code == cli::kExitUsage);
}

TEST_CASE("iet") {
  const Outcome r = run({"iet", "3,3,4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("t = (7,1,-6)\n") != std::string::npos);
  CHECK(r.out.find("sigma = [8,9,10,5,6,7,1,2,3,4]\n") != std::string::npos);
  CHECK(r.out.find("encoding(r=1) = acacacbbbc\n") != std::string::npos);
  CHECK(run({"iet", "3,3,4", "--start", "4"}).out.find("encoding(r=4) = bbbcacacac") != std::string::npos);
  CHECK(run({"iet", "2,2"}).out.find("circular = no") != std::string::npos);
  CHECK(run({"iet", "--word", "bbbcacacac"}).out.find("encoding(r=4) = bbbcacacac") != std::string::npos);
  CHECK(run({"iet", "3,0,4"}).code == cli::kExitUsage);
  CHECK(run({"iet"}).code == cli::kExitUsage);
}

TEST_CASE("auto") {
  CHECK(run({"--alphabet", "abc", "auto", "--rho", "b", "ca"}).out ==
        "rho_b(ca) = b-cab (not positive)\ncriterion: fails\n");
  CHECK(run({"auto", "--lambda", "a", "ab"}).out == "lambda_a(ab) = aab (positive)\ncriterion: holds\n");
  CHECK(run({"auto", "--rho", "b", "a-"}).out.find("criterion") == std::string::npos);
  CHECK(run({"auto", "--rho", "b", "--lambda", "a", "ab"}).code == cli::kExitUsage);
  CHECK(run({"auto", "ab"}).code == cli::kExitUsage);
}

TEST_CASE("enum") {
  CHECK(run({"enum", "--k", "2", "--max-len", "3", "--full-alphabet"}).out == "ab\naab\nabb\n");
  const Outcome both = run({"enum", "--k", "2", "--max-len", "6", "--method", "both", "--full-alphabet"});
  CHECK(both.code == cli::kExitOk);
  CHECK(both.err.find("discrepancies: 0") != std::string::npos);
  const Outcome w = run({"enum", "--k", "2", "--max-len", "4", "--method", "closure", "--witness"});
  CHECK(w.out.find("aaab  ") != std::string::npos);
  CHECK(run({"enum", "--k", "9"}).code == cli::kExitUsage);
  CHECK(run({"enum", "--method", "magic"}).code == cli::kExitUsage);
}

TEST_CASE("verify") {
  const Outcome r = run({"verify", "--k", "2", "--max-len", "6", "--samples", "100"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"--format", "xml", "bwt", "ab"}).code == cli::kExitUsage);
  CHECK(run({"bwt"}).code == cli::kExitUsage);
  CHECK(run({"--alphabet", "ab", "bwt", "abc"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

}  // namespace
}  // namespace pcw
