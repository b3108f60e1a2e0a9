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

#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "pcw/factorization.hpp"
#include "pcw/words.hpp"

namespace pcw {
namespace {

std::vector<std::string> texts(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

TEST_CASE("alphabets keep their declared order") {
  const auto reverse = make_alphabet("cba");
  CHECK(reverse->letter('c') == 0);
  CHECK(reverse->letter('a') == 2);
  CHECK(Word::parse("ca", reverse) < Word::parse("ac", reverse));
  CHECK(natural_alphabet("banana")->symbols() == "abn");
  CHECK_THROWS_AS(make_alphabet("aba"), std::invalid_argument);
  CHECK_THROWS_AS(make_alphabet(""), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("abd", make_alphabet("abc")), std::invalid_argument);
}

TEST_CASE("lexicographic order puts proper prefixes first") {
  const auto abc = standard_alphabet(3);
  CHECK(Word::parse("ab", abc) < Word::parse("abc", abc));
  CHECK(Word::parse("abc", abc) < Word::parse("ac", abc));
  CHECK(Word(abc) < Word::parse("a", abc));
}

TEST_CASE("is_primitive") {
  CHECK_FALSE(is_primitive(Word::parse("aa")));
  CHECK(is_primitive(Word::parse("ab")));
  CHECK(is_primitive(Word::parse("apartment")));
  CHECK_FALSE(is_primitive(Word::parse("abab")));
  CHECK(is_primitive(Word::parse("a")));
  CHECK_THROWS_AS(is_primitive(Word(standard_alphabet(2))), std::invalid_argument);

  oracle::for_each_word(3, 8, [](const std::string& s) {
    CHECK(is_primitive(Word::parse(s, standard_alphabet(3))) == oracle::is_primitive(s));
  });
}

TEST_CASE("conjugates_sorted") {
  CHECK(texts(conjugates_sorted(Word::parse("aab"))) == std::vector<std::string>{"aab", "aba", "baa"});
  CHECK(texts(conjugates_sorted(Word::parse("a"))) == std::vector<std::string>{"a"});
  // Burrows-Wheeler matrix of "apartment".
  CHECK(texts(conjugates_sorted(Word::parse("apartment"))) ==
        std::vector<std::string>{"apartment", "artmentap", "entapartm", "mentapart", "ntapartme",
                                 "partmenta", "rtmentapa", "tapartmen", "tmentapar"});
  CHECK_THROWS_AS(conjugates_sorted(Word::parse("abab")), std::invalid_argument);
}

TEST_CASE("conjugates of primitive words are n strictly increasing rotations") {
  const auto abc = standard_alphabet(3);
  oracle::for_each_word(3, 7, [&](const std::string& s) {
    if (!oracle::is_primitive(s)) return;
    const auto rows = texts(conjugates_sorted(Word::parse(s, abc)));
    CHECK(rows == oracle::sorted_rotations(s));
    CHECK(std::adjacent_find(rows.begin(), rows.end(), std::greater_equal<>()) == rows.end());
  });
}

TEST_CASE("is_lyndon") {
  CHECK(is_lyndon(Word::parse("aab")));
  CHECK_FALSE(is_lyndon(Word::parse("aba")));
  CHECK(is_lyndon(Word::parse("acacacbbbc")));
  CHECK(is_lyndon(Word::parse("a")));
  CHECK_FALSE(is_lyndon(Word::parse("aa")));
  CHECK_THROWS_AS(is_lyndon(Word(standard_alphabet(1))), std::invalid_argument);

  oracle::for_each_word(3, 8, [](const std::string& s) {
    const Word w = Word::parse(s, standard_alphabet(3));
    CHECK(is_lyndon(w) == (oracle::is_primitive(s) && oracle::is_lyndon(s)));
    if (oracle::is_primitive(s)) CHECK(least_rotation(w).str() == oracle::sorted_rotations(s).front());
  });
}

TEST_CASE("reversal and palindromes") {
  CHECK(reversal(Word::parse("aab")).str() == "baa");
  CHECK(is_palindrome(Word::parse("aabaa")));
  CHECK(is_palindrome(Word(standard_alphabet(1))));
  CHECK_FALSE(is_palindrome(Word::parse("ab")));
  oracle::for_each_word(2, 10, [](const std::string& s) {
    const Word w = Word::parse(s, standard_alphabet(2));
    CHECK(reversal(reversal(w)) == w);
  });
}

TEST_CASE("parikh counts over the declared alphabet") {
  const auto abc = standard_alphabet(3);
  CHECK(parikh(Word::parse("acacacbbbc", abc)).counts == std::vector<std::size_t>{3, 3, 4});
  CHECK(parikh(Word::parse("acacacbbbc", abc)).str() == "3,3,4");
  CHECK(parikh(Word(abc)).counts == std::vector<std::size_t>{0, 0, 0});
  CHECK(parikh(Word::parse("aaabaab")).counts == std::vector<std::size_t>{5, 2});
  CHECK(parikh(Word::parse("ab", abc)).total() == 2);
}

TEST_CASE("conjugator") {
  CHECK(conjugator(Word::parse("aab")).str() == "aba");
  CHECK(conjugator(Word::parse("a")).str() == "a");
  CHECK(conjugator(Word::parse("apartment")).str() == "partmenta");
  CHECK_THROWS_AS(conjugator(Word(standard_alphabet(1))), std::invalid_argument);

  oracle::for_each_word(3, 6, [](const std::string& s) {
    Word w = Word::parse(s, standard_alphabet(3));
    Word orbit = w;
    std::vector<std::string> seen;
    for (std::size_t i = 0; i < w.size(); ++i) {
      seen.push_back(orbit.str());
      orbit = conjugator(orbit);
    }
    CHECK(orbit == w);
    std::sort(seen.begin(), seen.end());
    auto expected = oracle::rotations(s);
    std::sort(expected.begin(), expected.end());
    CHECK(seen == expected);
  });
}

TEST_CASE("conjugate to reversal iff product of two palindromes") {
  for (std::size_t k : {2u, 3u}) {
    const auto alphabet = standard_alphabet(k);
    std::size_t words = 0;
    oracle::for_each_word(k, 12, [&](const std::string& s) {
      ++words;
      const Word w = Word::parse(s, alphabet);
      const bool split = two_palindrome_split(w).has_value();
      if (split != oracle::is_conjugate(s, oracle::reversed(s))) FAIL_CHECK(s);
    });
    CHECK(words > 0);
  }
}

}  // namespace
}  // namespace pcw
