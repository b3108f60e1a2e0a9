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

// Special factorizations w = a_1 π_1 a_2 π_2 ... π_{k-1} a_k, where
// a_1 < ... < a_k are the letters of w, and the companion word
// W = a_k π_{k-1} ... π_1 a_1. A perfectly clustering Lyndon word has exactly
// one such factorization with every gap a palindrome.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pcw/words.hpp"

namespace pcw {

struct SpecialFactorization {
  AlphabetPtr alphabet;
  std::vector<Letter> letters;   // a_1 < ... < a_k, equal to Alph(w)
  std::vector<Word> gaps;        // π_1 ... π_{k-1}, possibly empty
  std::vector<std::size_t> marks;  // zero-based position of each a_i in w

  /// a_1 π_1 a_2 ... π_{k-1} a_k.
  Word word() const;
  bool is_palindromic() const;
  /// "a|cacac|b|bb|c".
  std::string str() const;

  friend bool operator==(const SpecialFactorization& a, const SpecialFactorization& b) {
    return a.letters == b.letters && a.gaps == b.gaps;
  }
};

struct TwoPalindromeSplit {
  Word left;
  Word right;
};

/// Palindromic special factorization of a perfectly clustering Lyndon word,
/// read off the smallest suffix beginning with each letter.
SpecialFactorization canonical_special_factorization(const Word& w);

/// Upper bound on candidate markings examined by the exhaustive search.
inline constexpr std::size_t kDefaultMarkingCap = std::size_t{1} << 20;

/// Every special factorization of w, ordered by marked positions. Throws
/// std::length_error when the number of candidate markings exceeds `cap`.
std::vector<SpecialFactorization> enumerate_special_factorizations(
    const Word& w, std::size_t cap = kDefaultMarkingCap);

/// W = a_k π_{k-1} ... π_2 a_2 π_1 a_1.
Word build_W(const SpecialFactorization& f);

/// First split w = left·right into palindromes (either may be empty),
/// scanning split points from the left.
std::optional<TwoPalindromeSplit> two_palindrome_split(const Word& w);

struct ConditionIIWitness {
  TwoPalindromeSplit split;
  SpecialFactorization factorization;
};

/// w is a product of two palindromes and has a palindromic special
/// factorization. Requires a primitive word.
std::optional<ConditionIIWitness> satisfies_condition_ii(const Word& w);

/// A special factorization whose companion W is a conjugate of w. Requires a
/// primitive word. The first such factorization in marking order is returned.
std::optional<SpecialFactorization> satisfies_condition_iii(const Word& w);

}  // namespace pcw
