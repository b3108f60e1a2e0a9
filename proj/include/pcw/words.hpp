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

// Ordered alphabets, finite words over them, and the elementary predicates
// (primitivity, conjugacy, Lyndon, palindromes) the rest of the library uses.
//
// Letters are stored as indices into an OrderedAlphabet; the order of the
// alphabet is the order of the indices. Words keep a shared handle to their
// alphabet so that rendering back to text never needs extra context.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcw/error.hpp"

namespace pcw {

using Letter = std::uint8_t;

class OrderedAlphabet {
 public:
  /// `symbols` lists the letters in increasing order, e.g. "abc" or "cba".
  explicit OrderedAlphabet(std::string_view symbols);

  std::size_t size() const { return symbols_.size(); }
  char symbol(Letter letter) const { return symbols_[letter]; }
  std::string_view symbols() const { return symbols_; }

  std::optional<Letter> find(char symbol) const;
  /// Throws std::invalid_argument when `symbol` is not part of the alphabet.
  Letter letter(char symbol) const;

  friend bool operator==(const OrderedAlphabet& a, const OrderedAlphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  std::vector<std::int16_t> index_;  // byte -> letter, -1 when absent
};

using AlphabetPtr = std::shared_ptr<const OrderedAlphabet>;

AlphabetPtr make_alphabet(std::string_view symbols);
/// Sorted distinct characters of `text`, in byte order.
AlphabetPtr natural_alphabet(std::string_view text);
/// The first `k` lowercase letters "ab...".
AlphabetPtr standard_alphabet(std::size_t k);

class Word {
 public:
  Word() = default;
  explicit Word(AlphabetPtr alphabet);
  Word(AlphabetPtr alphabet, std::vector<Letter> letters);

  /// Text over an explicit alphabet; every character must belong to it.
  static Word parse(std::string_view text, AlphabetPtr alphabet);
  /// Text over its natural alphabet (sorted distinct characters).
  static Word parse(std::string_view text);

  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const OrderedAlphabet& alphabet() const { return *alphabet_; }
  std::span<const Letter> letters() const { return letters_; }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// Factor starting at `pos` of length `len` (clamped to the end).
  Word slice(std::size_t pos, std::size_t len = std::string::npos) const;
  std::string str() const;

  Word& operator+=(const Word& other);
  Word& push_back(Letter letter);

  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend bool operator==(const Word& a, const Word& b);
  /// Lexicographic order; a proper prefix is smaller. Both words must share
  /// an alphabet.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

struct ParikhVector {
  std::vector<std::size_t> counts;

  std::size_t total() const;
  /// Comma separated counts, e.g. "3,3,4".
  std::string str() const;
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

/// Throws std::invalid_argument on the empty word.
bool is_primitive(const Word& w);
bool is_primitive(std::span<const Letter> w);

/// Start offsets of the rotations of `w`, ordered by the rotation they begin.
/// Ties (non-primitive input) keep increasing offset order.
std::vector<std::size_t> sorted_rotation_starts(std::span<const Letter> w);

/// Rotation b_{i+1}..b_n b_1..b_i.
Word rotation(const Word& w, std::size_t shift);
/// All rotations in increasing lexicographic order. Requires a primitive word.
std::vector<Word> conjugates_sorted(const Word& w);
bool is_conjugate(const Word& u, const Word& v);
/// Least rotation of a nonempty word.
Word least_rotation(const Word& w);

bool is_lyndon(const Word& w);
bool is_lyndon(std::span<const Letter> w);

Word reversal(const Word& w);
bool is_palindrome(const Word& w);
bool is_palindrome(std::span<const Letter> w);

/// Counts over the declared alphabet.
ParikhVector parikh(const Word& w);
/// Letters occurring in w, increasing.
std::vector<Letter> alph(const Word& w);
std::vector<Letter> alph(std::span<const Letter> w);

/// au -> ua. Throws on the empty word.
Word conjugator(const Word& w);

}  // namespace pcw
