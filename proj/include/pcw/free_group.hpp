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

// Reduced words of the free group over an ordered alphabet and the
// automorphisms λ_ℓ, ρ_ℓ:
//
//   λ_ℓ(a) = a ℓ⁻¹ (a < ℓ),  ℓ (a = ℓ),  ℓ a  (a > ℓ)
//   ρ_ℓ(a) = a ℓ   (a < ℓ),  ℓ (a = ℓ),  ℓ⁻¹ a (a > ℓ)
//
// Every GroupWord is kept freely reduced.

#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcw/words.hpp"

namespace pcw {

struct SignedLetter {
  Letter letter = 0;
  bool inverse = false;

  SignedLetter inverted() const { return {letter, !inverse}; }
  friend auto operator<=>(const SignedLetter&, const SignedLetter&) = default;
};

class GroupWord {
 public:
  /// Identity element.
  explicit GroupWord(AlphabetPtr alphabet);
  GroupWord(AlphabetPtr alphabet, std::span<const SignedLetter> factors);
  /// Positive element spelled by `w`.
  explicit GroupWord(const Word& w);

  /// Compact token form: a symbol, optionally followed by '-' for its
  /// inverse, e.g. "b-cab".
  static GroupWord parse(std::string_view text, AlphabetPtr alphabet);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const SignedLetter> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool is_identity() const { return factors_.empty(); }

  /// Compact token form, "1" for the identity.
  std::string str() const;
  /// Superscript form such as "b⁻¹cab".
  std::string pretty() const;
  /// The word when the element is positive.
  std::optional<Word> positive_word() const;

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.factors_ == b.factors_ && *a.alphabet_ == *b.alphabet_;
  }

 private:
  void append(SignedLetter s);

  AlphabetPtr alphabet_;
  std::vector<SignedLetter> factors_;
};

GroupWord fg_multiply(const GroupWord& g, const GroupWord& h);
GroupWord fg_invert(const GroupWord& g);
inline GroupWord operator*(const GroupWord& g, const GroupWord& h) { return fg_multiply(g, h); }

/// Anti-automorphism fixing every letter.
GroupWord fg_reversal(const GroupWord& g);
bool fg_is_palindrome(const GroupWord& g);
bool fg_is_positive(const GroupWord& g);

enum class Side { lambda, rho };

struct Automorphism {
  Side side = Side::rho;
  Letter pivot = 0;

  /// "λ_b" / "ρ_b" style tag using the alphabet symbol.
  std::string str(const OrderedAlphabet& alphabet) const;
};

GroupWord apply(const Automorphism& f, const GroupWord& g);
GroupWord apply_lambda(Letter pivot, const GroupWord& g);
GroupWord apply_rho(Letter pivot, const GroupWord& g);

/// rho: each letter > pivot is immediately preceded by a letter ≤ pivot.
/// lambda: each letter < pivot is immediately followed by a letter ≥ pivot.
bool positivity_criterion(const Word& w, Letter pivot, Side side);

/// Reverses w and maps the i-th letter of the declared alphabet to the
/// (k-i+1)-th. Uses the declared alphabet size, not |Alph(w)|.
Word complement_antimorphism(const Word& w);

}  // namespace pcw
