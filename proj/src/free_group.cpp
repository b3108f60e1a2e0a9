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

#include "pcw/free_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcw {

namespace {

void require_same_alphabet(const GroupWord& g, const GroupWord& h) {
  if (g.alphabet() != h.alphabet() && !(*g.alphabet() == *h.alphabet())) {
    throw std::invalid_argument("free group elements over different alphabets");
  }
}

void require_pivot(const AlphabetPtr& alphabet, Letter pivot) {
  if (pivot >= alphabet->size()) throw std::invalid_argument("automorphism letter not in alphabet");
}

}  // namespace

GroupWord::GroupWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("group word needs an alphabet");
}

GroupWord::GroupWord(AlphabetPtr alphabet, std::span<const SignedLetter> factors)
    : GroupWord(std::move(alphabet)) {
  for (SignedLetter s : factors) {
    if (s.letter >= alphabet_->size()) throw std::invalid_argument("letter index out of range");
    append(s);
  }
}

GroupWord::GroupWord(const Word& w) : GroupWord(w.alphabet_ptr()) {
  for (Letter l : w.letters()) factors_.push_back({l, false});
}

void GroupWord::append(SignedLetter s) {
  if (!factors_.empty() && factors_.back() == s.inverted()) {
    factors_.pop_back();
  } else {
    factors_.push_back(s);
  }
}

GroupWord GroupWord::parse(std::string_view text, AlphabetPtr alphabet) {
  std::vector<SignedLetter> factors;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-') throw std::invalid_argument("dangling '-' in group word");
    SignedLetter s{alphabet->letter(text[i]), false};
    if (i + 1 < text.size() && text[i + 1] == '-') {
      s.inverse = true;
      ++i;
    }
    factors.push_back(s);
  }
  return GroupWord(std::move(alphabet), factors);
}

std::string GroupWord::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (SignedLetter s : factors_) {
    out += alphabet_->symbol(s.letter);
    if (s.inverse) out += '-';
  }
  return out;
}

std::string GroupWord::pretty() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (SignedLetter s : factors_) {
    out += alphabet_->symbol(s.letter);
    if (s.inverse) out += "⁻¹";
  }
  return out;
}

std::optional<Word> GroupWord::positive_word() const {
  if (!fg_is_positive(*this)) return std::nullopt;
  Word w(alphabet_);
  for (SignedLetter s : factors_) w.push_back(s.letter);
  return w;
}

GroupWord fg_multiply(const GroupWord& g, const GroupWord& h) {
  require_same_alphabet(g, h);
  std::vector<SignedLetter> factors(g.factors().begin(), g.factors().end());
  factors.insert(factors.end(), h.factors().begin(), h.factors().end());
  return GroupWord(g.alphabet(), factors);
}

GroupWord fg_invert(const GroupWord& g) {
  std::vector<SignedLetter> factors;
  for (auto it = g.factors().rbegin(); it != g.factors().rend(); ++it) factors.push_back(it->inverted());
  return GroupWord(g.alphabet(), factors);
}

GroupWord fg_reversal(const GroupWord& g) {
  std::vector<SignedLetter> factors(g.factors().rbegin(), g.factors().rend());
  return GroupWord(g.alphabet(), factors);
}

bool fg_is_palindrome(const GroupWord& g) {
  const auto f = g.factors();
  return std::equal(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(f.size() / 2), f.rbegin());
}

bool fg_is_positive(const GroupWord& g) {
  return std::none_of(g.factors().begin(), g.factors().end(),
                      [](SignedLetter s) { return s.inverse; });
}

std::string Automorphism::str(const OrderedAlphabet& alphabet) const {
  return std::string(side == Side::lambda ? "lambda_" : "rho_") + alphabet.symbol(pivot);
}

GroupWord apply(const Automorphism& f, const GroupWord& g) {
  require_pivot(g.alphabet(), f.pivot);
  const Letter l = f.pivot;
  std::vector<SignedLetter> out;
  out.reserve(2 * g.size());
  for (SignedLetter s : g.factors()) {
    // Image of the positive letter, then inverted for negative ones.
    SignedLetter image[2];
    std::size_t len = 1;
    image[0] = {s.letter, false};
    if (s.letter < l) {
      image[1] = {l, f.side == Side::lambda};
      len = 2;
    } else if (s.letter > l) {
      image[1] = image[0];
      image[0] = {l, f.side == Side::rho};
      len = 2;
    }
    if (!s.inverse) {
      out.insert(out.end(), image, image + len);
    } else {
      for (std::size_t i = len; i-- > 0;) out.push_back(image[i].inverted());
    }
  }
  return GroupWord(g.alphabet(), out);
}

GroupWord apply_lambda(Letter pivot, const GroupWord& g) { return apply({Side::lambda, pivot}, g); }

GroupWord apply_rho(Letter pivot, const GroupWord& g) { return apply({Side::rho, pivot}, g); }

bool positivity_criterion(const Word& w, Letter pivot, Side side) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (side == Side::rho && w[i] > pivot && (i == 0 || w[i - 1] > pivot)) return false;
    if (side == Side::lambda && w[i] < pivot && (i + 1 == n || w[i + 1] < pivot)) return false;
  }
  return true;
}

Word complement_antimorphism(const Word& w) {
  const std::size_t k = w.alphabet().size();
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(static_cast<Letter>(k - 1 - *it));
  }
  return Word(w.alphabet_ptr(), std::move(out));
}

}  // namespace pcw
