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

#include "pcw/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pcw {

namespace {

// Compares the rotations of `w` starting at `i` and `j` over n letters.
int compare_rotations(std::span<const Letter> w, std::size_t i, std::size_t j) {
  const std::size_t n = w.size();
  for (std::size_t t = 0; t < n; ++t) {
    const Letter a = w[(i + t) % n];
    const Letter b = w[(j + t) % n];
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

void require_nonempty(const Word& w, const char* what) {
  if (w.empty()) throw std::invalid_argument(std::string(what) + ": empty word");
}

}  // namespace

OrderedAlphabet::OrderedAlphabet(std::string_view symbols)
    : symbols_(symbols), index_(256, -1) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto byte = static_cast<unsigned char>(symbols_[i]);
    if (index_[byte] >= 0) {
      throw std::invalid_argument("duplicate symbol '" + std::string(1, symbols_[i]) +
                                  "' in alphabet");
    }
    index_[byte] = static_cast<std::int16_t>(i);
  }
}

std::optional<Letter> OrderedAlphabet::find(char symbol) const {
  const auto idx = index_[static_cast<unsigned char>(symbol)];
  if (idx < 0) return std::nullopt;
  return static_cast<Letter>(idx);
}

Letter OrderedAlphabet::letter(char symbol) const {
  if (auto l = find(symbol)) return *l;
  throw std::invalid_argument("symbol '" + std::string(1, symbol) + "' not in alphabet \"" +
                              symbols_ + "\"");
}

AlphabetPtr make_alphabet(std::string_view symbols) {
  return std::make_shared<const OrderedAlphabet>(symbols);
}

AlphabetPtr natural_alphabet(std::string_view text) {
  std::string symbols(text);
  std::sort(symbols.begin(), symbols.end(),
            [](char a, char b) { return static_cast<unsigned char>(a) < static_cast<unsigned char>(b); });
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  return make_alphabet(symbols);
}

AlphabetPtr standard_alphabet(std::size_t k) {
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";
  if (k == 0 || k > kLetters.size()) {
    throw std::invalid_argument("standard alphabet size must be in 1..26");
  }
  return make_alphabet(kLetters.substr(0, k));
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
  for (Letter l : letters_) {
    if (l >= alphabet_->size()) throw std::invalid_argument("letter index out of range");
  }
}

Word Word::parse(std::string_view text, AlphabetPtr alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(alphabet->letter(c));
  return Word(std::move(alphabet), std::move(letters));
}

Word Word::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("cannot infer an alphabet from the empty word");
  return parse(text, natural_alphabet(text));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(alphabet_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(alphabet_->symbol(l));
  return out;
}

Word& Word::operator+=(const Word& other) {
  if (!alphabet_) alphabet_ = other.alphabet_;
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word& Word::push_back(Letter letter) {
  letters_.push_back(letter);
  return *this;
}

bool operator==(const Word& a, const Word& b) {
  if (a.letters_ != b.letters_) return false;
  if (a.alphabet_ == b.alphabet_) return true;
  if (!a.alphabet_ || !b.alphabet_) return a.letters_.empty();
  return *a.alphabet_ == *b.alphabet_;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::size_t ParikhVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::string ParikhVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

bool is_primitive(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("primitivity is undefined for the empty word");
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return false;
  }
  return true;
}

bool is_primitive(const Word& w) { return is_primitive(w.letters()); }

std::vector<std::size_t> sorted_rotation_starts(std::span<const Letter> w) {
  std::vector<std::size_t> starts(w.size());
  std::iota(starts.begin(), starts.end(), std::size_t{0});
  std::stable_sort(starts.begin(), starts.end(), [w](std::size_t i, std::size_t j) {
    return compare_rotations(w, i, j) < 0;
  });
  return starts;
}

Word rotation(const Word& w, std::size_t shift) {
  if (w.empty()) return w;
  shift %= w.size();
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift), out.end());
  return Word(w.alphabet_ptr(), std::move(out));
}

std::vector<Word> conjugates_sorted(const Word& w) {
  if (!is_primitive(w)) {
    throw std::invalid_argument("conjugates of \"" + w.str() + "\" are not distinct: word is not primitive");
  }
  std::vector<Word> rows;
  rows.reserve(w.size());
  for (std::size_t start : sorted_rotation_starts(w.letters())) rows.push_back(rotation(w, start));
  return rows;
}

bool is_conjugate(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  const std::size_t n = u.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool same = true;
    for (std::size_t t = 0; t < n && same; ++t) same = u[(s + t) % n] == v[t];
    if (same) return true;
  }
  return false;
}

Word least_rotation(const Word& w) {
  require_nonempty(w, "least_rotation");
  std::size_t best = 0;
  for (std::size_t s = 1; s < w.size(); ++s) {
    if (compare_rotations(w.letters(), s, best) < 0) best = s;
  }
  return rotation(w, best);
}

bool is_lyndon(std::span<const Letter> w) {
  if (w.empty()) throw std::invalid_argument("Lyndon property is undefined for the empty word");
  // Lyndon iff strictly smaller than every proper rotation.
  for (std::size_t s = 1; s < w.size(); ++s) {
    if (compare_rotations(w, 0, s) >= 0) return false;
  }
  return true;
}

bool is_lyndon(const Word& w) { return is_lyndon(w.letters()); }

Word reversal(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word(w.alphabet_ptr(), std::move(out));
}

bool is_palindrome(std::span<const Letter> w) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

bool is_palindrome(const Word& w) { return is_palindrome(w.letters()); }

ParikhVector parikh(const Word& w) {
  ParikhVector p{std::vector<std::size_t>(w.alphabet().size(), 0)};
  for (Letter l : w.letters()) ++p.counts[l];
  return p;
}

std::vector<Letter> alph(std::span<const Letter> w) {
  std::vector<Letter> letters(w.begin(), w.end());
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return letters;
}

std::vector<Letter> alph(const Word& w) { return alph(w.letters()); }

Word conjugator(const Word& w) {
  require_nonempty(w, "conjugator");
  return rotation(w, 1);
}

}  // namespace pcw
