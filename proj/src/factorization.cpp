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

#include "pcw/factorization.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pcw/bwt.hpp"

namespace pcw {

namespace {

void require_primitive(const Word& w, const char* what) {
  if (w.empty() || !is_primitive(w)) {
    throw std::invalid_argument(std::string(what) + ": \"" + w.str() + "\" is not primitive");
  }
}

SpecialFactorization from_marks(const Word& w, std::vector<Letter> letters,
                                std::vector<std::size_t> marks) {
  SpecialFactorization f{w.alphabet_ptr(), std::move(letters), {}, std::move(marks)};
  for (std::size_t i = 0; i + 1 < f.marks.size(); ++i) {
    f.gaps.push_back(w.slice(f.marks[i] + 1, f.marks[i + 1] - f.marks[i] - 1));
  }
  return f;
}

}  // namespace

Word SpecialFactorization::word() const {
  Word w(alphabet);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) w += gaps[i - 1];
    w.push_back(letters[i]);
  }
  return w;
}

bool SpecialFactorization::is_palindromic() const {
  return std::all_of(gaps.begin(), gaps.end(), [](const Word& g) { return is_palindrome(g); });
}

std::string SpecialFactorization::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += "|" + gaps[i - 1].str() + "|";
    out += alphabet->symbol(letters[i]);
  }
  return out;
}

SpecialFactorization canonical_special_factorization(const Word& w) {
  require_primitive(w, "canonical_special_factorization");
  if (!is_lyndon(w) || !is_perfectly_clustering(w)) {
    throw std::invalid_argument("canonical_special_factorization: \"" + w.str() +
                                "\" is not a perfectly clustering Lyndon word");
  }
  const std::vector<Letter> letters = alph(w);
  std::vector<std::size_t> marks;
  for (Letter a : letters) {
    std::optional<std::size_t> best;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] != a) continue;
      if (!best || w.slice(p) < w.slice(*best)) best = p;
    }
    marks.push_back(*best);
  }
  if (marks.front() != 0 || marks.back() + 1 != w.size() ||
      !std::is_sorted(marks.begin(), marks.end()) ||
      std::adjacent_find(marks.begin(), marks.end()) != marks.end()) {
    throw InconsistencyError("smallest suffixes of \"" + w.str() +
                             "\" do not mark a special factorization");
  }
  SpecialFactorization f = from_marks(w, letters, std::move(marks));
  if (!f.is_palindromic()) {
    throw InconsistencyError("special factorization " + f.str() + " has a non-palindromic gap");
  }
  return f;
}

std::vector<SpecialFactorization> enumerate_special_factorizations(const Word& w,
                                                                   std::size_t cap) {
  std::vector<SpecialFactorization> out;
  const std::size_t n = w.size();
  if (n == 0) return out;
  const std::vector<Letter> letters = alph(w);
  const std::size_t k = letters.size();
  if (w.front() != letters.front() || w.back() != letters.back()) return out;
  if (k == 1) {
    if (n == 1) out.push_back(from_marks(w, letters, {0}));
    return out;
  }

  std::vector<std::vector<std::size_t>> occurrences(k);
  for (std::size_t p = 1; p + 1 < n; ++p) {
    auto idx = std::lower_bound(letters.begin(), letters.end(), w[p]) - letters.begin();
    occurrences[static_cast<std::size_t>(idx)].push_back(p);
  }
  std::size_t candidates = 1;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    const std::size_t c = occurrences[i].size();
    if (c == 0) return out;
    if (candidates > cap / c) {
      throw std::length_error("enumerate_special_factorizations: more than " +
                              std::to_string(cap) + " candidate markings for \"" + w.str() + "\"");
    }
    candidates *= c;
  }

  std::vector<std::size_t> marks(k);
  marks.front() = 0;
  marks.back() = n - 1;
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i + 1 == k) {
      out.push_back(from_marks(w, letters, marks));
      return;
    }
    for (std::size_t p : occurrences[i]) {
      if (p <= marks[i - 1]) continue;
      marks[i] = p;
      place(i + 1);
    }
  };
  place(1);
  return out;
}

Word build_W(const SpecialFactorization& f) {
  Word w(f.alphabet);
  for (std::size_t i = f.letters.size(); i-- > 0;) {
    w.push_back(f.letters[i]);
    if (i) w += f.gaps[i - 1];
  }
  return w;
}

std::optional<TwoPalindromeSplit> two_palindrome_split(const Word& w) {
  const auto letters = w.letters();
  for (std::size_t s = 0; s <= w.size(); ++s) {
    if (is_palindrome(letters.first(s)) && is_palindrome(letters.subspan(s))) {
      return TwoPalindromeSplit{w.slice(0, s), w.slice(s)};
    }
  }
  return std::nullopt;
}

std::optional<ConditionIIWitness> satisfies_condition_ii(const Word& w) {
  require_primitive(w, "satisfies_condition_ii");
  auto split = two_palindrome_split(w);
  if (!split) return std::nullopt;
  for (SpecialFactorization& f : enumerate_special_factorizations(w)) {
    if (f.is_palindromic()) return ConditionIIWitness{std::move(*split), std::move(f)};
  }
  return std::nullopt;
}

std::optional<SpecialFactorization> satisfies_condition_iii(const Word& w) {
  require_primitive(w, "satisfies_condition_iii");
  for (SpecialFactorization& f : enumerate_special_factorizations(w)) {
    if (is_conjugate(build_W(f), w)) return std::move(f);
  }
  return std::nullopt;
}

}  // namespace pcw
