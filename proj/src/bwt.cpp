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

#include "pcw/bwt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pcw/factorization.hpp"

namespace pcw {

namespace {

void require_primitive(const Word& w, const char* what) {
  if (w.empty() || !is_primitive(w)) {
    throw std::invalid_argument(std::string(what) + ": \"" + w.str() + "\" is not primitive");
  }
}

}  // namespace

std::string ClusteringVerdict::permutation_str() const {
  if (!permutation) return "none";
  const bool compact = permutation->size() <= 9;
  std::string out;
  for (std::size_t i = 0; i < permutation->size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string((*permutation)[i]);
  }
  return out;
}

BWRecord bw_matrix(const Word& w) {
  require_primitive(w, "bw_matrix");
  BWRecord record{w, conjugates_sorted(w), Word(w.alphabet_ptr()), Word(w.alphabet_ptr())};
  for (const Word& row : record.rows) {
    record.first_column.push_back(row.front());
    record.last_column.push_back(row.back());
  }
  return record;
}

std::vector<Letter> bwt_letters(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t start : sorted_rotation_starts(w)) out.push_back(w[(start + n - 1) % n]);
  return out;
}

Word bwt(const Word& w) {
  require_primitive(w, "bwt");
  return Word(w.alphabet_ptr(), bwt_letters(w.letters()));
}

ClusteringVerdict clustering_permutation(const Word& w) {
  const Word transform = bwt(w);
  const std::vector<Letter> letters = alph(w);

  std::vector<Letter> runs;
  for (std::size_t i = 0; i < transform.size(); ++i) {
    if (i == 0 || transform[i] != transform[i - 1]) runs.push_back(transform[i]);
  }
  ClusteringVerdict verdict;
  // Each letter of Alph(w) must form exactly one run.
  if (runs.size() != letters.size()) return verdict;

  std::vector<std::size_t> pi;
  pi.reserve(runs.size());
  for (Letter l : runs) {
    auto rank = std::lower_bound(letters.begin(), letters.end(), l) - letters.begin();
    pi.push_back(static_cast<std::size_t>(rank) + 1);
  }
  const std::size_t k = pi.size();
  bool perfect = true;
  for (std::size_t i = 0; i < k; ++i) perfect = perfect && pi[i] == k - i;
  verdict.permutation = std::move(pi);
  verdict.perfect = perfect;
  return verdict;
}

bool is_perfectly_clustering_unchecked(std::span<const Letter> w) {
  const std::vector<Letter> transform = bwt_letters(w);
  return std::is_sorted(transform.rbegin(), transform.rend());
}

bool is_perfectly_clustering(const Word& w) {
  require_primitive(w, "is_perfectly_clustering");
  return is_perfectly_clustering_unchecked(w.letters());
}

RowPairDecomposition row_pair_decompose(const BWRecord& record, std::size_t row) {
  const std::size_t n = record.rows.size();
  if (row + 1 >= n) {
    throw std::out_of_range("row pair " + std::to_string(row) + "," + std::to_string(row + 1) +
                            " is outside a matrix with " + std::to_string(n) + " rows");
  }
  if (!is_perfectly_clustering(record.source)) {
    throw std::invalid_argument("row_pair_decompose: \"" + record.source.str() +
                                "\" is not perfectly clustering");
  }
  const Word& upper = record.rows[row];
  const Word& lower = record.rows[row + 1];

  std::size_t prefix = 0;
  while (prefix < n && upper[prefix] == lower[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < n - prefix && upper[n - 1 - suffix] == lower[n - 1 - suffix]) ++suffix;

  auto fail = [&](const std::string& why) {
    return InconsistencyError("rows \"" + upper.str() + "\" and \"" + lower.str() + "\": " + why);
  };
  if (prefix + suffix >= n) throw fail("rows coincide");

  RowPairDecomposition d;
  d.row = row;
  d.y = upper.slice(0, prefix);
  d.m = upper.slice(prefix, n - prefix - suffix);
  d.x = upper.slice(n - suffix);
  if (lower.slice(prefix, n - prefix - suffix) != reversal(d.m)) {
    throw fail("middle factors are not mutual reversals");
  }

  // The rows of every conjugate coincide, so the Lyndon row carries the
  // factorization.
  const SpecialFactorization f = canonical_special_factorization(record.rows.front());
  auto pos = std::find(f.letters.begin(), f.letters.end(), d.m.front());
  if (pos == f.letters.end() || pos + 1 == f.letters.end()) {
    throw fail("middle factor starts with an unexpected letter");
  }
  d.gap_index = static_cast<std::size_t>(pos - f.letters.begin());
  if (d.x + d.y != f.gaps[d.gap_index]) throw fail("x·y is not the matching palindrome");
  return d;
}

Word christoffel(std::size_t p, std::size_t q, AlphabetPtr alphabet) {
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("christoffel: (" + std::to_string(p) + "," + std::to_string(q) +
                                ") is not a coprime pair");
  }
  if (!alphabet) alphabet = standard_alphabet(2);
  if (alphabet->size() < 2) throw std::invalid_argument("christoffel: need a two-letter alphabet");
  const std::size_t n = p + q;
  Word w(alphabet);
  // Letter i is b exactly when floor(i q / n) steps up.
  for (std::size_t i = 1; i <= n; ++i) {
    const bool step = (i * q) / n != ((i - 1) * q) / n;
    w.push_back(step ? Letter{1} : Letter{0});
  }
  return w;
}

}  // namespace pcw
