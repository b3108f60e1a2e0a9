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

// Burrows-Wheeler matrix and transform of primitive words, clustering
// classification, and the decomposition of consecutive matrix rows of a
// perfectly clustering word.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcw/words.hpp"

namespace pcw {

struct BWRecord {
  Word source;
  std::vector<Word> rows;  // sorted conjugates
  Word first_column;
  Word last_column;
};

struct ClusteringVerdict {
  /// One-based permutation over Alph(w): the i-th run of the transform is
  /// made of the permutation[i]-th smallest letter of w. Absent when some
  /// letter is split across several runs.
  std::optional<std::vector<std::size_t>> permutation;
  bool perfect = false;

  /// "451623" for small alphabets, comma separated otherwise; "none" when
  /// the word is not clustering.
  std::string permutation_str() const;
};

/// Rows i and i+1 of a perfectly clustering matrix read y·m·x and y·m̃·x.
struct RowPairDecomposition {
  std::size_t row = 0;  // zero-based index of the upper row
  Word y;
  Word m;
  Word x;
  /// Zero-based index j of the gap π_{j+1} of the special palindromic
  /// factorization with x·y = π_{j+1}; m begins with the (j+1)-th letter.
  std::size_t gap_index = 0;
};

BWRecord bw_matrix(const Word& w);
Word bwt(const Word& w);
/// Transform of a primitive letter sequence, without building rows.
std::vector<Letter> bwt_letters(std::span<const Letter> w);

ClusteringVerdict clustering_permutation(const Word& w);
bool is_perfectly_clustering(const Word& w);
/// Same test on raw letters; the caller guarantees primitivity.
bool is_perfectly_clustering_unchecked(std::span<const Letter> w);

/// Decomposes rows `row` and `row + 1` (zero-based). The source must be
/// perfectly clustering.
RowPairDecomposition row_pair_decompose(const BWRecord& record, std::size_t row);

/// Lower Christoffel word with p letters a and q letters b. Requires
/// gcd(p, q) = 1.
Word christoffel(std::size_t p, std::size_t q, AlphabetPtr alphabet = nullptr);

}  // namespace pcw
