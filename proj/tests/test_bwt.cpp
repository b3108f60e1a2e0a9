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

#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "pcw/bwt.hpp"
#include "pcw/enumeration.hpp"
#include "pcw/factorization.hpp"

namespace pcw {
namespace {

std::vector<std::string> texts(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

TEST_CASE("bw_matrix") {
  SUBCASE("apartment") {
    const BWRecord r = bw_matrix(Word::parse("apartment"));
    CHECK(r.rows.size() == 9);
    CHECK(r.last_column.str() == "tpmteaanr");
    CHECK(r.first_column.str() == "aaemnprtt");
  }
  SUBCASE("acacacbbbc") {
    const BWRecord r = bw_matrix(Word::parse("acacacbbbc"));
    CHECK(texts(r.rows) == std::vector<std::string>{"acacacbbbc", "acacbbbcac", "acbbbcacac", "bbbcacacac",
                                                    "bbcacacacb", "bcacacacbb", "cacacacbbb", "cacacbbbca",
                                                    "cacbbbcaca", "cbbbcacaca"});
    CHECK(r.last_column.str() == "ccccbbbaaa");
  }
  SUBCASE("ab") {
    const BWRecord r = bw_matrix(Word::parse("ab"));
    CHECK(texts(r.rows) == std::vector<std::string>{"ab", "ba"});
    CHECK(r.last_column.str() == "ba");
  }
  CHECK_THROWS_AS(bw_matrix(Word::parse("abab")), std::invalid_argument);
}

TEST_CASE("bwt") {
  CHECK(bwt(Word::parse("apartment")).str() == "tpmteaanr");
  CHECK(bwt(Word::parse("aluminium")).str() == "mmnauuiil");
  CHECK(bwt(Word::parse("aab")).str() == "baa");
  CHECK_THROWS_AS(bwt(Word::parse("aa")), std::invalid_argument);

  oracle::for_each_word(3, 8, [](const std::string& s) {
    if (!oracle::is_primitive(s)) return;
    CHECK(bwt(Word::parse(s, standard_alphabet(3))).str() == oracle::bwt(s));
  });
}

TEST_CASE("clustering_permutation") {
  const ClusteringVerdict aluminium = clustering_permutation(Word::parse("aluminium"));
  REQUIRE(aluminium.permutation);
  CHECK(aluminium.permutation_str() == "451623");
  CHECK_FALSE(aluminium.perfect);

  const ClusteringVerdict three_letters = clustering_permutation(Word::parse("acacacbbbc"));
  CHECK(three_letters.permutation_str() == "321");
  CHECK(three_letters.perfect);

  const ClusteringVerdict apartment = clustering_permutation(Word::parse("apartment"));
  CHECK_FALSE(apartment.permutation);
  CHECK_FALSE(apartment.perfect);
  CHECK(apartment.permutation_str() == "none");

  // Single letter: trivially weakly decreasing.
  const ClusteringVerdict single = clustering_permutation(Word::parse("a"));
  CHECK(single.permutation_str() == "1");
  CHECK(single.perfect);

  // Classified over Alph(w), not the declared alphabet.
  const ClusteringVerdict sparse = clustering_permutation(Word::parse("ac", standard_alphabet(3)));
  CHECK(sparse.permutation_str() == "21");
  CHECK(sparse.perfect);
}

TEST_CASE("is_perfectly_clustering") {
  CHECK(is_perfectly_clustering(Word::parse("aab")));
  CHECK(is_perfectly_clustering(Word::parse("acacacbbbc")));
  CHECK_FALSE(is_perfectly_clustering(Word::parse("aluminium")));
  CHECK_THROWS_AS(is_perfectly_clustering(Word::parse("abab")), std::invalid_argument);

  oracle::for_each_word(3, 9, [](const std::string& s) {
    if (!oracle::is_primitive(s)) return;
    const Word w = Word::parse(s, standard_alphabet(3));
    const bool pc = is_perfectly_clustering(w);
    CHECK(pc == oracle::weakly_decreasing(oracle::bwt(s)));
    CHECK(pc == clustering_permutation(w).perfect);
  });
}

TEST_CASE("conjugates share their transform and perfect clustering") {
  oracle::for_each_word(3, 10, [](const std::string& s) {
    if (!oracle::is_primitive(s)) return;
    const Word w = Word::parse(s, standard_alphabet(3));
    const Word b = bwt(w);
    const bool pc = is_perfectly_clustering(w);
    for (std::size_t i = 1; i < w.size(); ++i) {
      const Word r = rotation(w, i);
      if (bwt(r) != b || is_perfectly_clustering(r) != pc) FAIL_CHECK(s << " rotation " << i);
    }
    if (pc) {
      std::string sorted = s;
      std::sort(sorted.rbegin(), sorted.rend());
      CHECK(b.str() == sorted);
    }
  });
}

TEST_CASE("row_pair_decompose") {
  SUBCASE("Christoffel word aaabaab, rows 3 and 4") {
    const BWRecord r = bw_matrix(Word::parse("aaabaab"));
    CHECK(texts(r.rows) == std::vector<std::string>{"aaabaab", "aabaaab", "aabaaba", "abaaaba", "abaabaa",
                                                    "baaabaa", "baabaaa"});
    const RowPairDecomposition d = row_pair_decompose(r, 2);
    CHECK(d.y.str() == "a");
    CHECK(d.m.str() == "ab");
    CHECK(d.x.str() == "aaba");
    CHECK((d.x + d.y).str() == "aabaa");
    CHECK(d.gap_index == 0);
  }
  SUBCASE("acacacbbbc") {
    const BWRecord r = bw_matrix(Word::parse("acacacbbbc"));
    const RowPairDecomposition first = row_pair_decompose(r, 0);
    CHECK(first.y.str() == "acac");
    CHECK(first.m.str() == "acbbb");
    CHECK(first.x.str() == "c");
    CHECK((first.x + first.y).str() == "cacac");
    CHECK(first.gap_index == 0);

    const RowPairDecomposition fourth = row_pair_decompose(r, 3);
    CHECK(fourth.y.str() == "bb");
    CHECK(fourth.m.str() == "bcacacac");
    CHECK(fourth.x.str() == "");
    CHECK(fourth.gap_index == 1);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(row_pair_decompose(bw_matrix(Word::parse("apartment")), 0), std::invalid_argument);
    const BWRecord r = bw_matrix(Word::parse("aab"));
    CHECK_THROWS_AS(row_pair_decompose(r, 2), std::out_of_range);
  }
}

TEST_CASE("consecutive rows of every small perfectly clustering word") {
  for (std::size_t k : {2u, 3u}) {
    for (const Word& w : enumerate_brute({k, 12, false})) {
      const SpecialFactorization f = canonical_special_factorization(w);
      // A non-Lyndon conjugate has the same matrix.
      const BWRecord r = bw_matrix(rotation(w, w.size() / 2));
      for (std::size_t i = 0; i + 1 < r.rows.size(); ++i) {
        const RowPairDecomposition d = row_pair_decompose(r, i);
        CHECK((d.y + d.m + d.x) == r.rows[i]);
        CHECK((d.y + reversal(d.m) + d.x) == r.rows[i + 1]);
        CHECK((d.x + d.y) == f.gaps[d.gap_index]);
      }
    }
  }
}

TEST_CASE("christoffel") {
  CHECK(christoffel(5, 2).str() == "aaabaab");
  CHECK(christoffel(1, 1).str() == "ab");
  CHECK(christoffel(1, 0).str() == "a");
  CHECK(christoffel(0, 1).str() == "b");
  CHECK_THROWS_AS(christoffel(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(christoffel(0, 0), std::invalid_argument);
}

TEST_CASE("two-letter perfectly clustering Lyndon words are Christoffel words") {
  std::map<std::size_t, std::size_t> found;
  oracle::for_each_word(2, 14, [&](const std::string& s) {
    if (s.find('a') == std::string::npos || s.find('b') == std::string::npos) return;
    if (!oracle::is_primitive(s) || !oracle::is_lyndon(s) || !oracle::weakly_decreasing(oracle::bwt(s))) return;
    ++found[s.size()];
    const auto p = static_cast<std::size_t>(std::count(s.begin(), s.end(), 'a'));
    CHECK(christoffel(p, s.size() - p).str() == s);
  });
  for (std::size_t n = 2; n <= 14; ++n) {
    for (std::size_t p = 1; p < n; ++p) {
      if (std::gcd(p, n - p) != 1) continue;
      const std::string c = christoffel(p, n - p).str();
      CHECK(oracle::is_lyndon(c));
      CHECK(oracle::weakly_decreasing(oracle::bwt(c)));
    }
    CHECK(found[n] == oracle::totient(n));
  }
}

}  // namespace
}  // namespace pcw
