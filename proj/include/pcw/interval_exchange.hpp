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

// Symmetric discrete interval exchanges. Points of [n] are one-based, as are
// start points of word encodings, so that a start point equals the rank of
// the encoded word among its sorted conjugates.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcw/words.hpp"

namespace pcw {

class Composition {
 public:
  /// Throws std::invalid_argument on an empty tuple or a zero part.
  explicit Composition(std::vector<std::size_t> parts);
  /// Comma separated positive integers, e.g. "3,3,4".
  static Composition parse(std::string_view text);

  std::span<const std::size_t> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::size_t total() const { return total_; }
  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<std::size_t> parts_;
  std::size_t total_ = 0;
};

struct Interval {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first + 1; }
  bool contains(std::size_t x) const { return first <= x && x <= last; }
};

class IntervalExchange {
 public:
  IntervalExchange(Composition composition, AlphabetPtr alphabet, std::vector<Letter> labels);

  const Composition& composition() const { return composition_; }
  std::size_t size() const { return composition_.total(); }
  std::span<const Interval> i_intervals() const { return i_intervals_; }
  std::span<const Interval> j_intervals() const { return j_intervals_; }
  std::span<const std::ptrdiff_t> translations() const { return translations_; }

  /// Image of the point x in [1, n].
  std::size_t operator()(std::size_t x) const { return images_[x - 1]; }
  /// Images of 1..n in order.
  std::span<const std::size_t> images() const { return images_; }
  /// Zero-based h with x in I_{h+1}.
  std::size_t interval_of(std::size_t x) const { return interval_of_[x - 1]; }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  /// Letter written for points of each I interval.
  std::span<const Letter> labels() const { return labels_; }

 private:
  Composition composition_;
  AlphabetPtr alphabet_;
  std::vector<Letter> labels_;
  std::vector<Interval> i_intervals_;
  std::vector<Interval> j_intervals_;
  std::vector<std::ptrdiff_t> translations_;
  std::vector<std::size_t> images_;
  std::vector<std::size_t> interval_of_;
};

/// Exchange labelled by the first k lowercase letters.
IntervalExchange build_iet(const Composition& c);
IntervalExchange build_iet(const Composition& c, AlphabetPtr alphabet, std::vector<Letter> labels);

bool is_circular(const IntervalExchange& e);
/// Cycle decomposition, each cycle starting at its smallest point, cycles
/// ordered by that point.
std::vector<std::vector<std::size_t>> cycles(const IntervalExchange& e);

/// Reads the labels of r, σ(r), ..., σ^{n-1}(r). Requires a circular exchange.
Word word_encoding(const IntervalExchange& e, std::size_t r);

/// m_h = c_1 + ... + c_{h-1} + 1 for each h.
std::vector<std::size_t> interval_minima(const IntervalExchange& e);

struct WordExchange {
  IntervalExchange exchange;
  std::size_t start = 1;
};

/// The exchange encoding a perfectly clustering primitive word, built from
/// its letter counts over Alph(w), together with the start point.
WordExchange iet_of_word(const Word& w);

}  // namespace pcw
