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

#include "pcw/interval_exchange.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "pcw/bwt.hpp"

namespace pcw {

Composition::Composition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a composition needs at least one part");
  for (std::size_t c : parts_) {
    if (c == 0) throw std::invalid_argument("composition parts must be positive");
    total_ += c;
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<std::size_t> parts;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw std::invalid_argument("bad composition part \"" + std::string(token) + "\"");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

std::string Composition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

IntervalExchange::IntervalExchange(Composition composition, AlphabetPtr alphabet,
                                   std::vector<Letter> labels)
    : composition_(std::move(composition)), alphabet_(std::move(alphabet)), labels_(std::move(labels)) {
  const auto c = composition_.parts();
  const std::size_t k = c.size();
  const std::size_t n = composition_.total();
  if (!alphabet_ || labels_.size() != k) {
    throw std::invalid_argument("interval exchange needs one label per interval");
  }
  for (Letter l : labels_) {
    if (l >= alphabet_->size()) throw std::invalid_argument("interval label outside the alphabet");
  }

  // I_h has length c_h; J_h has length c_{k+1-h}.
  std::size_t first = 1;
  for (std::size_t h = 0; h < k; ++h) {
    i_intervals_.push_back({first, first + c[h] - 1});
    first += c[h];
  }
  first = 1;
  for (std::size_t h = 0; h < k; ++h) {
    const std::size_t len = c[k - 1 - h];
    j_intervals_.push_back({first, first + len - 1});
    first += len;
  }

  // t_h = sum_{i>h} c_i - sum_{i<h} c_i
  std::size_t before = 0;
  for (std::size_t h = 0; h < k; ++h) {
    const std::size_t after = n - before - c[h];
    translations_.push_back(static_cast<std::ptrdiff_t>(after) - static_cast<std::ptrdiff_t>(before));
    before += c[h];
  }

  images_.resize(n);
  interval_of_.resize(n);
  for (std::size_t h = 0; h < k; ++h) {
    for (std::size_t x = i_intervals_[h].first; x <= i_intervals_[h].last; ++x) {
      images_[x - 1] = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(x) + translations_[h]);
      interval_of_[x - 1] = h;
    }
  }
}

IntervalExchange build_iet(const Composition& c) {
  std::vector<Letter> labels(c.size());
  for (std::size_t h = 0; h < labels.size(); ++h) labels[h] = static_cast<Letter>(h);
  return IntervalExchange(c, standard_alphabet(c.size()), std::move(labels));
}

IntervalExchange build_iet(const Composition& c, AlphabetPtr alphabet, std::vector<Letter> labels) {
  return IntervalExchange(c, std::move(alphabet), std::move(labels));
}

std::vector<std::vector<std::size_t>> cycles(const IntervalExchange& e) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(e.size() + 1, false);
  for (std::size_t start = 1; start <= e.size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = out.emplace_back();
    for (std::size_t x = start; !seen[x]; x = e(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
  }
  return out;
}

bool is_circular(const IntervalExchange& e) {
  std::size_t length = 0;
  std::size_t x = 1;
  do {
    x = e(x);
    ++length;
  } while (x != 1);
  return length == e.size();
}

Word word_encoding(const IntervalExchange& e, std::size_t r) {
  if (r < 1 || r > e.size()) {
    throw std::out_of_range("start point " + std::to_string(r) + " outside [1, " +
                            std::to_string(e.size()) + "]");
  }
  if (!is_circular(e)) {
    throw std::invalid_argument("exchange of composition (" + e.composition().str() +
                                ") is not circular");
  }
  Word w(e.alphabet());
  std::size_t x = r;
  for (std::size_t p = 0; p < e.size(); ++p, x = e(x)) w.push_back(e.labels()[e.interval_of(x)]);
  return w;
}

std::vector<std::size_t> interval_minima(const IntervalExchange& e) {
  std::vector<std::size_t> minima;
  for (const Interval& i : e.i_intervals()) minima.push_back(i.first);
  return minima;
}

WordExchange iet_of_word(const Word& w) {
  if (!is_perfectly_clustering(w)) {
    throw std::invalid_argument("iet_of_word: \"" + w.str() + "\" is not perfectly clustering");
  }
  std::vector<Letter> letters = alph(w);
  const ParikhVector counts = parikh(w);
  std::vector<std::size_t> parts;
  for (Letter a : letters) parts.push_back(counts.counts[a]);

  const std::vector<Word> rows = conjugates_sorted(w);
  const auto rank = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), w) - rows.begin());

  WordExchange result{IntervalExchange(Composition(std::move(parts)), w.alphabet_ptr(), std::move(letters)),
                      rank + 1};
  if (!is_circular(result.exchange) || word_encoding(result.exchange, result.start) != w) {
    throw InconsistencyError("encoding of (" + result.exchange.composition().str() + ") from " +
                             std::to_string(result.start) + " does not reproduce \"" + w.str() + "\"");
  }
  return result;
}

}  // namespace pcw
