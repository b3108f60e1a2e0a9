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

#include "pcw/enumeration.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "pcw/bwt.hpp"

namespace pcw {

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

constexpr std::size_t kBatchSize = 4096;

// Duval's successor, resumable so that workers can pull batches.
class LyndonGenerator {
 public:
  LyndonGenerator(std::size_t k, std::size_t max_len) : k_(k), max_len_(max_len), current_{0} {}

  bool next(std::vector<Letter>& out) {
    if (current_.empty()) return false;
    out = current_;
    advance();
    return true;
  }

 private:
  void advance() {
    const std::size_t period = current_.size();
    while (current_.size() < max_len_) current_.push_back(current_[current_.size() - period]);
    while (!current_.empty() && current_.back() + 1u == k_) current_.pop_back();
    if (!current_.empty()) ++current_.back();
  }

  std::size_t k_;
  std::size_t max_len_;
  std::vector<Letter> current_;
};

bool uses_all_letters(std::span<const Letter> w, std::size_t k) {
  std::uint32_t mask = 0;
  for (Letter l : w) mask |= 1u << l;
  return mask == (k >= 32 ? ~0u : (1u << k) - 1u);
}

bool accept(std::span<const Letter> w, const EnumerationRequest& req) {
  if (req.full_alphabet && !uses_all_letters(w, req.alphabet_size)) return false;
  // A perfectly clustering Lyndon word ends with its largest letter.
  if (*std::max_element(w.begin(), w.end()) != w.back()) return false;
  return is_perfectly_clustering_unchecked(w);
}

}  // namespace

void for_each_lyndon_word(std::size_t k, std::size_t max_len,
                          const std::function<void(std::span<const Letter>)>& visit) {
  if (k == 0 || max_len == 0) return;
  LyndonGenerator gen(k, max_len);
  std::vector<Letter> w;
  while (gen.next(w)) visit(w);
}

void check_request(const EnumerationRequest& req, const EnumerationLimits& limits) {
  if (req.alphabet_size == 0 || req.max_length == 0) {
    throw std::invalid_argument("enumeration needs k >= 1 and a maximum length >= 1");
  }
  if (req.alphabet_size > limits.max_alphabet || req.max_length > limits.max_length ||
      req.alphabet_size > 26) {
    throw std::length_error("enumeration of k=" + std::to_string(req.alphabet_size) +
                            ", N=" + std::to_string(req.max_length) + " exceeds the caps k <= " +
                            std::to_string(limits.max_alphabet) + ", N <= " +
                            std::to_string(limits.max_length) +
                            "; lower k or N, or raise the limits explicitly");
  }
}

std::vector<Word> enumerate_brute(const EnumerationRequest& req, const EnumerationLimits& limits,
                                  std::size_t jobs) {
  check_request(req, limits);
  const AlphabetPtr alphabet = standard_alphabet(req.alphabet_size);
  LyndonGenerator gen(req.alphabet_size, req.max_length);
  std::mutex gen_mutex;
  std::mutex out_mutex;
  std::vector<std::vector<Letter>> found;

  auto worker = [&] {
    std::vector<std::vector<Letter>> batch(kBatchSize);
    std::vector<std::vector<Letter>> local;
    while (true) {
      std::size_t filled = 0;
      {
        std::lock_guard lock(gen_mutex);
        while (filled < kBatchSize && gen.next(batch[filled])) ++filled;
      }
      if (filled == 0) break;
      for (std::size_t i = 0; i < filled; ++i) {
        if (accept(batch[i], req)) local.push_back(batch[i]);
      }
    }
    std::lock_guard lock(out_mutex);
    found.insert(found.end(), local.begin(), local.end());
  };

  jobs = std::max<std::size_t>(jobs, 1);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  std::vector<Word> words;
  words.reserve(found.size());
  for (auto& letters : found) words.emplace_back(alphabet, std::move(letters));
  std::sort(words.begin(), words.end(), length_lex_less);
  return words;
}

ClosureResult closure_with_witnesses(const EnumerationRequest& req, const EnumerationLimits& limits) {
  check_request(req, limits);
  const std::size_t k = req.alphabet_size;
  const AlphabetPtr alphabet = standard_alphabet(k);

  std::set<std::vector<Letter>> seen;
  std::map<std::size_t, std::vector<Word>> pending;
  ClosureResult result;

  const EnumerationRequest seed_req{k, std::min<std::size_t>(req.max_length, 2), false};
  for (Word& seed : enumerate_brute(seed_req, limits)) {
    seen.emplace(seed.letters().begin(), seed.letters().end());
    pending[seed.size()].push_back(std::move(seed));
  }

  std::vector<Automorphism> automorphisms;
  for (std::size_t l = 0; l < k; ++l) {
    automorphisms.push_back({Side::lambda, static_cast<Letter>(l)});
    automorphisms.push_back({Side::rho, static_cast<Letter>(l)});
  }

  // Images are strictly longer than their parents, so lengths are final
  // once reached in increasing order.
  for (auto it = pending.begin(); it != pending.end(); ++it) {
    for (const Word& u : it->second) {
      for (std::size_t shift = 0; shift < u.size(); ++shift) {
        const Word parent = rotation(u, shift);
        const GroupWord source(parent);
        for (const Automorphism& f : automorphisms) {
          auto child = apply(f, source).positive_word();
          if (!child || child->size() <= parent.size() || child->size() > req.max_length) continue;
          if (!is_primitive(*child)) continue;
          Word rep = least_rotation(*child);
          if (!seen.emplace(rep.letters().begin(), rep.letters().end()).second) continue;
          result.witnesses.emplace(rep.str(), GenerationStep{parent, f, *child, rep});
          pending[rep.size()].push_back(std::move(rep));
        }
      }
    }
  }

  for (const auto& letters : seen) {
    std::span<const Letter> view(letters);
    if (req.full_alphabet && !uses_all_letters(view, k)) continue;
    result.words.emplace_back(alphabet, letters);
  }
  std::sort(result.words.begin(), result.words.end(), length_lex_less);
  return result;
}

std::vector<Word> enumerate_closure(const EnumerationRequest& req, const EnumerationLimits& limits) {
  return closure_with_witnesses(req, limits).words;
}

std::vector<GenerationStep> witness_chain(const ClosureResult& closure, const Word& w) {
  std::vector<GenerationStep> chain;
  std::string key = w.str();
  for (auto it = closure.witnesses.find(key); it != closure.witnesses.end();
       it = closure.witnesses.find(key)) {
    chain.push_back(it->second);
    key = least_rotation(it->second.parent).str();
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

CrossValidationReport cross_validate(const EnumerationRequest& req, const EnumerationLimits& limits,
                                     std::size_t jobs) {
  CrossValidationReport report;
  report.request = req;
  report.brute = enumerate_brute(req, limits, jobs);
  report.closure = enumerate_closure(req, limits);
  std::set_difference(report.brute.begin(), report.brute.end(), report.closure.begin(),
                      report.closure.end(), std::back_inserter(report.only_in_brute), length_lex_less);
  std::set_difference(report.closure.begin(), report.closure.end(), report.brute.begin(),
                      report.brute.end(), std::back_inserter(report.only_in_closure), length_lex_less);
  for (const Word& w : report.brute) ++report.counts_by_length[w.size()];
  return report;
}

}  // namespace pcw
