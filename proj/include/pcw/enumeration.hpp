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

// Two independent generators of perfectly clustering Lyndon words:
// exhaustive filtering of Lyndon words, and closure of the short words under
// the automorphisms λ_ℓ / ρ_ℓ. Output order is (length, lexicographic).

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pcw/free_group.hpp"
#include "pcw/words.hpp"

namespace pcw {

struct EnumerationLimits {
  std::size_t max_alphabet = 4;
  std::size_t max_length = 16;
};

struct EnumerationRequest {
  std::size_t alphabet_size = 2;
  std::size_t max_length = 8;
  bool full_alphabet = false;
};

/// child = automorphism(parent), with |child| > |parent|. The parent is the
/// conjugate actually mapped; `representative` is the Lyndon conjugate of
/// the child.
struct GenerationStep {
  Word parent;
  Automorphism automorphism;
  Word child;
  Word representative;
};

struct ClosureResult {
  std::vector<Word> words;
  /// One witness step per generated word, keyed by its text. Seeds have none.
  std::map<std::string, GenerationStep> witnesses;
};

struct CrossValidationReport {
  EnumerationRequest request;
  std::vector<Word> brute;
  std::vector<Word> closure;
  std::vector<Word> only_in_brute;
  std::vector<Word> only_in_closure;
  std::map<std::size_t, std::size_t> counts_by_length;

  bool consistent() const { return only_in_brute.empty() && only_in_closure.empty(); }
};

/// Visits every Lyndon word of length ≤ max_len over k letters in
/// lexicographic order, using Duval's successor.
/// Shorter words first, then lexicographic. Enumeration results use this order.
bool length_lex_less(const Word& a, const Word& b);

void for_each_lyndon_word(std::size_t k, std::size_t max_len,
                          const std::function<void(std::span<const Letter>)>& visit);

/// Throws std::length_error with guidance when the request exceeds `limits`.
void check_request(const EnumerationRequest& req, const EnumerationLimits& limits = {});

std::vector<Word> enumerate_brute(const EnumerationRequest& req, const EnumerationLimits& limits = {},
                                  std::size_t jobs = 1);

ClosureResult closure_with_witnesses(const EnumerationRequest& req,
                                     const EnumerationLimits& limits = {});
std::vector<Word> enumerate_closure(const EnumerationRequest& req,
                                    const EnumerationLimits& limits = {});

/// Steps from a seed to `w` (a Lyndon word found by the closure), oldest
/// first. Empty for seeds.
std::vector<GenerationStep> witness_chain(const ClosureResult& closure, const Word& w);

CrossValidationReport cross_validate(const EnumerationRequest& req,
                                     const EnumerationLimits& limits = {}, std::size_t jobs = 1);

}  // namespace pcw
