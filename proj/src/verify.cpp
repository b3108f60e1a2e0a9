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

#include "pcw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "pcw/bwt.hpp"
#include "pcw/enumeration.hpp"
#include "pcw/factorization.hpp"
#include "pcw/free_group.hpp"
#include "pcw/interval_exchange.hpp"
#include "pcw/words.hpp"

namespace pcw {

namespace {

struct Context {
  VerifyOptions options;
  AlphabetPtr alphabet;
  std::vector<Word> pc_lyndon;  // every perfectly clustering Lyndon word within the caps
};

class Recorder {
 public:
  explicit Recorder(CheckResult& result) : result_(result) {}

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.instances;
    if (ok) return;
    ++result_.failures;
    if (!result_.counterexample) result_.counterexample = describe();
  }

  // Theory-guaranteed structure that could not be built counts as a failure.
  template <class F>
  void guarded(const std::string& subject, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] { return subject + ": " + e.what(); });
    }
  }

 private:
  CheckResult& result_;
};

struct CheckDef {
  const char* name;
  const char* statement;
  void (*run)(const Context&, Recorder&);
};

void for_each_word(const Context& ctx, std::size_t max_len, const std::function<void(const Word&)>& visit) {
  const std::size_t k = ctx.options.alphabet_size;
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<Letter> letters(n, 0);
    while (true) {
      visit(Word(ctx.alphabet, letters));
      std::size_t i = n;
      while (i > 0 && letters[i - 1] + 1u == k) letters[--i] = 0;
      if (i == 0) break;
      ++letters[i - 1];
    }
  }
}

void for_each_composition(std::size_t max_total, std::size_t max_parts,
                          const std::function<void(const Composition&)>& visit) {
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (!parts.empty()) visit(Composition(parts));
    if (parts.size() == max_parts) return;
    for (std::size_t c = 1; c <= remaining; ++c) {
      parts.push_back(c);
      extend(remaining - c);
      parts.pop_back();
    }
  };
  extend(max_total);
}

Word max_rotation(const Word& w) {
  Word best = w;
  for (std::size_t s = 1; s < w.size(); ++s) best = std::max(best, rotation(w, s));
  return best;
}

std::size_t rank_in(std::span<const Letter> letters, Letter l) {
  return static_cast<std::size_t>(std::lower_bound(letters.begin(), letters.end(), l) - letters.begin());
}

// --- Burrows-Wheeler structure ---------------------------------------------

void check_conjugate_bwt(const Context& ctx, Recorder& rec) {
  for_each_word(ctx, ctx.options.max_length, [&](const Word& w) {
    if (!is_primitive(w)) return;
    const Word b = bwt(w);
    for (std::size_t s = 1; s < w.size(); ++s) {
      const Word r = rotation(w, s);
      rec.expect(bwt(r) == b, [&] { return r.str() + " vs " + w.str(); });
    }
  });
}

void check_clustering_conjugation(const Context& ctx, Recorder& rec) {
  for (const Word& w : ctx.pc_lyndon) {
    for (std::size_t s = 0; s < w.size(); ++s) {
      const Word r = rotation(w, s);
      rec.expect(is_perfectly_clustering(r), [&] { return r.str(); });
    }
  }
}

void check_bwt_multiset(const Context& ctx, Recorder& rec) {
  for (const Word& w : ctx.pc_lyndon) {
    std::vector<Letter> sorted(w.letters().begin(), w.letters().end());
    std::sort(sorted.rbegin(), sorted.rend());
    rec.expect(bwt(w) == Word(ctx.alphabet, sorted), [&] { return w.str(); });
  }
}

void check_two_palindromes(const Context& ctx, Recorder& rec) {
  for_each_word(ctx, ctx.options.max_length, [&](const Word& w) {
    const bool split = two_palindrome_split(w).has_value();
    rec.expect(split == is_conjugate(w, reversal(w)), [&] { return w.str(); });
  });
}

void check_christoffel(const Context& ctx, Recorder& rec) {
  if (ctx.options.alphabet_size < 2) return;
  std::map<std::size_t, std::size_t> counts;
  for (const Word& w : ctx.pc_lyndon) {
    const auto letters = alph(w);
    if (letters != std::vector<Letter>{0, 1}) continue;
    ++counts[w.size()];
    const ParikhVector p = parikh(w);
    rec.expect(w == christoffel(p.counts[0], p.counts[1], ctx.alphabet), [&] { return w.str(); });
  }
  for (std::size_t n = 2; n <= ctx.options.max_length; ++n) {
    std::size_t coprime = 0;
    for (std::size_t p = 1; p < n; ++p) {
      if (std::gcd(p, n - p) != 1) continue;
      ++coprime;
      const Word c = christoffel(p, n - p, ctx.alphabet);
      rec.expect(is_lyndon(c) && is_perfectly_clustering(c), [&] { return c.str(); });
    }
    rec.expect(counts[n] == coprime, [&] {
      return "length " + std::to_string(n) + ": " + std::to_string(counts[n]) + " words, " +
             std::to_string(coprime) + " coprime pairs";
    });
  }
}

// --- Interval exchanges ------------------------------------------------------

void check_minimum_successor(const Context& ctx, Recorder& rec) {
  for_each_composition(ctx.options.max_length, std::max<std::size_t>(ctx.options.alphabet_size, 2),
                       [&](const Composition& c) {
    const IntervalExchange e = build_iet(c);
    const auto minima = interval_minima(e);
    const auto parts = c.parts();
    for (std::size_t h = 0; h + 1 < c.size(); ++h) {
      const std::size_t upto = std::accumulate(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(h + 1), std::size_t{0});
      const bool balanced = c.total() - upto == upto;
      rec.expect((e(minima[h]) == minima[h + 1]) == balanced,
                 [&] { return "(" + c.str() + ") h=" + std::to_string(h + 1); });
    }
  });
}

void check_encoding_order(const Context& ctx, Recorder& rec) {
  for_each_composition(ctx.options.max_length, std::max<std::size_t>(ctx.options.alphabet_size, 2),
                       [&](const Composition& c) {
    const IntervalExchange e = build_iet(c);
    if (!is_circular(e)) return;
    Word previous = word_encoding(e, 1);
    for (std::size_t r = 2; r <= e.size(); ++r) {
      Word current = word_encoding(e, r);
      rec.expect(previous < current, [&] { return "(" + c.str() + ") r=" + std::to_string(r); });
      previous = std::move(current);
    }
  });
}

void check_iet_equivalence(const Context& ctx, Recorder& rec) {
  for_each_composition(ctx.options.max_length, ctx.options.alphabet_size, [&](const Composition& c) {
    const IntervalExchange e = build_iet(c);
    if (!is_circular(e)) return;
    const Word w = word_encoding(e, 1);
    rec.expect(is_primitive(w) && is_perfectly_clustering(w), [&] { return "(" + c.str() + ") -> " + w.str(); });
  });
  for (const Word& lyndon : ctx.pc_lyndon) {
    for (std::size_t s = 0; s < lyndon.size(); ++s) {
      const Word w = rotation(lyndon, s);
      rec.guarded(w.str(), [&] {
        const WordExchange we = iet_of_word(w);
        rec.expect(word_encoding(we.exchange, we.start) == w, [&] { return w.str(); });
      });
    }
  }
}

void check_conjugator(const Context& ctx, Recorder& rec) {
  for (const Word& w : ctx.pc_lyndon) {
    const std::vector<Word> rows = conjugates_sorted(w);
    const IntervalExchange e = iet_of_word(w).exchange;
    const auto letters = alph(w);
    for (std::size_t x = 1; x <= rows.size(); ++x) {
      rec.expect(conjugator(rows[x - 1]) == rows[e(x) - 1] &&
                     e.interval_of(x) == rank_in(letters, rows[x - 1].front()),
                 [&] { return w.str() + " row " + std::to_string(x); });
    }
  }
}

// --- Factorizations ------------------------------------------------------------

void check_characterization(const Context& ctx, Recorder& rec) {
  for_each_word(ctx, ctx.options.max_length, [&](const Word& w) {
    if (!is_primitive(w)) return;
    const bool first = is_lyndon(w) && is_perfectly_clustering(w);
    const bool second = satisfies_condition_ii(w).has_value();
    const bool third = satisfies_condition_iii(w).has_value();
    rec.expect(first == second && second == third, [&] {
      return w.str() + " (" + std::to_string(first) + std::to_string(second) + std::to_string(third) + ")";
    });
  });
}

void check_uniqueness(const Context& ctx, Recorder& rec) {
  for (const Word& w : ctx.pc_lyndon) {
    rec.guarded(w.str(), [&] {
      const SpecialFactorization canonical = canonical_special_factorization(w);
      std::vector<SpecialFactorization> palindromic;
      for (auto& f : enumerate_special_factorizations(w)) {
        if (f.is_palindromic()) palindromic.push_back(std::move(f));
      }
      rec.expect(palindromic.size() == 1 && palindromic.front() == canonical, [&] { return w.str(); });
      for (std::size_t i = 0; i < canonical.letters.size(); ++i) {
        for (std::size_t p = 0; p < w.size(); ++p) {
          if (w[p] != canonical.letters[i]) continue;
          rec.expect(w.slice(canonical.marks[i]) <= w.slice(p),
                     [&] { return w.str() + " suffix at " + std::to_string(p); });
        }
      }
    });
  }
}

void check_smallest_conjugate(const Context& ctx, Recorder& rec) {
  for (const Word& w : ctx.pc_lyndon) {
    const SpecialFactorization f = canonical_special_factorization(w);
    for (std::size_t i = 0; i < f.letters.size(); ++i) {
      const Word candidate = rotation(w, f.marks[i]);
      for (std::size_t s = 0; s < w.size(); ++s) {
        if (w[s] != f.letters[i]) continue;
        rec.expect(candidate <= rotation(w, s), [&] { return w.str() + " letter " + std::to_string(i + 1); });
      }
    }
  }
}

void check_empty_gap(const Context& ctx, Recorder& rec) {
  for (const Word& w : ctx.pc_lyndon) {
    const SpecialFactorization f = canonical_special_factorization(w);
    const ParikhVector p = parikh(w);
    std::size_t before = 0;
    for (std::size_t s = 0; s < f.gaps.size(); ++s) {
      before += p.counts[f.letters[s]];
      const bool balanced = before == w.size() - before;
      rec.expect(f.gaps[s].empty() == balanced, [&] { return w.str() + " gap " + std::to_string(s + 1); });
    }
  }
}

Word ordering_lhs(const SpecialFactorization& f, std::size_t j, const Word& u, const Word& v) {
  const std::size_t k = f.letters.size();
  Word out = v;
  for (std::size_t t = j + 1; t-- > 0;) {
    out.push_back(f.letters[t]);
    if (t > 0) out += f.gaps[t - 1];
  }
  for (std::size_t t = k - 1; t > j; --t) {
    out.push_back(f.letters[t]);
    if (t > j + 1) out += f.gaps[t - 1];
  }
  return out + u;
}

Word ordering_rhs(const SpecialFactorization& f, std::size_t j, const Word& u, const Word& v) {
  const std::size_t k = f.letters.size();
  Word out = v;
  for (std::size_t t = j + 1; t < k; ++t) {
    out.push_back(f.letters[t]);
    if (t + 1 < k) out += f.gaps[t];
  }
  for (std::size_t t = 0; t <= j; ++t) {
    out.push_back(f.letters[t]);
    if (t < j) out += f.gaps[t];
  }
  return out + u;
}

void check_conjugate_ordering(const Context& ctx, Recorder& rec) {
  for_each_word(ctx, ctx.options.max_length, [&](const Word& w) {
    for (const SpecialFactorization& f : enumerate_special_factorizations(w)) {
      const Word big_w = build_W(f);
      for (std::size_t j = 0; j < f.gaps.size(); ++j) {
        for (std::size_t s = 0; s <= f.gaps[j].size(); ++s) {
          const Word u = f.gaps[j].slice(0, s);
          const Word v = f.gaps[j].slice(s);
          const Word lhs = ordering_lhs(f, j, u, v);
          const Word rhs = ordering_rhs(f, j, u, v);
          rec.expect(lhs < rhs && is_conjugate(lhs, big_w) && is_conjugate(rhs, w),
                     [&] { return f.str() + " gap " + std::to_string(j + 1) + " split " + std::to_string(s); });
        }
      }
    }
  });
}

void check_extremal_conjugates(const Context& ctx, Recorder& rec) {
  for_each_word(ctx, ctx.options.max_length, [&](const Word& w) {
    if (!is_primitive(w)) return;
    for (const SpecialFactorization& f : enumerate_special_factorizations(w)) {
      const Word big_w = build_W(f);
      if (!is_conjugate(big_w, w)) continue;
      rec.expect(least_rotation(w) == w && max_rotation(w) == big_w, [&] { return f.str(); });
    }
  });
}

void check_consecutive_rows(const Context& ctx, Recorder& rec) {
  for (const Word& w : ctx.pc_lyndon) {
    const BWRecord record = bw_matrix(w);
    const SpecialFactorization f = canonical_special_factorization(w);
    for (std::size_t i = 0; i + 1 < record.rows.size(); ++i) {
      rec.guarded(w.str() + " rows " + std::to_string(i + 1), [&] {
        const RowPairDecomposition d = row_pair_decompose(record, i);
        rec.expect(d.y + d.m + d.x == record.rows[i] && d.y + reversal(d.m) + d.x == record.rows[i + 1] &&
                       d.x + d.y == f.gaps[d.gap_index],
                   [&] { return w.str() + " rows " + std::to_string(i + 1); });
      });
    }
  }
}

void check_gap_nonempty(const Context& ctx, Recorder& rec) {
  const std::size_t k = ctx.options.alphabet_size;
  for (const Word& w : ctx.pc_lyndon) {
    const SpecialFactorization f = canonical_special_factorization(w);
    const ParikhVector p = parikh(w);
    for (std::size_t l = 0; l < k; ++l) {
      const auto pivot = static_cast<Letter>(l);
      if (!fg_is_positive(apply_rho(pivot, GroupWord(w)))) continue;
      std::size_t smaller = 0;
      std::size_t larger = 0;
      for (std::size_t a = 0; a < l; ++a) smaller += p.counts[a];
      for (std::size_t a = l + 1; a < k; ++a) larger += p.counts[a];
      if (smaller <= larger) continue;  // image does not grow
      // Largest i with a_i <= pivot.
      auto upper = std::upper_bound(f.letters.begin(), f.letters.end(), pivot);
      rec.expect(upper != f.letters.begin(), [&] { return w.str() + " pivot " + std::to_string(l); });
      if (upper == f.letters.begin()) continue;
      const auto first_gap = static_cast<std::size_t>(upper - f.letters.begin()) - 1;
      for (std::size_t j = first_gap; j < f.gaps.size(); ++j) {
        rec.expect(!f.gaps[j].empty(), [&] {
          return w.str() + " pivot " + ctx.alphabet->symbol(pivot) + " gap " + std::to_string(j + 1);
        });
      }
    }
  }
}

// --- Free group ------------------------------------------------------------------

GroupWord random_group_word(std::mt19937_64& rng, const AlphabetPtr& alphabet, std::size_t len) {
  std::uniform_int_distribution<std::size_t> letter(0, alphabet->size() - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<SignedLetter> factors;
  for (std::size_t i = 0; i < len; ++i) factors.push_back({static_cast<Letter>(letter(rng)), sign(rng)});
  return GroupWord(alphabet, factors);
}

void check_palindrome_preservation(const Context& ctx, Recorder& rec) {
  std::mt19937_64 rng(ctx.options.seed);
  std::uniform_int_distribution<std::size_t> half_len(0, 6);
  std::uniform_int_distribution<std::size_t> pivot(0, ctx.alphabet->size() - 1);
  for (std::size_t sample = 0; sample < ctx.options.random_samples; ++sample) {
    const std::size_t half = half_len(rng);
    const GroupWord h = random_group_word(rng, ctx.alphabet, half);
    const GroupWord middle = random_group_word(rng, ctx.alphabet, 2 * half < 12 ? 1 : 0);
    const GroupWord g = h * middle * fg_reversal(h);
    const auto l = static_cast<Letter>(pivot(rng));
    const GroupWord ell(ctx.alphabet, std::vector<SignedLetter>{{l, false}});
    rec.expect(fg_is_palindrome(g) && fg_is_palindrome(apply_lambda(l, g) * ell) &&
                   fg_is_palindrome(ell * apply_rho(l, g)),
               [&] { return g.str() + " pivot " + ctx.alphabet->symbol(l); });
  }
}

void check_positive_palindrome(const Context& ctx, Recorder& rec) {
  const std::size_t k = ctx.options.alphabet_size;
  for_each_word(ctx, std::min<std::size_t>(ctx.options.max_length, 9), [&](const Word& u) {
    for (std::size_t l = 0; l < k; ++l) {
      const auto pivot = static_cast<Letter>(l);
      if (!fg_is_positive(apply_rho(pivot, GroupWord(u)))) continue;
      const GroupWord ell_inv(ctx.alphabet, std::vector<SignedLetter>{{pivot, true}});
      for (std::size_t end = 1; end < u.size(); ++end) {
        if (u[end] <= pivot) continue;
        for (std::size_t begin = 0; begin < end; ++begin) {
          const Word pal = u.slice(begin, end - begin);
          if (!is_palindrome(pal)) continue;
          const GroupWord image = apply_rho(pivot, GroupWord(pal)) * ell_inv;
          rec.expect(fg_is_positive(image) && fg_is_palindrome(image),
                     [&] { return u.str() + " factor " + pal.str(); });
        }
      }
    }
  });
}

void check_positivity_criterion(const Context& ctx, Recorder& rec) {
  const std::size_t k = ctx.options.alphabet_size;
  for_each_word(ctx, ctx.options.max_length, [&](const Word& w) {
    const GroupWord g(w);
    for (std::size_t l = 0; l < k; ++l) {
      const auto pivot = static_cast<Letter>(l);
      for (Side side : {Side::lambda, Side::rho}) {
        const bool positive = fg_is_positive(apply({side, pivot}, g));
        rec.expect(positive == positivity_criterion(w, pivot, side), [&] {
          return w.str() + (side == Side::rho ? " rho_" : " lambda_") + ctx.alphabet->symbol(pivot);
        });
      }
    }
  });
}

void check_homomorphism(const Context& ctx, Recorder& rec) {
  std::mt19937_64 rng(ctx.options.seed + 1);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  std::uniform_int_distribution<std::size_t> pivot(0, ctx.alphabet->size() - 1);
  const std::size_t samples = std::max<std::size_t>(ctx.options.random_samples / 10, 1);
  for (std::size_t sample = 0; sample < samples; ++sample) {
    const GroupWord g = random_group_word(rng, ctx.alphabet, len(rng));
    const GroupWord h = random_group_word(rng, ctx.alphabet, len(rng));
    const Automorphism f{sample % 2 ? Side::rho : Side::lambda, static_cast<Letter>(pivot(rng))};
    rec.expect(apply(f, g * h) == apply(f, g) * apply(f, h) && apply(f, fg_invert(g)) == fg_invert(apply(f, g)),
               [&] { return g.str() + " , " + h.str() + " under " + f.str(*ctx.alphabet); });
  }
}

void check_complement(const Context& ctx, Recorder& rec) {
  for (const Word& lyndon : ctx.pc_lyndon) {
    for (std::size_t s = 0; s < lyndon.size(); ++s) {
      const Word w = rotation(lyndon, s);
      const Word c = complement_antimorphism(w);
      rec.expect(is_perfectly_clustering(c), [&] { return w.str() + " -> " + c.str(); });
    }
  }
}

void check_closure(const Context& ctx, Recorder& rec) {
  const EnumerationRequest req{ctx.options.alphabet_size, ctx.options.max_length, false};
  const CrossValidationReport report = cross_validate(req, {}, 1);
  for (const Word& w : report.brute) {
    const bool missing = std::binary_search(report.only_in_brute.begin(), report.only_in_brute.end(), w,
                                            length_lex_less);
    rec.expect(!missing, [&] { return "missing from closure: " + w.str(); });
  }
  for (const Word& w : report.only_in_closure) rec.expect(false, [&] { return "not found by brute force: " + w.str(); });
}

constexpr CheckDef kChecks[] = {
    {"bwt-conjugacy-invariance", "conjugate words have equal transforms", check_conjugate_bwt},
    {"clustering-conjugacy-closure", "every conjugate of a perfectly clustering word is perfectly clustering",
     check_clustering_conjugation},
    {"bwt-letter-multiset", "a perfectly clustering transform lists the letters in decreasing order",
     check_bwt_multiset},
    {"two-palindromes", "w is a product of two palindromes iff w is conjugate to its reversal",
     check_two_palindromes},
    {"christoffel-bridge", "two-letter perfectly clustering Lyndon words are the Christoffel words",
     check_christoffel},
    {"iet-minimum-successor", "sigma(m_h) = m_{h+1} iff the parts after h sum to the parts up to h",
     check_minimum_successor},
    {"iet-encoding-order", "encodings from r < s compare in the same order", check_encoding_order},
    {"iet-encoding-equivalence",
     "circular symmetric exchanges encode exactly the primitive perfectly clustering words",
     check_iet_equivalence},
    {"iet-conjugator", "sigma acts on sorted conjugates as au -> ua", check_conjugator},
    {"pc-lyndon-characterization",
     "perfectly clustering Lyndon <=> two palindromes with palindromic special factorization <=> conjugate to W",
     check_characterization},
    {"factorization-uniqueness",
     "the palindromic special factorization is unique and marks the smallest suffixes",
     check_uniqueness},
    {"smallest-conjugate-position",
     "a_i pi_i ... a_{i-1} pi_{i-1} is the smallest conjugate beginning with a_i",
     check_smallest_conjugate},
    {"empty-gap-balance", "pi_s is empty iff |w|_{a_1..a_s} = |w|_{a_{s+1}..a_k}", check_empty_gap},
    {"conjugate-ordering", "gap splits give conjugates of W below the matching conjugates of w",
     check_conjugate_ordering},
    {"extremal-conjugates", "when w is conjugate to W, w is the least and W the greatest conjugate",
     check_extremal_conjugates},
    {"consecutive-rows", "consecutive matrix rows are y m x and y reversal(m) x with x y a gap",
     check_consecutive_rows},
    {"gap-nonempty", "a growing positive rho_l image forces the gaps from the last letter <= l on to be nonempty",
     check_gap_nonempty},
    {"palindrome-preservation", "lambda_l(g) l and l rho_l(g) are palindromes for palindromic g",
     check_palindrome_preservation},
    {"positive-palindrome", "rho_l(pi) l^-1 is a positive palindrome for palindromic factors pi b, b > l",
     check_positive_palindrome},
    {"positivity-criterion", "the neighbour criterion decides positivity of lambda_l and rho_l images",
     check_positivity_criterion},
    {"automorphism-homomorphism", "lambda_l and rho_l respect products and inverses", check_homomorphism},
    {"complement-clustering", "the order-reversing antimorphism preserves perfect clustering",
     check_complement},
    {"closure-agreement", "automorphism closure and brute force produce the same words", check_closure},
};

}  // namespace

std::vector<std::string> verification_check_names() {
  std::vector<std::string> names;
  for (const CheckDef& c : kChecks) names.emplace_back(c.name);
  return names;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Context ctx{options, standard_alphabet(options.alphabet_size), {}};
  ctx.pc_lyndon = enumerate_brute({options.alphabet_size, options.max_length, false}, {}, options.jobs);

  constexpr std::size_t count = std::size(kChecks);
  std::vector<CheckResult> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      results[i].name = kChecks[i].name;
      results[i].statement = kChecks[i].statement;
      Recorder rec(results[i]);
      rec.guarded(kChecks[i].name, [&] { kChecks[i].run(ctx, rec); });
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, count);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace pcw
