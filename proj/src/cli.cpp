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

#include "pcw/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcw/bwt.hpp"
#include "pcw/enumeration.hpp"
#include "pcw/factorization.hpp"
#include "pcw/free_group.hpp"
#include "pcw/interval_exchange.hpp"
#include "pcw/verify.hpp"
#include "pcw/words.hpp"

namespace pcw::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string alphabet;
  std::string format = "text";
  bool json_flag = false;

  std::vector<std::string> words;

  // iet
  std::string composition;
  std::string iet_word;
  std::size_t start = 1;

  // auto
  std::string rho_pivot;
  std::string lambda_pivot;

  // enum / verify
  std::size_t k = 3;
  std::size_t max_len = 8;
  bool full_alphabet = false;
  std::string method = "brute";
  bool witnesses = false;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;

  // factor
  bool all_factorizations = false;

  bool json() const { return json_flag || format == "json"; }
};

class Session {
 public:
  Session(const Config& config, std::ostream& out, std::ostream& err, std::istream& in)
      : config_(config), out_(out), err_(err), in_(in) {}

  int bwt_command();
  int factor_command();
  int rows_command();
  int iet_command();
  int auto_command();
  int enum_command();
  int verify_command();

 private:
  std::vector<Word> input_words();
  Word to_word(const std::string& text) const;
  void emit(const Json& value) { out_ << value.dump(2) << '\n'; }
  void emit_all(const std::vector<Json>& values) {
    emit(values.size() == 1 ? values.front() : Json(values));
  }

  const Config& config_;
  std::ostream& out_;
  std::ostream& err_;
  std::istream& in_;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

std::string symbol(const Word& w, Letter l) { return std::string(1, w.alphabet().symbol(l)); }

Word Session::to_word(const std::string& text) const {
  if (!config_.alphabet.empty()) return Word::parse(text, make_alphabet(config_.alphabet));
  return Word::parse(text);
}

std::vector<Word> Session::input_words() {
  std::vector<std::string> texts = config_.words;
  if (texts.empty() || (texts.size() == 1 && texts.front() == "-")) {
    texts.clear();
    for (std::string line; std::getline(in_, line);) {
      line = trim(line);
      if (!line.empty()) texts.push_back(line);
    }
  }
  if (texts.empty()) throw std::invalid_argument("no input words");
  std::vector<Word> words;
  for (const std::string& t : texts) words.push_back(to_word(t));
  return words;
}

Json word_list(const std::vector<Word>& words) {
  Json list = Json::array();
  for (const Word& w : words) list.push_back(w.str());
  return list;
}

std::string verdict_text(const ClusteringVerdict& v) {
  if (!v.permutation) return "not clustering";
  std::string text = v.permutation_str() + "-clustering";
  if (v.perfect) text += ", perfectly clustering";
  return text;
}

int Session::bwt_command() {
  std::vector<Json> docs;
  bool first = true;
  for (const Word& w : input_words()) {
    const BWRecord record = bw_matrix(w);
    const ClusteringVerdict verdict = clustering_permutation(w);
    if (config_.json()) {
      Json pi = nullptr;
      if (verdict.permutation) pi = *verdict.permutation;
      docs.push_back({{"source", w.str()},
                      {"rows", word_list(record.rows)},
                      {"bwt", record.last_column.str()},
                      {"clustering", {{"pi", pi}, {"perfect", verdict.perfect}}}});
      continue;
    }
    if (!first) out_ << '\n';
    first = false;
    for (const Word& row : record.rows) out_ << row.str() << '\n';
    out_ << "bwt = " << record.last_column.str() << ", " << verdict_text(verdict) << '\n';
  }
  if (config_.json()) emit_all(docs);
  return kExitOk;
}

Json factorization_json(const Word& w, const SpecialFactorization* f) {
  Json letters = Json::array();
  Json gaps = Json::array();
  if (!f) {
    return {{"source", w.str()}, {"letters", letters}, {"gaps", gaps}, {"palindromic", false}, {"W", nullptr}};
  }
  for (Letter l : f->letters) letters.push_back(symbol(w, l));
  for (const Word& g : f->gaps) gaps.push_back(g.str());
  return {{"source", w.str()},
          {"letters", letters},
          {"gaps", gaps},
          {"palindromic", f->is_palindromic()},
          {"W", build_W(*f).str()}};
}

std::string factorization_text(const SpecialFactorization& f) {
  return f.str() + (f.is_palindromic() ? " (palindromic)" : " (not palindromic)") +
         ", W = " + build_W(f).str();
}

int Session::factor_command() {
  std::vector<Json> docs;
  for (const Word& w : input_words()) {
    std::vector<SpecialFactorization> shown;
    if (config_.all_factorizations) {
      shown = enumerate_special_factorizations(w);
    } else if (is_primitive(w) && is_lyndon(w) && is_perfectly_clustering(w)) {
      shown.push_back(canonical_special_factorization(w));
    } else {
      auto all = enumerate_special_factorizations(w);
      auto pal = std::find_if(all.begin(), all.end(), [](const auto& f) { return f.is_palindromic(); });
      if (pal != all.end()) shown.push_back(*pal);
      else if (!all.empty()) shown.push_back(all.front());
    }
    if (config_.json()) {
      if (shown.empty()) docs.push_back(factorization_json(w, nullptr));
      for (const auto& f : shown) docs.push_back(factorization_json(w, &f));
      continue;
    }
    if (shown.empty()) out_ << w.str() << ": no special factorization\n";
    for (const auto& f : shown) out_ << factorization_text(f) << '\n';
  }
  if (config_.json()) emit_all(docs);
  return kExitOk;
}

int Session::rows_command() {
  std::vector<Json> docs;
  for (const Word& w : input_words()) {
    const BWRecord record = bw_matrix(w);
    const SpecialFactorization f = canonical_special_factorization(record.rows.front());
    Json pairs = Json::array();
    for (std::size_t i = 0; i + 1 < record.rows.size(); ++i) {
      const RowPairDecomposition d = row_pair_decompose(record, i);
      const std::string palindrome = f.gaps[d.gap_index].str();
      if (config_.json()) {
        pairs.push_back({{"rows", {i + 1, i + 2}},
                         {"y", d.y.str()},
                         {"m", d.m.str()},
                         {"m_reversed", reversal(d.m).str()},
                         {"x", d.x.str()},
                         {"gap", d.gap_index + 1},
                         {"palindrome", palindrome}});
        continue;
      }
      out_ << i + 1 << '-' << i + 2 << ": " << d.y.str() << '[' << d.m.str() << ']' << d.x.str() << " / "
           << d.y.str() << '[' << reversal(d.m).str() << ']' << d.x.str() << "  xy = \"" << palindrome
           << "\" (gap " << d.gap_index + 1 << ")\n";
    }
    if (config_.json()) docs.push_back({{"source", w.str()}, {"pairs", pairs}});
  }
  if (config_.json()) emit_all(docs);
  return kExitOk;
}

std::string join(std::span<const std::size_t> values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

int Session::iet_command() {
  std::optional<IntervalExchange> exchange;
  std::size_t start = config_.start;
  if (!config_.iet_word.empty()) {
    WordExchange we = iet_of_word(to_word(config_.iet_word));
    start = we.start;
    exchange.emplace(std::move(we.exchange));
  } else if (!config_.composition.empty()) {
    exchange.emplace(build_iet(Composition::parse(config_.composition)));
  } else {
    throw std::invalid_argument("iet needs a composition or --word");
  }
  const IntervalExchange& e = *exchange;
  const bool circular = is_circular(e);
  std::optional<Word> encoding;
  if (circular) encoding = word_encoding(e, start);
  const auto cycle_list = cycles(e);

  if (config_.json()) {
    Json translations = Json::array();
    for (auto t : e.translations()) translations.push_back(t);
    Json images(std::vector<std::size_t>(e.images().begin(), e.images().end()));
    Json cyc = cycle_list;
    emit({{"composition", std::vector<std::size_t>(e.composition().parts().begin(), e.composition().parts().end())},
          {"translations", translations},
          {"sigma", images},
          {"cycles", cyc},
          {"circular", circular},
          {"start", start},
          {"encoding", encoding ? Json(encoding->str()) : Json(nullptr)}});
    return kExitOk;
  }
  std::string t;
  for (std::size_t i = 0; i < e.translations().size(); ++i) {
    if (i) t += ',';
    t += std::to_string(e.translations()[i]);
  }
  out_ << "composition = (" << e.composition().str() << ")\n";
  out_ << "t = (" << t << ")\n";
  out_ << "sigma = [" << join(e.images(), ",") << "]\n";
  out_ << "cycles =";
  for (const auto& c : cycle_list) out_ << " (" << join(c, " ") << ')';
  out_ << '\n';
  out_ << "circular = " << (circular ? "yes" : "no") << '\n';
  if (encoding) out_ << "encoding(r=" << start << ") = " << encoding->str() << '\n';
  return kExitOk;
}

int Session::auto_command() {
  if (config_.rho_pivot.empty() == config_.lambda_pivot.empty()) {
    throw std::invalid_argument("auto needs exactly one of --rho or --lambda");
  }
  if (config_.words.size() != 1) throw std::invalid_argument("auto takes one word");
  const Side side = config_.rho_pivot.empty() ? Side::lambda : Side::rho;
  const std::string& pivot_text = side == Side::rho ? config_.rho_pivot : config_.lambda_pivot;
  if (pivot_text.size() != 1) throw std::invalid_argument("the automorphism letter must be one symbol");
  const std::string& input = config_.words.front();

  AlphabetPtr alphabet;
  if (!config_.alphabet.empty()) {
    alphabet = make_alphabet(config_.alphabet);
  } else {
    std::string symbols = pivot_text;
    for (char c : input) {
      if (c != '-') symbols += c;
    }
    alphabet = natural_alphabet(symbols);
  }
  const GroupWord g = GroupWord::parse(input, alphabet);
  const Automorphism f{side, alphabet->letter(pivot_text.front())};
  const GroupWord image = apply(f, g);
  const bool positive = fg_is_positive(image);
  std::optional<bool> criterion;
  if (auto w = g.positive_word()) criterion = positivity_criterion(*w, f.pivot, side);

  if (config_.json()) {
    emit({{"input", g.str()},
          {"automorphism", f.str(*alphabet)},
          {"image", image.str()},
          {"pretty", image.pretty()},
          {"positive", positive},
          {"criterion", criterion ? Json(*criterion) : Json(nullptr)}});
    return kExitOk;
  }
  out_ << f.str(*alphabet) << '(' << g.str() << ") = " << image.str() << " ("
       << (positive ? "positive" : "not positive") << ")\n";
  if (criterion) out_ << "criterion: " << (*criterion ? "holds" : "fails") << '\n';
  return kExitOk;
}

int Session::enum_command() {
  const EnumerationRequest req{config_.k, config_.max_len, config_.full_alphabet};
  std::vector<Word> words;
  std::optional<CrossValidationReport> report;
  std::optional<ClosureResult> closure;
  if (config_.method == "brute") {
    words = enumerate_brute(req, {}, config_.jobs);
  } else if (config_.method == "closure") {
    closure = closure_with_witnesses(req);
    words = closure->words;
  } else {
    report = cross_validate(req, {}, config_.jobs);
    words = report->brute;
  }
  std::map<std::size_t, std::size_t> counts;
  for (const Word& w : words) ++counts[w.size()];

  if (config_.json()) {
    Json by_length = Json::object();
    for (auto [len, count] : counts) by_length[std::to_string(len)] = count;
    Json doc = {{"words", word_list(words)}, {"counts_by_length", by_length}};
    if (report) {
      doc["consistent"] = report->consistent();
      doc["only_in_brute"] = word_list(report->only_in_brute);
      doc["only_in_closure"] = word_list(report->only_in_closure);
    }
    emit(doc);
  } else {
    for (const Word& w : words) {
      out_ << w.str();
      if (closure && config_.witnesses) {
        for (const GenerationStep& step : witness_chain(*closure, w)) {
          out_ << "  " << step.automorphism.str(w.alphabet()) << '(' << step.parent.str() << ")=" << step.child.str();
        }
      }
      out_ << '\n';
    }
  }
  if (report) {
    err_ << "brute: " << report->brute.size() << " words, closure: " << report->closure.size()
         << " words, discrepancies: " << report->only_in_brute.size() + report->only_in_closure.size() << '\n';
    for (const Word& w : report->only_in_brute) err_ << "  only in brute: " << w.str() << '\n';
    for (const Word& w : report->only_in_closure) err_ << "  only in closure: " << w.str() << '\n';
    if (!report->consistent()) return kExitFailure;
  }
  return kExitOk;
}

int Session::verify_command() {
  check_request({config_.k, config_.max_len, false});
  const VerifyOptions options{config_.k, config_.max_len, config_.seed, config_.samples, config_.jobs};
  const std::vector<CheckResult> results = run_verification(options);
  bool ok = true;
  Json docs = Json::array();
  for (const CheckResult& r : results) {
    ok = ok && r.passed();
    if (config_.json()) {
      docs.push_back({{"name", r.name},
                      {"statement", r.statement},
                      {"instances", r.instances},
                      {"failures", r.failures},
                      {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)}});
      continue;
    }
    out_ << (r.passed() ? "PASS " : "FAIL ") << r.name << "  instances=" << r.instances
         << " failures=" << r.failures << "  -- " << r.statement << '\n';
    if (r.counterexample) out_ << "     first counterexample: " << *r.counterexample << '\n';
  }
  if (config_.json()) {
    emit({{"k", config_.k}, {"max_length", config_.max_len}, {"seed", config_.seed}, {"checks", docs}, {"passed", ok}});
  } else {
    out_ << (ok ? "all checks passed" : "verification FAILED") << " (k=" << config_.k
         << ", max length " << config_.max_len << ")\n";
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Config config;
  CLI::App app{"Perfectly clustering words: Burrows-Wheeler, factorizations, interval exchanges", "pcw"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--alphabet", config.alphabet, "Alphabet order, smallest first (default: sorted letters of the word)");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("PCW_FORMAT");
  app.add_flag("--json", config.json_flag, "Same as --format json");

  auto* bwt_cmd = app.add_subcommand("bwt", "Burrows-Wheeler matrix, transform and clustering verdict");
  bwt_cmd->add_option("words", config.words, "Words, or '-' / nothing to read lines from stdin");

  auto* factor_cmd = app.add_subcommand("factor", "Special factorization a_1|pi_1|...|a_k and the word W");
  factor_cmd->add_option("words", config.words, "Words, or '-' / nothing to read lines from stdin");
  factor_cmd->add_flag("--all", config.all_factorizations, "List every special factorization");

  auto* rows_cmd = app.add_subcommand("rows", "Decompose consecutive matrix rows as y m x / y reversal(m) x");
  rows_cmd->add_option("words", config.words, "Perfectly clustering words");

  auto* iet_cmd = app.add_subcommand("iet", "Symmetric discrete interval exchange of a composition");
  iet_cmd->add_option("composition", config.composition, "Comma separated positive parts, e.g. 3,3,4");
  iet_cmd->add_option("--word", config.iet_word, "Build the exchange encoding this perfectly clustering word");
  iet_cmd->add_option("--start", config.start, "Start point r of the printed encoding")->check(CLI::PositiveNumber);

  auto* auto_cmd = app.add_subcommand("auto", "Apply lambda_l or rho_l to a free group element");
  auto_cmd->add_option("--rho", config.rho_pivot, "Apply rho_l for this letter");
  auto_cmd->add_option("--lambda", config.lambda_pivot, "Apply lambda_l for this letter");
  auto_cmd->add_option("word", config.words, "Element in token form, 'a-' for the inverse of a")->required();

  auto* enum_cmd = app.add_subcommand("enum", "Enumerate perfectly clustering Lyndon words");
  enum_cmd->add_option("--k", config.k, "Alphabet size")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--max-len", config.max_len, "Maximum length")->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--full-alphabet", config.full_alphabet, "Only words using every letter");
  enum_cmd->add_option("--method", config.method, "Generator")->check(CLI::IsMember({"brute", "closure", "both"}));
  enum_cmd->add_flag("--witness", config.witnesses, "With --method closure, print a generating chain per word");
  enum_cmd->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive property suite");
  verify_cmd->add_option("--k", config.k, "Alphabet size")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-len", config.max_len, "Maximum word length")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", config.seed, "Seed for randomized checks");
  verify_cmd->add_option("--samples", config.samples, "Random samples per randomized check");
  verify_cmd->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"pcw"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Session session(config, out, err, in);
  try {
    if (bwt_cmd->parsed()) return session.bwt_command();
    if (factor_cmd->parsed()) return session.factor_command();
    if (rows_cmd->parsed()) return session.rows_command();
    if (iet_cmd->parsed()) return session.iet_command();
    if (auto_cmd->parsed()) return session.auto_command();
    if (enum_cmd->parsed()) return session.enum_command();
    if (verify_cmd->parsed()) return session.verify_command();
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pcw::cli
