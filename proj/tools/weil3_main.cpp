/*
   Copyright 2026 The weil3 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "weil3/census.hpp"
#include "weil3/verify.hpp"

namespace {

using weil3::Integer;

constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

Integer parse_integer(const std::string& text, const char* what) {
  Integer x;
  if (text.empty() || x.set_str(text, 10) != 0) throw std::invalid_argument(std::string(what) + ": not an integer: " + text);
  return x;
}

Integer parse_q(const std::string& text) {
  const Integer q = parse_integer(text, "--q");
  if (!weil3::prime_power_decompose(q)) throw std::invalid_argument(text + " is not a prime power");
  return q;
}

std::vector<Integer> parse_q_list(const std::vector<std::string>& items) {
  std::vector<Integer> qs;
  for (const std::string& s : items) qs.push_back(parse_q(s));
  return qs;
}

// Writes to `path`, or standard output when it is empty or "-".
template <class Emit>
void with_output(const std::string& path, Emit&& emit) {
  if (path.empty() || path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  emit(file);
  file.close();
  if (!file) throw std::runtime_error("error writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil polynomials of abelian threefolds: checks, enumeration, census and verification"};
  app.require_subcommand(1);

  std::string q_text, a1_text, a2_text, a3_text;
  auto* check = app.add_subcommand("check", "Classify one triple (a1, a2, a3) over F_q; prints a JSON record");
  check->add_option("--q", q_text, "Prime power q")->required();
  check->add_option("--a1", a1_text)->required();
  check->add_option("--a2", a2_text)->required();
  check->add_option("--a3", a3_text)->required();

  std::string out_path;
  std::string format = "jsonl";
  unsigned threads = 1;
  auto* enumerate = app.add_subcommand("enumerate", "Write every Weil triple of q with its classification");
  enumerate->add_option("--q", q_text, "Prime power q")->required();
  enumerate->add_option("--out", out_path, "Output file (default: standard output)");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"jsonl", "csv"}));
  enumerate->add_option("--threads", threads)->check(CLI::Range(1u, 1024u));

  std::vector<std::string> q_list;
  auto* census = app.add_subcommand("census", "Verdict counts per q as CSV");
  census->add_option("--q", q_list, "Prime powers, in output order")->required()->delimiter(',');
  census->add_option("--out", out_path, "Output file (default: standard output)");
  census->add_option("--threads", threads)->check(CLI::Range(1u, 1024u));

  std::string mode = "full";
  std::uint64_t seed = 0;
  long samples = 4000;
  std::string mutation;
  auto* verify = app.add_subcommand("verify", "Cross-check the decision modules against the oracles");
  verify->add_option("--q", q_list, "Prime powers")->required()->delimiter(',');
  verify->add_option("--mode", mode)->check(CLI::IsMember({"full", "sampled"}));
  verify->add_option("--seed", seed);
  verify->add_option("--samples", samples, "Triples per q in sampled mode")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads)->check(CLI::Range(1u, 1024u));
  verify->add_option("--mutate", mutation, "Corrupt the Weil predicate (drop-cond1 .. drop-cond4)");
  verify->add_option("--out", out_path, "Also write the report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      const Integer q = parse_q(q_text);
      const auto w = weil3::WeilCandidate::make(q, parse_integer(a1_text, "--a1"), parse_integer(a2_text, "--a2"),
                                                parse_integer(a3_text, "--a3"));
      std::cout << weil3::to_json({w, weil3::classify(w)}) << '\n';
      return 0;
    }
    if (*enumerate) {
      const Integer q = parse_q(q_text);
      const auto records = weil3::classify_weil_triples(q, threads);
      const auto fmt = format == "csv" ? weil3::RecordFormat::Csv : weil3::RecordFormat::Jsonl;
      with_output(out_path, [&](std::ostream& os) { weil3::write_records(os, records, fmt); });
      return 0;
    }
    if (*census) {
      const auto qs = parse_q_list(q_list);
      std::vector<weil3::CensusRow> rows;
      for (const Integer& q : qs) rows.push_back(weil3::census_row(q, threads));
      with_output(out_path, [&](std::ostream& os) {
        os << weil3::census_csv_header() << '\n';
        for (const auto& r : rows) os << weil3::census_csv_line(r) << '\n';
      });
      return 0;
    }
    if (*verify) {
      weil3::VerifyOptions opts;
      opts.mode = mode == "sampled" ? weil3::VerifyMode::Sampled : weil3::VerifyMode::Full;
      opts.seed = seed;
      opts.samples_per_q = samples;
      opts.threads = threads;
      opts.mutation = mutation;
      weil3::weil_predicate(mutation);  // reject unknown names before any work
      const auto report = weil3::run_verify(parse_q_list(q_list), opts);
      const std::string text = report.to_text();
      std::cout << text;
      if (!out_path.empty()) with_output(out_path, [&](std::ostream& os) { os << text; });
      return report.passed() ? 0 : kExitDisagreement;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage + 1;
  }
  return 0;
}
