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

#ifndef WEIL3_VERIFY_HPP
#define WEIL3_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weil3/weilcheck.hpp"

namespace weil3 {

enum class VerifyMode { Full, Sampled };

/// Largest q accepted in full mode.
inline constexpr long kFullModeMaxQ = 27;

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Full;
  std::uint64_t seed = 0;
  long samples_per_q = 4000;
  unsigned threads = 1;
  /// Empty, or "drop-cond1" .. "drop-cond4": replaces theorem1_check by a
  /// predicate that ignores that condition, to show the suite notices.
  std::string mutation;
};

struct Disagreement {
  std::string suite;
  WeilCandidate w;
  std::string detail;
};

/// Counts for one a1 slice (or one q after merging).
struct SliceReport {
  long weil_checked = 0;
  long irreducibility_checked = 0;
  long padic_checked = 0;
  std::vector<Disagreement> disagreements;

  void merge(SliceReport other);
};

struct QReport {
  Integer q;
  SliceReport counts;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<QReport> per_q;

  long disagreement_count() const;
  bool passed() const { return disagreement_count() == 0; }
  /// Deterministic text: one line per q and suite, every disagreement, a verdict line.
  std::string to_text() const;
};

/// The Weil predicate under test: theorem1_check, or its mutation.
/// Throws std::invalid_argument for an unknown mutation name.
std::function<bool(const WeilCandidate&)> weil_predicate(const std::string& mutation);

/// Runs the three suites on one triple, appending to `report`.
void verify_triple(const WeilCandidate& w, const std::function<bool(const WeilCandidate&)>& weil, SliceReport& report);

/// Throws std::invalid_argument for a non-prime-power q, or q above
/// kFullModeMaxQ in full mode.
VerifyReport run_verify(const std::vector<Integer>& qs, const VerifyOptions& options);

}  // namespace weil3

#endif  // WEIL3_VERIFY_HPP
