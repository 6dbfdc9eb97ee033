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

#ifndef WEIL3_CENSUS_HPP
#define WEIL3_CENSUS_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "weil3/records.hpp"

namespace weil3 {

/// Runs body(a1) for every a1 in [lo, hi] on up to `threads` workers and
/// returns the per-a1 results in a1 order, whatever the scheduling.
template <class R>
std::vector<R> map_over_a1(const Integer& lo, const Integer& hi, unsigned threads,
                           const std::function<R(const Integer&)>& body) {
  if (hi < lo) return {};
  const std::size_t count = Integer(hi - lo + 1).get_ui();
  std::vector<R> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = body(lo + static_cast<unsigned long>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

/// Every Weil triple of q with its classification, lexicographic in (a1, a2, a3).
/// Throws std::invalid_argument if q is not a prime power.
std::vector<ClassifiedTriple> classify_weil_triples(const Integer& q, unsigned threads = 1);

enum class RecordFormat { Jsonl, Csv };

void write_records(std::ostream& out, const std::vector<ClassifiedTriple>& records, RecordFormat format);

struct CensusRow {
  Integer q;
  Integer p;
  int n = 0;
  long weil_total = 0;
  long reducible = 0;
  long cube_e3_char = 0;
  long cube_e3_not_char = 0;
  long char_prank0_ss = 0;
  long char_prank0_13 = 0;
  long char_prank1 = 0;
  long char_prank2 = 0;
  long char_prank3 = 0;
  long irreducible_not_char = 0;
  double wall_time_ms = 0;

  long category_sum() const;
  bool consistent() const { return category_sum() == weil_total; }
};

CensusRow tally(const Integer& q, const std::vector<ClassifiedTriple>& records);
CensusRow census_row(const Integer& q, unsigned threads = 1);

std::string census_csv_header();
/// Counts and wall time; LF is added by the caller.
std::string census_csv_line(const CensusRow& row);

}  // namespace weil3

#endif  // WEIL3_CENSUS_HPP
