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

#include "weil3/census.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace weil3 {

std::vector<ClassifiedTriple> classify_weil_triples(const Integer& q, unsigned threads) {
  const auto pp = prime_power_decompose(q);
  if (!pp) throw std::invalid_argument(q.get_str() + " is not a prime power");
  const CoefficientBox box = enumeration_box(q, pp->p, pp->n);
  const std::function<std::vector<ClassifiedTriple>(const Integer&)> body = [&](const Integer& a1) {
    std::vector<ClassifiedTriple> out;
    for (WeilCandidate& w : enumerate_box_slice(q, pp->p, pp->n, a1)) {
      Classification c = classify(w);
      out.push_back({std::move(w), std::move(c)});
    }
    return out;
  };
  std::vector<ClassifiedTriple> all;
  for (auto& slice : map_over_a1(box.a1_min(), box.a1_max(), threads, body))
    for (auto& rec : slice) all.push_back(std::move(rec));
  return all;
}

void write_records(std::ostream& out, const std::vector<ClassifiedTriple>& records, RecordFormat format) {
  if (format == RecordFormat::Csv) out << csv_header() << '\n';
  for (const ClassifiedTriple& t : records) out << (format == RecordFormat::Csv ? to_csv(t) : to_json(t)) << '\n';
}

long CensusRow::category_sum() const {
  return reducible + cube_e3_char + cube_e3_not_char + char_prank0_ss + char_prank0_13 + char_prank1 + char_prank2 +
         char_prank3 + irreducible_not_char;
}

CensusRow tally(const Integer& q, const std::vector<ClassifiedTriple>& records) {
  const auto pp = prime_power_decompose(q);
  if (!pp) throw std::invalid_argument(q.get_str() + " is not a prime power");
  CensusRow row;
  row.q = q;
  row.p = pp->p;
  row.n = pp->n;
  for (const ClassifiedTriple& t : records) {
    const Classification& c = t.c;
    if (c.is<NotWeil>()) continue;
    ++row.weil_total;
    if (c.is<ReducibleWeil>()) {
      ++row.reducible;
    } else if (c.is<CubeOfQuadratic>()) {
      ++(c.as<CubeOfQuadratic>().is_char ? row.cube_e3_char : row.cube_e3_not_char);
    } else if (c.is<IrreducibleNotChar>()) {
      ++row.irreducible_not_char;
    } else {
      const auto& ch = c.as<IrreducibleChar>();
      switch (ch.ptype) {
        case PolygonType::Supersingular:
          ++row.char_prank0_ss;
          break;
        case PolygonType::OneThird:
          ++row.char_prank0_13;
          break;
        case PolygonType::PRank1:
          ++row.char_prank1;
          break;
        case PolygonType::PRank2:
          ++row.char_prank2;
          break;
        case PolygonType::Ordinary:
          ++row.char_prank3;
          break;
        case PolygonType::Other:
          throw std::logic_error("characteristic verdict with an inadmissible polygon");
      }
    }
  }
  return row;
}

CensusRow census_row(const Integer& q, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  CensusRow row = tally(q, classify_weil_triples(q, threads));
  row.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string census_csv_header() {
  return "q,p,n,weil_total,reducible,cube_e3_char,cube_e3_not_char,char_prank0_ss,char_prank0_13,"
         "char_prank1,char_prank2,char_prank3,irreducible_not_char,wall_time_ms";
}

std::string census_csv_line(const CensusRow& r) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f", r.wall_time_ms);
  std::string line = r.q.get_str() + ',' + r.p.get_str() + ',' + std::to_string(r.n);
  for (long v : {r.weil_total, r.reducible, r.cube_e3_char, r.cube_e3_not_char, r.char_prank0_ss, r.char_prank0_13,
                 r.char_prank1, r.char_prank2, r.char_prank3, r.irreducible_not_char})
    line += ',' + std::to_string(v);
  return line + ',' + ms;
}

}  // namespace weil3
