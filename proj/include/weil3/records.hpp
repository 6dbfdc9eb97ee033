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

#ifndef WEIL3_RECORDS_HPP
#define WEIL3_RECORDS_HPP

#include <string>

#include "weil3/classify.hpp"
#include "weil3/weilcheck.hpp"

namespace weil3 {

// Version 1 record, one per classified triple:
//   schema_version, q, p, n, a1, a2, a3  integers
//   verdict                              NotWeil | ReducibleWeil | CubeOfQuadratic |
//                                        IrreducibleChar | IrreducibleNotChar
//   p_rank                               integer or null
//   polygon.vertices                     [[i, v_p(c_i)], ...], left to right
//   polygon.slopes                       [{"slope": "1/2", "length": 2}, ...], root valuations ascending
//   irreducible                          boolean, null when not Weil
//   supersingular                        boolean
//   reasons                              array of strings
// plus verdict details: ptype, beta, is_char, factors, failed_condition.
inline constexpr int kSchemaVersion = 1;

struct ClassifiedTriple {
  WeilCandidate w;
  Classification c;
};

/// Whether the triple's polygon is the pure slope n/2 one (false when not Weil).
bool is_supersingular(const ClassifiedTriple& t);

/// Single-line JSON object (no trailing newline).
std::string to_json(const ClassifiedTriple& t);

std::string csv_header();
/// One CSV row with the record's scalar fields; reasons joined by "; ".
std::string to_csv(const ClassifiedTriple& t);

}  // namespace weil3

#endif  // WEIL3_RECORDS_HPP
