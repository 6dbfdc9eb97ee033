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

#include "weil3/records.hpp"

#include <json.hpp>

#include "weil3/irreducibility.hpp"
#include "weil3/padic.hpp"

namespace weil3 {

namespace {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return Json(x.get_si());
  return Json(x.get_str());
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::optional<bool> irreducible_flag(const ClassifiedTriple& t) {
  if (t.c.is<NotWeil>()) return std::nullopt;
  return is_irreducible(t.w);
}

std::optional<PolygonType> ptype_of(const Classification& c) {
  if (c.is<IrreducibleChar>()) return c.as<IrreducibleChar>().ptype;
  return std::nullopt;
}

}  // namespace

bool is_supersingular(const ClassifiedTriple& t) {
  if (t.c.is<NotWeil>()) return false;
  return polygon_type(newton_polygon(t.w.polynomial(), t.w.p), t.w.n) == PolygonType::Supersingular;
}

std::string to_json(const ClassifiedTriple& t) {
  const WeilCandidate& w = t.w;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["q"] = integer_json(w.q);
  j["p"] = integer_json(w.p);
  j["n"] = w.n;
  j["a1"] = integer_json(w.a1);
  j["a2"] = integer_json(w.a2);
  j["a3"] = integer_json(w.a3);
  j["verdict"] = t.c.tag();
  if (auto r = p_rank(t.c))
    j["p_rank"] = *r;
  else
    j["p_rank"] = nullptr;

  const NewtonPolygon g = newton_polygon(w.polynomial(), w.p);
  Json vertices = Json::array();
  for (const NewtonVertex& v : g.vertices) vertices.push_back(Json::array({v.i, v.v}));
  Json slopes = Json::array();
  for (const NewtonSegment& s : g.segments) slopes.push_back(Json{{"slope", s.slope.get_str()}, {"length", s.length}});
  j["polygon"] = Json{{"vertices", vertices}, {"slopes", slopes}};

  if (auto irr = irreducible_flag(t))
    j["irreducible"] = *irr;
  else
    j["irreducible"] = nullptr;
  j["supersingular"] = is_supersingular(t);
  j["reasons"] = t.c.reasons;

  if (auto pt = ptype_of(t.c)) j["ptype"] = to_string(*pt);
  if (t.c.is<NotWeil>()) j["failed_condition"] = t.c.as<NotWeil>().failed_condition;
  if (t.c.is<CubeOfQuadratic>()) {
    const auto& cube = t.c.as<CubeOfQuadratic>();
    j["beta"] = integer_json(cube.beta);
    j["is_char"] = cube.is_char;
  }
  if (t.c.is<ReducibleWeil>()) {
    Json factors = Json::array();
    for (const IntPolynomial& f : t.c.as<ReducibleWeil>().factors) factors.push_back(f.to_string());
    j["factors"] = factors;
  }
  return j.dump();
}

std::string csv_header() { return "q,p,n,a1,a2,a3,verdict,p_rank,ptype,irreducible,supersingular,reasons"; }

std::string to_csv(const ClassifiedTriple& t) {
  const WeilCandidate& w = t.w;
  std::string row = w.q.get_str() + ',' + w.p.get_str() + ',' + std::to_string(w.n) + ',' + w.a1.get_str() + ',' +
                    w.a2.get_str() + ',' + w.a3.get_str() + ',' + t.c.tag() + ',';
  if (auto r = p_rank(t.c)) row += std::to_string(*r);
  row += ',';
  if (auto pt = ptype_of(t.c)) row += to_string(*pt);
  row += ',';
  if (auto irr = irreducible_flag(t)) row += *irr ? "true" : "false";
  row += ',';
  row += is_supersingular(t) ? "true" : "false";
  row += ',';
  std::string joined;
  for (std::size_t i = 0; i < t.c.reasons.size(); ++i) {
    if (i > 0) joined += "; ";
    joined += t.c.reasons[i];
  }
  return row + csv_quote(joined);
}

}  // namespace weil3
