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

#include "weil3/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "weil3/census.hpp"
#include "weil3/classify.hpp"
#include "weil3/irreducibility.hpp"
#include "weil3/oracle.hpp"
#include "weil3/padic.hpp"

namespace weil3 {

namespace {

constexpr double kNumericTol = 1e-9;

std::string triple_text(const WeilCandidate& w) {
  return "q=" + w.q.get_str() + " (" + w.a1.get_str() + "," + w.a2.get_str() + "," + w.a3.get_str() + ")";
}

std::string flag(bool b) { return b ? "1" : "0"; }

// Slope multiset symmetric under v -> n - v.
bool slopes_symmetric(const NewtonPolygon& g, int n) {
  const std::vector<Rational> v = g.root_valuations();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] + v[v.size() - 1 - i] != n) return false;
  return true;
}

TowerResult escalating_tower(const IntPolynomial& f, const Integer& p) {
  TowerResult t;
  for (int depth : {16, 64, 256}) {
    t = lifting_tower(f, p, depth);
    if (t.resolved) break;
  }
  return t;
}

Integer uniform(std::mt19937_64& rng, const Integer& lo, const Integer& hi) {
  const Integer span = hi - lo + 1;
  std::uniform_int_distribution<unsigned long> dist(0, span.get_ui() - 1);
  return lo + dist(rng);
}

}  // namespace

void SliceReport::merge(SliceReport other) {
  weil_checked += other.weil_checked;
  irreducibility_checked += other.irreducibility_checked;
  padic_checked += other.padic_checked;
  for (auto& d : other.disagreements) disagreements.push_back(std::move(d));
}

long VerifyReport::disagreement_count() const {
  long total = 0;
  for (const QReport& r : per_q) total += static_cast<long>(r.counts.disagreements.size());
  return total;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "verify mode=" << (options.mode == VerifyMode::Full ? "full" : "sampled");
  if (options.mode == VerifyMode::Sampled) out << " seed=" << options.seed << " samples=" << options.samples_per_q;
  if (!options.mutation.empty()) out << " mutation=" << options.mutation;
  out << '\n';
  for (const QReport& r : per_q) {
    std::map<std::string, long> bad;
    for (const Disagreement& d : r.counts.disagreements) ++bad[d.suite];
    const auto line = [&](const char* suite, long checked) {
      out << "q=" << r.q.get_str() << " suite=" << suite << " checked=" << checked << " disagreements=" << bad[suite]
          << (bad[suite] == 0 ? " PASS" : " FAIL") << '\n';
    };
    line("weilcheck", r.counts.weil_checked);
    line("irreducibility", r.counts.irreducibility_checked);
    line("padic", r.counts.padic_checked);
  }
  for (const QReport& r : per_q)
    for (const Disagreement& d : r.counts.disagreements)
      out << "disagreement suite=" << d.suite << ' ' << triple_text(d.w) << ' ' << d.detail << '\n';
  out << (passed() ? "RESULT PASS" : "RESULT FAIL") << " disagreements=" << disagreement_count() << '\n';
  return out.str();
}

std::function<bool(const WeilCandidate&)> weil_predicate(const std::string& mutation) {
  if (mutation.empty()) return [](const WeilCandidate& w) { return theorem1_check(w); };
  static const std::vector<std::string> names = {"drop-cond1", "drop-cond2", "drop-cond3", "drop-cond4"};
  const auto it = std::find(names.begin(), names.end(), mutation);
  if (it == names.end()) throw std::invalid_argument("unknown mutation " + mutation);
  const int dropped = static_cast<int>(it - names.begin()) + 1;
  return [dropped](const WeilCandidate& w) {
    if (special_form_check(w) || boundary_root_check(w)) return true;
    const ConditionReport c = evaluate_conditions(w);
    return (dropped == 1 || c.cond1) && (dropped == 2 || c.cond2) && (dropped == 3 || c.cond3) &&
           (dropped == 4 || c.cond4);
  };
}

void verify_triple(const WeilCandidate& w, const std::function<bool(const WeilCandidate&)>& weil,
                   SliceReport& report) {
  const bool decided = weil(w);
  const bool sturm = sturm_weil_check(w);
  const bool numeric = numeric_weil_check(w, kNumericTol);
  ++report.weil_checked;
  if (decided != sturm || sturm != numeric)
    report.disagreements.push_back(
        {"weilcheck", w, "theorem1=" + flag(decided) + " sturm=" + flag(sturm) + " numeric=" + flag(numeric)});
  // The exact oracle decides which triples the other suites apply to.
  if (!sturm) return;

  ++report.irreducibility_checked;
  const bool irreducible = is_irreducible(w);
  const auto factor = numeric_factor_search(w.polynomial(), kNumericTol);
  if (irreducible == factor.has_value())
    report.disagreements.push_back({"irreducibility", w,
                                    "is_irreducible=" + flag(irreducible) + " factor_found=" + flag(factor.has_value())});

  ++report.padic_checked;
  const NewtonPolygon g = newton_polygon(w.polynomial(), w.p);
  const PolygonType type = polygon_type(g, w.n);
  std::string problem;
  if (!slopes_symmetric(g, w.n)) problem += " slopes not symmetric about n/2;";
  const bool unit_a3 = valuation(w.a3, w.p).equals(0);
  if ((type == PolygonType::Ordinary) != unit_a3) problem += " ordinary polygon iff v_p(a3)=0 fails;";
  if (decided) {
    const Classification c = classify(w);
    if (c.is<IrreducibleChar>()) {
      const auto& ch = c.as<IrreducibleChar>();
      if (ch.ptype != type) problem += std::string(" classify ptype ") + to_string(ch.ptype) + " vs " + to_string(type) + ";";
      long unit_roots = 0;
      for (const Rational& v : g.root_valuations()) unit_roots += v == 0;
      if (ch.p_rank != unit_roots) problem += " p_rank differs from the number of unit roots;";
    }
    // Where the verdict hinges on a Q_p root, rerun that question on the lifting tower.
    const bool rank_case = type == PolygonType::PRank2 || type == PolygonType::PRank1;
    // For odd n the rank cases ask for a root of valuation n/2, which cannot exist.
    const bool hinges = rank_case ? w.n % 2 == 0 : type == PolygonType::OneThird;
    if (irreducible && !c.is<CubeOfQuadratic>() && hinges) {
      const TowerResult t = escalating_tower(w.polynomial(), w.p);
      if (!t.resolved) {
        problem += " lifting tower unresolved at depth " + std::to_string(t.depth) + ";";
      } else {
        const bool tower_root = rank_case ? std::find(t.valuations.begin(), t.valuations.end(), w.n / 2) != t.valuations.end()
                                          : t.has_root();
        const bool decided_root = rank_case ? zp_root_exists(w.polynomial(), w.p, Rational(w.n) / 2)
                                            : has_qp_root(w.polynomial(), w.p);
        if (decided_root != tower_root)
          problem += " root test " + flag(decided_root) + " vs lifting tower " + flag(tower_root) + ";";
        if (c.is<IrreducibleChar>() == tower_root)
          problem += std::string(" verdict ") + c.tag() + " contradicts the lifting tower;";
      }
    }
  }
  if (!problem.empty()) report.disagreements.push_back({"padic", w, problem.substr(1)});
}

VerifyReport run_verify(const std::vector<Integer>& qs, const VerifyOptions& options) {
  const auto weil = weil_predicate(options.mutation);
  VerifyReport report;
  report.options = options;
  for (const Integer& q : qs) {
    const auto pp = prime_power_decompose(q);
    if (!pp) throw std::invalid_argument(q.get_str() + " is not a prime power");
    if (options.mode == VerifyMode::Full && q > kFullModeMaxQ)
      throw std::invalid_argument("full verification is limited to q <= " + std::to_string(kFullModeMaxQ) +
                                  "; use sampled mode for q = " + q.get_str());
    const CoefficientBox box = enumeration_box(q, pp->p, pp->n, 1);
    QReport qr{q, {}};
    if (options.mode == VerifyMode::Full) {
      const std::function<SliceReport(const Integer&)> body = [&](const Integer& a1) {
        SliceReport slice;
        box.for_each_with_a1(a1, [&](const Integer& x, const Integer& y, const Integer& z) {
          verify_triple(WeilCandidate::make(q, pp->p, pp->n, x, y, z), weil, slice);
        });
        return slice;
      };
      for (SliceReport& s : map_over_a1(box.a1_min(), box.a1_max(), options.threads, body)) qr.counts.merge(std::move(s));
    } else {
      std::seed_seq seq{options.seed & 0xffffffffu, options.seed >> 32, static_cast<std::uint64_t>(q.get_ui())};
      std::mt19937_64 rng(seq);
      for (long i = 0; i < options.samples_per_q; ++i) {
        // Rejection on empty a3 ranges keeps the sample inside the box.
        for (;;) {
          const Integer a1 = uniform(rng, box.a1_min(), box.a1_max());
          const auto [lo2, hi2] = box.a2_range(a1);
          if (hi2 < lo2) continue;
          const Integer a2 = uniform(rng, lo2, hi2);
          const auto [lo3, hi3] = box.a3_range(a1, a2);
          if (hi3 < lo3) continue;
          verify_triple(WeilCandidate::make(q, pp->p, pp->n, a1, a2, uniform(rng, lo3, hi3)), weil, qr.counts);
          break;
        }
      }
    }
    report.per_q.push_back(std::move(qr));
  }
  return report;
}

}  // namespace weil3
