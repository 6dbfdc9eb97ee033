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

// Integers cross the boundary as decimal strings so Python ints of any size
// survive; the wrapper in weil3/__init__.py converts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "weil3/census.hpp"
#include "weil3/irreducibility.hpp"
#include "weil3/verify.hpp"

namespace py = pybind11;

namespace {

weil3::Integer to_integer(const std::string& s) {
  weil3::Integer x;
  if (s.empty() || x.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
  return x;
}

weil3::WeilCandidate candidate(const std::string& q, const std::string& a1, const std::string& a2,
                               const std::string& a3) {
  return weil3::WeilCandidate::make(to_integer(q), to_integer(a1), to_integer(a2), to_integer(a3));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weil polynomials of abelian threefolds over finite fields";
  m.attr("schema_version") = weil3::kSchemaVersion;

  m.def(
      "check",
      [](const std::string& q, const std::string& a1, const std::string& a2, const std::string& a3) {
        const auto w = candidate(q, a1, a2, a3);
        py::gil_scoped_release release;
        return weil3::to_json({w, weil3::classify(w)});
      },
      "JSON record classifying one triple");

  m.def("is_weil", [](const std::string& q, const std::string& a1, const std::string& a2, const std::string& a3) {
    return weil3::theorem1_check(candidate(q, a1, a2, a3));
  });

  m.def("is_irreducible",
        [](const std::string& q, const std::string& a1, const std::string& a2, const std::string& a3) {
          const auto w = candidate(q, a1, a2, a3);
          if (!weil3::theorem1_check(w)) throw std::invalid_argument("not a Weil polynomial");
          return weil3::is_irreducible(w);
        });

  m.def(
      "enumerate",
      [](const std::string& q, const std::string& format, unsigned threads) {
        const auto fmt = format == "csv" ? weil3::RecordFormat::Csv : weil3::RecordFormat::Jsonl;
        if (format != "csv" && format != "jsonl") throw std::invalid_argument("format must be jsonl or csv");
        const weil3::Integer qq = to_integer(q);
        py::gil_scoped_release release;
        std::ostringstream out;
        weil3::write_records(out, weil3::classify_weil_triples(qq, threads), fmt);
        return out.str();
      },
      py::arg("q"), py::arg("format") = "jsonl", py::arg("threads") = 1);

  m.def(
      "census_row",
      [](const std::string& q, unsigned threads) {
        const weil3::Integer qq = to_integer(q);
        py::gil_scoped_release release;
        return weil3::census_csv_line(weil3::census_row(qq, threads));
      },
      py::arg("q"), py::arg("threads") = 1);
  m.def("census_header", &weil3::census_csv_header);

  m.def(
      "verify",
      [](const std::vector<std::string>& qs, const std::string& mode, std::uint64_t seed, long samples,
         unsigned threads, const std::string& mutation) {
        weil3::VerifyOptions opts;
        if (mode != "full" && mode != "sampled") throw std::invalid_argument("mode must be full or sampled");
        opts.mode = mode == "full" ? weil3::VerifyMode::Full : weil3::VerifyMode::Sampled;
        opts.seed = seed;
        opts.samples_per_q = samples;
        opts.threads = threads;
        opts.mutation = mutation;
        weil3::weil_predicate(mutation);
        std::vector<weil3::Integer> list;
        for (const auto& s : qs) list.push_back(to_integer(s));
        py::gil_scoped_release release;
        const auto report = weil3::run_verify(list, opts);
        return std::make_pair(report.passed(), report.to_text());
      },
      py::arg("qs"), py::arg("mode") = "full", py::arg("seed") = 0, py::arg("samples") = 4000,
      py::arg("threads") = 1, py::arg("mutation") = "");
}
