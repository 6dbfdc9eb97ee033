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

// Independent verifiers for the decision modules. Nothing here calls into
// weilcheck's conditions, irreducibility or padic; only the exact
// arithmetic layer is shared.

#ifndef WEIL3_ORACLE_HPP
#define WEIL3_ORACLE_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "weil3/exactmath.hpp"
#include "weil3/weilcheck.hpp"

namespace weil3 {

using Complex = std::complex<long double>;

/// Roots of an integer polynomial, repeated by multiplicity, with each
/// root's complex conjugate recorded by index (real roots pair with
/// themselves).
struct RootSet {
  std::vector<Complex> roots;
  std::vector<std::size_t> pairing;
};

/// All complex roots of f (degree >= 1), found by Aberth iteration on each
/// factor of the squarefree decomposition so that repeated roots come out
/// exact in number. Throws std::runtime_error if the iteration stalls.
RootSet numeric_roots(const IntPolynomial& f);

/// | |root| - sqrt(q) | < tol sqrt(q) for all six roots.
/// tol must lie in [1e-12, 1e-6]; throws std::invalid_argument otherwise.
bool numeric_weil_check(const WeilCandidate& w, double tol);

/// Exact: the real cubic prod (t + x_i) has all roots in [-2 sqrt(q), 2 sqrt(q)],
/// counted with multiplicity by Sturm chains at surd endpoints.
bool sturm_weil_check(const WeilCandidate& w);

/// A nontrivial factorisation f = g h over Z, found by rounding products of
/// conjugation-closed root subsets and confirming by exact division.
/// f must be monic of degree 6.
std::optional<std::pair<IntPolynomial, IntPolynomial>> numeric_factor_search(const IntPolynomial& f,
                                                                             double tol);

/// Z_p roots of monic f located by brute-force lifting. Works on the
/// squarefree part g. For each v <= v_p(g(0)), the unit roots of g(p^v u)
/// are found by refining residue classes u mod p^k digit by digit until each
/// class is empty or certified to hold exactly one root (v(h(u)) >= k + b
/// with b = v(h'(u)) < k). max_depth bounds k.
struct TowerResult {
  /// False when some class was still open at max_depth.
  bool resolved = false;
  /// Valuations of the nonzero roots, ascending, one per root.
  std::vector<long> valuations;
  bool zero_root = false;
  /// Largest k reached, counted in digits after the valuation.
  int depth = 0;

  bool has_root() const { return zero_root || !valuations.empty(); }
};

TowerResult lifting_tower(const IntPolynomial& f, const Integer& p, int max_depth);

}  // namespace weil3

#endif  // WEIL3_ORACLE_HPP
