/*
 *   Copyright 2026 The progmon Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PROGMON_SUMS_CLOSURE_HPP
#define PROGMON_SUMS_CLOSURE_HPP

#include <vector>

#include "progmon/sums/sum_expr.hpp"

namespace progmon {

  enum class QuotientSide {
    Left,   ///< u^{-1} L
    Right,  ///< L u^{-1}
  };

  /// The quotient of L(e) by u as a union of SUM expressions of level at
  /// most level(e). An empty result denotes the empty language.
  ///
  /// Built by structural induction. For a split whose left side avoids the
  /// marker a and a word u = u1 a u2 with u1 free of a:
  ///
  ///     u^{-1}(L1 a L2) = u2^{-1} L2            if u1 in L1, else empty
  ///     (L1 a L2) u^{-1} = L1 a (L2 u^{-1})  +  L1 u1^{-1} if u2 in L2
  ///
  /// and the quotient passes through to the nearer side when a does not
  /// occur in u. Right-avoiding splits are the mirror image.
  std::vector<SumExpr> sum_quotient(SumExpr const& e, Word const& u,
                                    QuotientSide side);

  /// Preimage of L(e) under the morphism sending letter b of a new alphabet
  /// to images[b], as a union of SUM expressions over that alphabet.
  ///
  /// For a left-avoiding split with marker a, the letters B whose image
  /// contains a are the only possible markers. Writing images[b] = u1 a u2
  /// at the first a, the preimage is the union over b in B of
  /// pre(L1 u1^{-1}) b pre(u2^{-1} L2), again left-avoiding.
  std::vector<SumExpr> sum_inverse_morphism(SumExpr const&           e,
                                            std::vector<Word> const& images);

}  // namespace progmon

#endif  // PROGMON_SUMS_CLOSURE_HPP
