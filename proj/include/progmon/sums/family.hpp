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

/**
 * @file
 *
 * The languages Z_k over Y_k = {B1, T1, ..., Bk, Tk} and their syntactic
 * monoids M_k. Bl and Tl stand for the level-l "bottom" and "top" letters.
 *
 * Z_k is the set of words containing Tk whose first Tk has no Bk before it
 * and is followed, up to the next level-k letter or the end, by a word of
 * Z_{k-1}, with Z_0 = {ε}. As a SUM expression:
 *
 *     Y_{k-1}* Tk Y_{k-2}* T(k-1) ... Y_1* T2 Y_0* T1 Y_k*
 *
 * where Y_0 is empty, so Y_0* contributes only the empty word.
 */

#ifndef PROGMON_SUMS_FAMILY_HPP
#define PROGMON_SUMS_FAMILY_HPP

#include "progmon/reglang/stamp.hpp"
#include "progmon/sums/sum_expr.hpp"

namespace progmon {

  Alphabet zk_alphabet(std::size_t k);
  inline Letter bottom_letter(std::size_t level) {
    return static_cast<Letter>(2 * (level - 1));
  }
  inline Letter top_letter(std::size_t level) {
    return static_cast<Letter>(2 * (level - 1) + 1);
  }

  /// Throws InputError for k = 0.
  SumExpr zk_expr(std::size_t k);

  struct MkFamily {
    std::size_t    k;
    Alphabet       letters;  // Y_k
    SumExpr        z;
    SyntacticStamp syntactic;  // Y_k* -> M_k with accept = image of Z_k
  };

  /// Throws ResourceError when M_k exceeds the syntactic monoid cap.
  MkFamily mk_stamp(std::size_t k, Limits const& limits = default_limits());

  /// Alphabet whose letters are the elements of `m`, named as in `m`.
  Alphabet element_alphabet(FiniteMonoid const& m);

  /// A Boolean combination of SUM expressions over the elements of M_k that
  /// holds on a word t exactly when the product of t lies in `accept`.
  ///
  /// Every element m is sent to a representative word psi(m) over Y_k, and
  /// the product of t equals eta(psi(t)). So the wanted language is
  /// psi^{-1}(eta^{-1}(accept)). When accept is the image of Z_k this is a
  /// union of pieces of psi^{-1}(Z_k). Otherwise each class eta^{-1}(m) is
  /// cut out by the two-sided quotients of Z_k by representative contexts.
  BoolCombo mk_certificate(MkFamily const& family,
                           std::vector<Element> const& accept);

}  // namespace progmon

#endif  // PROGMON_SUMS_FAMILY_HPP
