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
 * Green's preorders. Orientation: u <=_R v means v lies in uM, so an element
 * sits below its right multiples. The L and J preorders follow suit with Mu
 * and MuM.
 */

#ifndef PROGMON_ALGEBRA_GREEN_HPP
#define PROGMON_ALGEBRA_GREEN_HPP

#include <string>
#include <vector>

#include "progmon/algebra/monoid.hpp"

namespace progmon {

  /// Dense relation tables indexed [u][v].
  struct GreenData {
    std::vector<std::vector<bool>> leq_r;
    std::vector<std::vector<bool>> leq_l;
    std::vector<std::vector<bool>> leq_j;
    std::vector<std::vector<bool>> sim_h;

    bool sim_r(Element u, Element v) const {
      return leq_r[u][v] && leq_r[v][u];
    }
    bool sim_l(Element u, Element v) const {
      return leq_l[u][v] && leq_l[v][u];
    }
    bool sim_j(Element u, Element v) const {
      return leq_j[u][v] && leq_j[v][u];
    }
  };

  GreenData green(FiniteMonoid const& m);

  /// r is R-bad for u when u and ur are not R-equivalent.
  bool is_r_bad(FiniteMonoid const& m, GreenData const& g, Element u,
                Element r);
  /// r is L-bad for u when u and ru are not L-equivalent.
  bool is_l_bad(FiniteMonoid const& m, GreenData const& g, Element u,
                Element r);

  /// Partition of the elements into classes of an equivalence, each class
  /// sorted and classes ordered by smallest member.
  std::vector<std::vector<Element>> classes(
      std::size_t n, std::vector<std::vector<bool>> const& leq);

  /// Graphviz rendering of the eggbox picture: one box per J-class, rows
  /// are R-classes, columns are L-classes, idempotents starred.
  std::string eggbox_dot(FiniteMonoid const& m);

}  // namespace progmon

#endif  // PROGMON_ALGEBRA_GREEN_HPP
