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
 * Named witness monoids and the DA obstruction finder.
 */

#ifndef PROGMON_REGLANG_WITNESSES_HPP
#define PROGMON_REGLANG_WITNESSES_HPP

#include <string_view>

#include "progmon/algebra/monoid.hpp"

namespace progmon {

  /// The image of the nonempty words under the syntactic morphism of the
  /// language, viewed as a monoid. Throws InputError when that semigroup has
  /// no identity element.
  FiniteMonoid syntactic_semigroup_monoid(std::string_view regex_text);

  /// B2, from (c*ac*bc*)*. The letter c maps to the identity of the
  /// semigroup of nonempty words, which is why the semigroup (six elements)
  /// rather than the monoid (seven, with a separate empty word) is used.
  FiniteMonoid const& b2_monoid();
  /// U, from ((b+c)*a(b+c)*b(b+c)*)*, built the same way.
  FiniteMonoid const& u_monoid();

  struct DaObstruction {
    enum class Kind { NotAperiodic, DividedByB2, DividedByU };
    Kind        kind = Kind::NotAperiodic;
    Element     x    = 0;  // NotAperiodic only
    std::size_t k    = 0;  // least k >= 1 with x^(w+k) = x^w
  };

  std::string to_string(DaObstruction const& o, FiniteMonoid const& m);

  /// Explains why M is outside DA. Throws InputError when M is in DA and
  /// ResourceError when a division search would exceed the cap.
  DaObstruction find_da_obstruction(FiniteMonoid const& m,
                                    Limits const& limits = default_limits());

}  // namespace progmon

#endif  // PROGMON_REGLANG_WITNESSES_HPP
