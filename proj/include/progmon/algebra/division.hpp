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
 * Brute-force monoid division: T divides S when some submonoid of S maps
 * onto T by a monoid morphism.
 */

#ifndef PROGMON_ALGEBRA_DIVISION_HPP
#define PROGMON_ALGEBRA_DIVISION_HPP

#include <optional>
#include <vector>

#include "progmon/algebra/monoid.hpp"

namespace progmon {

  /// All submonoids of S (closed subsets containing the identity), each as a
  /// sorted list of elements. Throws ResourceError above the division cap.
  std::vector<std::vector<Element>> submonoids(
      FiniteMonoid const& s, Limits const& limits = default_limits());

  struct DivisionWitness {
    std::vector<Element> domain;  // submonoid of S
    std::vector<Element> image;   // image[i] = h(domain[i]) in T
  };

  std::optional<DivisionWitness> find_division(
      FiniteMonoid const& t, FiniteMonoid const& s,
      Limits const& limits = default_limits());

  inline bool divides(FiniteMonoid const& t, FiniteMonoid const& s,
                      Limits const& limits = default_limits()) {
    return find_division(t, s, limits).has_value();
  }

}  // namespace progmon

#endif  // PROGMON_ALGEBRA_DIVISION_HPP
