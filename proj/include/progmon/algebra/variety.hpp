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
 * The five varieties handled here, each given by a finite set of identities
 * whose variables range over the monoid and whose omega is the idempotent
 * power. Identities are kept as terms so that a violation can be expanded
 * back into words.
 */

#ifndef PROGMON_ALGEBRA_VARIETY_HPP
#define PROGMON_ALGEBRA_VARIETY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "progmon/algebra/monoid.hpp"
#include "progmon/alphabet.hpp"

namespace progmon {

  enum class VarietyId { Trivial, Com, J, DA, Aperiodic };

  std::string           variety_name(VarietyId v);
  /// Accepts I, Com, J, DA, A (case-insensitive).
  VarietyId             parse_variety(std::string const& text);
  std::vector<VarietyId> all_varieties();

  struct Term {
    enum class Kind { Var, Mul, Omega };
    Kind                        kind = Kind::Var;
    std::size_t                 var  = 0;
    std::shared_ptr<Term const> left, right;  // right unused for Omega

    static Term var_(std::size_t i);
    static Term mul(Term a, Term b);
    static Term omega(Term a);

    std::string to_string() const;
  };

  struct Identity {
    std::string name;
    std::size_t arity;
    Term        lhs, rhs;
  };

  std::vector<Identity> const& identities(VarietyId v);

  Element evaluate(Term const&                 t,
                   FiniteMonoid const&         m,
                   std::vector<Element> const& assignment,
                   std::size_t                 omega);

  /// Replaces variables by words and omega by the given exponent.
  Word expand(Term const& t, std::vector<Word> const& assignment,
              std::size_t omega);

  struct Violation {
    Identity const*      identity = nullptr;
    std::vector<Element> assignment;
    Element              lhs = 0, rhs = 0;
  };

  /// First violating assignment in lexicographic order, if any.
  std::optional<Violation> find_violation(FiniteMonoid const& m, VarietyId v);

  inline bool satisfies_variety(FiniteMonoid const& m, VarietyId v) {
    return !find_violation(m, v).has_value();
  }

}  // namespace progmon

#endif  // PROGMON_ALGEBRA_VARIETY_HPP
