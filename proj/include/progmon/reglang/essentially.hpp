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
 * Essentially-V and quasi-V membership for stamps.
 *
 * Decision procedure. Let s be the stability index of phi and C the set of
 * images of words of length at least s, that is phi(Sigma^s) M. Two elements
 * m, m' of M are identified when a m b = a m' b for all a, b in C. Because
 * M C and C M are contained in C, this relation is a congruence. A stamp mu
 * that witnesses essential membership separates nothing more than contexts
 * of length s do, and a morphism extends that to all longer contexts, so
 * the kernel of mu refines the relation. The quotient N is thus a divisor of
 * every witness and is itself a witness, and phi is essentially-V exactly
 * when N is in V.
 */

#ifndef PROGMON_REGLANG_ESSENTIALLY_HPP
#define PROGMON_REGLANG_ESSENTIALLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "progmon/algebra/variety.hpp"
#include "progmon/reglang/stamp.hpp"

namespace progmon {

  struct ContextQuotient {
    FiniteMonoid         monoid;      // N
    std::vector<Element> projection;  // M -> N
    std::size_t          s = 1;
    std::vector<Element> contexts;    // phi(Sigma^s) M, sorted
  };

  ContextQuotient context_quotient(Stamp const& phi);

  /// mu = projection o phi as a stamp onto N.
  Stamp quotient_stamp(Stamp const& phi, ContextQuotient const& q);

  struct EssentialCertificate {
    std::string identity;  // violated identity in N
    Word        u, v;      // its two sides expanded over Sigma
    Word        x, y;      // contexts of length at least s
    Element     xuy = 0, xvy = 0;
  };

  struct EssentialVerdict {
    bool                                holds = false;
    ContextQuotient                     quotient;
    std::optional<EssentialCertificate> certificate;  // present when false
  };

  EssentialVerdict is_essentially_v(Stamp const& phi, VarietyId v);

  bool is_quasi_v(Stamp const& phi, VarietyId v);

  EssentialVerdict is_quasi_essentially_v(
      Stamp const& phi, VarietyId v, Limits const& limits = default_limits());

  /// Letters of a violated equation, in the order the equation quantifies
  /// them.
  struct EquationWitness {
    int                 equation = 0;
    std::vector<Letter> letters;
  };

  /// phi(e x y f) = phi(e y x f) for letters with idempotent images e, f.
  /// Requires stability index 1.
  std::optional<EquationWitness> ecom_violation(Stamp const& phi);
  inline bool check_ecom_condition(Stamp const& phi) {
    return !ecom_violation(phi).has_value();
  }

  /// The three equations (e, f, g with idempotent images):
  ///   1. phi(e x f y g) = phi(e y f x g)
  ///   2. phi(e f e f) = phi(e f)
  ///   3. phi(e x y f) = phi(e y e f x f)
  std::optional<EquationWitness> com_equation_violation(Stamp const& phi);
  inline bool check_com_program_equations(Stamp const& phi) {
    return !com_equation_violation(phi).has_value();
  }

  /// u = p (xy)^w z and v = p (xy)^w x z, where w is the idempotent power
  /// of the target. The middles are the two sides of (xy)^w x = (xy)^w,
  /// which holds in J, so a stamp separating u and v with contexts p, z of
  /// length at least s has no J witness for its stable stamp.
  struct OmegaPair {
    Word        u, v;
    std::size_t omega = 1;
    Element     image_u = 0, image_v = 0;
  };

  OmegaPair omega_pair(Stamp const& phi, Word const& p, Word const& x,
                       Word const& y, Word const& z);

}  // namespace progmon

#endif  // PROGMON_REGLANG_ESSENTIALLY_HPP
