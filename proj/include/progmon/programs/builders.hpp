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
 * Explicit program constructions: position checks, middle scans, programs
 * for essentially-V stamps, the J trick for (a+b)*ac+, and single-scan
 * normalization over commutative monoids.
 */

#ifndef PROGMON_PROGRAMS_BUILDERS_HPP
#define PROGMON_PROGRAMS_BUILDERS_HPP

#include "progmon/algebra/variety.hpp"
#include "progmon/programs/closure.hpp"
#include "progmon/programs/program.hpp"
#include "progmon/reglang/stamp.hpp"

namespace progmon {

  enum class Side { Prefix, Suffix };

  /// Recognizes the length-n words whose k-th letter (counted from the left
  /// for Prefix, from the right for Suffix) is `a`. One instruction emitting
  /// a fixed non-identity element z of `monoid` (U1 by default) on `a`,
  /// accepting {z}. For n < k the program is empty and accepts nothing.
  Recognizer build_position_check(Alphabet const& sigma, std::size_t n,
                                  std::size_t k, Letter a, Side side,
                                  MonoidPtr monoid = nullptr);

  /// (s+1, mu)(s+2, mu)...(n-s, mu); empty when n <= 2s.
  Program build_middle_scan(Stamp const& mu, std::size_t s, std::size_t n);

  /// Program over U1^b x N recognizing phi^{-1}(accept) among words of
  /// length n, where N is the context quotient of phi. The U1 factors read
  /// the bits of the letter codes at the first and last s positions (every
  /// position when n < 2s) and N scans the middle. Throws InputError when
  /// phi is not essentially-V or V is the trivial variety, and
  /// ResourceError when the product exceeds the cap.
  Recognizer build_essentially_v_program(Stamp const& phi, VarietyId v,
                                         std::vector<Element> const& accept,
                                         std::size_t n,
                                         Limits const& limits = default_limits());

  struct JTrick {
    SyntacticStamp subword;  // syntactic stamp of the subword language
    Recognizer     recognizer;
  };

  /// The program (2,phi)(1,phi)(3,phi)(2,phi)...(n,phi)(n-1,phi) where phi
  /// is the syntactic morphism of the words over {a,b,c} having ca as a
  /// scattered subword and none of cca, caa, cb. Requires n >= 2.
  JTrick build_j_trick(std::size_t n);

  /// One instruction per read position, merging all instructions at that
  /// position. Requires a commutative monoid.
  Program single_scan_normalize(Program const& p);

}  // namespace progmon

#endif  // PROGMON_PROGRAMS_BUILDERS_HPP
