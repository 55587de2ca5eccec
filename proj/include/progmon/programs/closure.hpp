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
 * Program transformers realizing closure of program-recognizable languages
 * under Boolean operations, quotients and inverse length-multiplying
 * morphisms.
 */

#ifndef PROGMON_PROGRAMS_CLOSURE_HPP
#define PROGMON_PROGRAMS_CLOSURE_HPP

#include "progmon/programs/program.hpp"

namespace progmon {

  /// P1 over M followed by P2 over N, both lifted into M x N, so that the
  /// output is the pair (P1(w), P2(w)). Pair (x, y) has index x * |N| + y.
  Program product_combine(Program const& p1, Program const& p2,
                          Limits const& limits = default_limits());

  /// For a morphism mu sending every letter of gamma to a word of length k
  /// over the alphabet of P (range k n), the program Q of range n with
  /// Q(w) = P(mu(w)).
  Program inverse_lm(Program const& p, Alphabet const& gamma,
                     std::vector<Word> const& images);

  /// Q of range n - |u| - |v| with Q(w) = P(u w v). Instructions that read
  /// inside u or v become constant instructions at position 1; those with
  /// identity output are dropped. Throws InputError when a non-identity
  /// constant remains but Q has range 0.
  Program fix_boundary(Program const& p, Word const& u, Word const& v);

  Recognizer complement(Recognizer const& r);
  Recognizer intersect(Recognizer const& a, Recognizer const& b,
                       Limits const& limits = default_limits());
  Recognizer unite(Recognizer const& a, Recognizer const& b,
                   Limits const& limits = default_limits());

}  // namespace progmon

#endif  // PROGMON_PROGRAMS_CLOSURE_HPP
