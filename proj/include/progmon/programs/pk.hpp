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

#ifndef PROGMON_PROGRAMS_PK_HPP
#define PROGMON_PROGRAMS_PK_HPP

#include "progmon/programs/program.hpp"
#include "progmon/sums/family.hpp"
#include "progmon/sums/kset.hpp"

namespace progmon {

  /// P_k(1, S) over M_k for binary inputs of length s.n, accepting K_{n,S}.
  ///
  /// P_k(i, S) runs over j = i..n as
  ///     (j, f_j) P_{k-1}(j+1, S|j) (j, g)
  /// where f_j sends 1 to Tk when j starts a tuple of S and to Bk otherwise,
  /// g sends 1 to Bk, and 0 always maps to the identity. P_0 is empty. The
  /// length is at most 4 n^k.
  Recognizer build_pk(KSet const& s, MkFamily const& family);
  Recognizer build_pk(std::size_t n, std::size_t k, KSet const& s,
                      Limits const& limits = default_limits());

}  // namespace progmon

#endif  // PROGMON_PROGRAMS_PK_HPP
