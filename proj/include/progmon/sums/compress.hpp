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

#ifndef PROGMON_SUMS_COMPRESS_HPP
#define PROGMON_SUMS_COMPRESS_HPP

#include <vector>

#include "progmon/programs/program.hpp"
#include "progmon/sums/sum_expr.hpp"

namespace progmon {

  /// Indices (0-based, sorted) of a subprogram Q of `p` such that, for every
  /// index set containing them and every input w, the trace of the restricted
  /// program lies in L(k) exactly when the trace of `p` does. Letters of `k`
  /// are elements of the program's monoid.
  ///
  /// Kept instructions, per position p and input letter a:
  ///  - star: the first instruction at p giving each element on a;
  ///  - split of two stars: the first and the last such instruction;
  ///  - deeper split with marker g: the first instruction at p giving g on a
  ///    (the last one when the right side avoids g), followed by the
  ///    recursive choices for the instructions before and after it.
  std::vector<std::size_t> compress_for_sum(Program const& p, SumExpr const& k);

  struct Compression {
    Program                  program;
    std::vector<std::size_t> indices;
    std::size_t              level = 0;  // highest leaf level
    std::size_t              words_checked = 0;
    /// The compressed program with the same accepting set agrees with the
    /// original on every input. Guaranteed when the certificate describes
    /// products over all words, as the M_k certificates do.
    bool direct_equivalent = false;
  };

  /// Union of compress_for_sum over the certificate leaves. Both the
  /// certificate and the result are checked on every input of length
  /// range(p); a certificate that disagrees with acceptance raises
  /// CertificateError carrying the offending input.
  Compression compress_program(Program const&              p,
                               std::vector<Element> const& accept,
                               BoolCombo const&            certificate,
                               Limits const& limits = default_limits());

}  // namespace progmon

#endif  // PROGMON_SUMS_COMPRESS_HPP
