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

#include "progmon/programs/pk.hpp"

namespace progmon {

  namespace {

    void emit(KSet const& s, std::size_t level, std::size_t from,
              Stamp const& eta, std::vector<Instruction>& out) {
      if (level == 0) {
        return;
      }
      Element const one    = eta.target().identity();
      Element const top    = eta.images[top_letter(level)];
      Element const bottom = eta.images[bottom_letter(level)];
      for (std::size_t j = from; j <= s.n; ++j) {
        out.push_back({j, {one, s.starts_with(j) ? top : bottom}});
        emit(s.restrict(j), level - 1, j + 1, eta, out);
        out.push_back({j, {one, bottom}});
      }
    }

  }  // namespace

  Recognizer build_pk(KSet const& s, MkFamily const& family) {
    s.validate();
    if (s.k == 0 || s.k != family.k) {
      throw InputError("k-set arity must match the family and be positive");
    }
    Stamp const&             eta = family.syntactic.stamp;
    std::vector<Instruction> ins;
    emit(s, s.k, 1, eta, ins);
    return {Program(s.n, binary_alphabet(), eta.monoid, std::move(ins)),
            family.syntactic.accept};
  }

  Recognizer build_pk(std::size_t n, std::size_t k, KSet const& s,
                      Limits const& limits) {
    if (s.n != n || s.k != k) {
      throw InputError("k-set does not match the requested n and k");
    }
    return build_pk(s, mk_stamp(k, limits));
  }

}  // namespace progmon
