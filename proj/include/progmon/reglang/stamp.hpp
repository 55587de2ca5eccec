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
 * Stamps (surjective morphisms from a free monoid onto a finite monoid),
 * syntactic stamps of automata, and stability analysis.
 */

#ifndef PROGMON_REGLANG_STAMP_HPP
#define PROGMON_REGLANG_STAMP_HPP

#include <vector>

#include "progmon/algebra/monoid.hpp"
#include "progmon/alphabet.hpp"
#include "progmon/reglang/dfa.hpp"

namespace progmon {

  struct Stamp {
    Alphabet             alphabet;
    MonoidPtr            monoid;
    std::vector<Element> images;  // one per letter

    /// Validates sizes and surjectivity.
    Stamp(Alphabet alphabet, MonoidPtr monoid, std::vector<Element> images);

    FiniteMonoid const& target() const {
      return *monoid;
    }
    Element eval(Word const& w) const;
    Element eval(std::string_view text) const {
      return eval(alphabet.parse(text));
    }
  };

  struct SyntacticStamp {
    Stamp                stamp;
    std::vector<Element> accept;  // sorted; eta^{-1}(accept) = L
    Dfa                  dfa;     // the minimal automaton it came from
  };

  /// Transition monoid of the minimal automaton. Elements are named by their
  /// shortest, then lexicographically least, representative word ("1" for
  /// the empty word).
  SyntacticStamp syntactic_stamp(Dfa const&    d,
                                 Limits const& limits = default_limits());
  SyntacticStamp syntactic_stamp(std::string_view regex_text,
                                 Limits const&    limits = default_limits());

  bool stamp_recognizes(Stamp const& phi, std::vector<Element> const& accept,
                        Word const& w);

  /// Letters are the elements of M (by name when names are distinct).
  Stamp evaluation_stamp(FiniteMonoid const& m);

  /// Shortest-then-least word mapping to each element.
  std::vector<Word> representatives(Stamp const& phi);

  struct StampAnalysis {
    std::size_t          s = 1;
    std::vector<Element> stable_semigroup;  // phi(Sigma^s), sorted
    Submonoid            stable_monoid;     // stable semigroup plus identity
  };

  StampAnalysis stability_index(Stamp const& phi);

  struct StableStamp {
    Stamp             stamp;
    std::vector<Word> blocks;     // letter i of the new alphabet spells blocks[i]
    std::vector<Element> embedding;  // stable monoid index -> element of M
    std::size_t       s = 1;
  };

  /// The stamp over Sigma^s into the stable monoid. Throws ResourceError
  /// when |Sigma|^s exceeds the derived alphabet cap.
  StableStamp stable_stamp(Stamp const&  phi,
                           Limits const& limits = default_limits());

}  // namespace progmon

#endif  // PROGMON_REGLANG_STAMP_HPP
