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
 * Complete deterministic automata with the usual language operations. All
 * constructors return minimal automata whose states are numbered in BFS
 * order from the initial state, so equal languages over the same alphabet
 * give equal objects.
 */

#ifndef PROGMON_REGLANG_DFA_HPP
#define PROGMON_REGLANG_DFA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "progmon/alphabet.hpp"
#include "progmon/reglang/regex.hpp"

namespace progmon {

  using State = std::uint32_t;

  struct Dfa {
    Alphabet           alphabet;
    std::size_t        states = 0;
    std::vector<State> delta;  // delta[q * |alphabet| + a]
    State              initial = 0;
    std::vector<bool>  accepting;

    State next(State q, Letter a) const {
      return delta[static_cast<std::size_t>(q) * alphabet.size() + a];
    }
    State run(State q, Word const& w) const;
    bool  accepts(Word const& w) const {
      return accepting[run(initial, w)];
    }
    /// Parses `text` with the automaton's alphabet.
    bool accepts(std::string_view text) const {
      return accepts(alphabet.parse(text));
    }

    bool operator==(Dfa const& o) const {
      return alphabet == o.alphabet && states == o.states && delta == o.delta
             && initial == o.initial && accepting == o.accepting;
    }
  };

  /// Minimal DFA for `r`. Without an explicit alphabet the letters of `r`
  /// are used in sorted order; an explicit alphabet must contain them.
  Dfa compile(Regex const& r, Alphabet const* alphabet = nullptr);
  inline Dfa compile(Regex const& r, Alphabet const& alphabet) {
    return compile(r, &alphabet);
  }
  Dfa compile(std::string_view regex_text, Alphabet const* alphabet = nullptr);
  inline Dfa compile(std::string_view regex_text, Alphabet const& alphabet) {
    return compile(regex_text, &alphabet);
  }

  /// Drops unreachable states, merges equivalent ones, renumbers.
  Dfa minimize(Dfa const& d);

  /// Same language over a larger alphabet; new letters lead to a sink.
  Dfa with_alphabet(Dfa const& d, Alphabet const& superset);

  Dfa complement(Dfa const& d);
  Dfa intersect(Dfa const& a, Dfa const& b);
  Dfa unite(Dfa const& a, Dfa const& b);
  Dfa difference(Dfa const& a, Dfa const& b);

  /// u^{-1} L.
  Dfa left_quotient(Dfa const& d, Word const& u);
  /// L u^{-1}.
  Dfa right_quotient(Dfa const& d, Word const& u);
  /// {w over gamma : image(w) in L}, where image sends letter b to images[b].
  Dfa inverse_morphism(Dfa const& d, Alphabet const& gamma,
                       std::vector<Word> const& images);

  Dfa universal(Alphabet const& alphabet);
  Dfa empty_language(Alphabet const& alphabet);
  bool is_empty(Dfa const& d);

  /// Shortest (then lexicographically least) word on which the automata
  /// disagree; nullopt when equivalent. Alphabets must match.
  std::optional<Word> distinguishing_word(Dfa const& a, Dfa const& b);
  inline bool equivalent(Dfa const& a, Dfa const& b) {
    return !distinguishing_word(a, b).has_value();
  }

}  // namespace progmon

#endif  // PROGMON_REGLANG_DFA_HPP
