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
 * Programs over finite monoids. A program of range n reads a word of length
 * n through a list of instructions (p, f): each one looks at the letter in
 * position p (1-based) and emits f of it. The output is the product of the
 * emitted elements in instruction order.
 *
 * Instruction indices in this API (subprograms, index sets) are 0-based;
 * positions are 1-based.
 */

#ifndef PROGMON_PROGRAMS_PROGRAM_HPP
#define PROGMON_PROGRAMS_PROGRAM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "progmon/algebra/monoid.hpp"
#include "progmon/alphabet.hpp"
#include "progmon/reglang/dfa.hpp"
#include "progmon/reglang/stamp.hpp"

namespace progmon {

  struct Instruction {
    std::size_t          position = 1;
    std::vector<Element> map;  // one element per letter

    bool operator==(Instruction const& o) const {
      return position == o.position && map == o.map;
    }
  };

  struct Program {
    std::size_t              range = 0;
    Alphabet                 alphabet;
    MonoidPtr                monoid;
    std::vector<Instruction> instructions;

    Program() = default;
    Program(std::size_t n, Alphabet sigma, MonoidPtr m,
            std::vector<Instruction> ins = {});

    std::size_t length() const {
      return instructions.size();
    }
    FiniteMonoid const& target() const {
      return *monoid;
    }
    /// Throws InputError when a position or element is out of range.
    void validate() const;
  };

  Element              eval(Program const& p, Word const& w);
  std::vector<Element> trace(Program const& p, Word const& w);

  /// Instructions at the given 0-based indices, kept in program order.
  Program subprogram(Program const& p, std::vector<std::size_t> const& indices);

  /// Program paired with the accepting subset of its monoid.
  struct Recognizer {
    Program              program;
    std::vector<Element> accept;  // sorted

    bool accepts(Word const& w) const;
  };

  struct RecognitionCheck {
    bool                ok = true;
    std::optional<Word> counterexample;
    std::size_t         words_checked = 0;
  };

  /// Compares against `reference` on every word of length range(P). Throws
  /// ResourceError above the enumeration cap.
  RecognitionCheck recognizes_exhaustive(
      Recognizer const& r, std::function<bool(Word const&)> const& reference,
      Limits const& limits = default_limits());
  RecognitionCheck recognizes_exhaustive(Recognizer const& r, Dfa const& reference,
                                         Limits const& limits = default_limits());

  /// (1, phi)(2, phi)...(n, phi).
  Program from_stamp(Stamp const& phi, std::size_t n);

}  // namespace progmon

#endif  // PROGMON_PROGRAMS_PROGRAM_HPP
