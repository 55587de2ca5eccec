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

#include "progmon/programs/program.hpp"

#include <algorithm>

namespace progmon {

  Program::Program(std::size_t n, Alphabet sigma, MonoidPtr m,
                   std::vector<Instruction> ins)
      : range(n), alphabet(std::move(sigma)), monoid(std::move(m)),
        instructions(std::move(ins)) {
    validate();
  }

  void Program::validate() const {
    if (!monoid) throw InputError("program without a monoid");
    for (std::size_t i = 0; i < instructions.size(); ++i) {
      auto const& ins = instructions[i];
      if (ins.position < 1 || ins.position > range) {
        throw InputError("instruction " + std::to_string(i) + " reads position "
                         + std::to_string(ins.position) + " outside [1, "
                         + std::to_string(range) + "]");
      }
      if (ins.map.size() != alphabet.size()) {
        throw InputError("instruction " + std::to_string(i)
                         + " does not map every letter");
      }
      for (Element e : ins.map) {
        if (e >= monoid->size()) {
          throw InputError("instruction " + std::to_string(i)
                           + " emits an element outside the monoid");
        }
      }
    }
  }

  namespace {

    void check_word(Program const& p, Word const& w) {
      if (w.size() != p.range) {
        throw InputError("word of length " + std::to_string(w.size())
                         + " given to a program of range "
                         + std::to_string(p.range));
      }
      for (Letter a : w) {
        if (a >= p.alphabet.size()) throw InputError("letter outside the program alphabet");
      }
    }

  }  // namespace

  Element eval(Program const& p, Word const& w) {
    check_word(p, w);
    FiniteMonoid const& m   = *p.monoid;
    Element             acc = m.identity();
    for (auto const& ins : p.instructions) acc = m(acc, ins.map[w[ins.position - 1]]);
    return acc;
  }

  std::vector<Element> trace(Program const& p, Word const& w) {
    check_word(p, w);
    std::vector<Element> out;
    out.reserve(p.instructions.size());
    for (auto const& ins : p.instructions) out.push_back(ins.map[w[ins.position - 1]]);
    return out;
  }

  Program subprogram(Program const& p, std::vector<std::size_t> const& indices) {
    std::vector<std::size_t> idx(indices);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    Program out = p;
    out.instructions.clear();
    for (std::size_t i : idx) {
      if (i >= p.instructions.size()) {
        throw InputError("instruction index " + std::to_string(i) + " out of range");
      }
      out.instructions.push_back(p.instructions[i]);
    }
    return out;
  }

  bool Recognizer::accepts(Word const& w) const {
    return std::binary_search(accept.begin(), accept.end(), eval(program, w));
  }

  RecognitionCheck recognizes_exhaustive(
      Recognizer const& r, std::function<bool(Word const&)> const& reference,
      Limits const& limits) {
    std::size_t const total = word_count(r.program.alphabet.size(), r.program.range);
    if (total > limits.enumeration_cap) {
      throw ResourceError("exhaustive check over "
                          + (total == SIZE_MAX ? std::string("too many")
                                               : std::to_string(total))
                          + " words exceeds the enumeration cap");
    }
    RecognitionCheck out;
    for_each_word(r.program.alphabet.size(), r.program.range, [&](Word const& w) {
      if ((out.words_checked & 0xFFF) == 0) limits.cancel.check();
      ++out.words_checked;
      if (r.accepts(w) != reference(w)) {
        out.ok             = false;
        out.counterexample = w;
        return false;
      }
      return true;
    });
    return out;
  }

  RecognitionCheck recognizes_exhaustive(Recognizer const& r, Dfa const& reference,
                                         Limits const& limits) {
    if (!(reference.alphabet == r.program.alphabet)) {
      throw InputError("reference automaton uses a different alphabet");
    }
    return recognizes_exhaustive(
        r, [&](Word const& w) { return reference.accepts(w); }, limits);
  }

  Program from_stamp(Stamp const& phi, std::size_t n) {
    std::vector<Instruction> ins;
    for (std::size_t p = 1; p <= n; ++p) ins.push_back({p, phi.images});
    return Program(n, phi.alphabet, phi.monoid, std::move(ins));
  }

}  // namespace progmon
