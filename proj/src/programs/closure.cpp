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

#include "progmon/programs/closure.hpp"

#include <algorithm>

namespace progmon {

  Program product_combine(Program const& p1, Program const& p2, Limits const& limits) {
    if (p1.range != p2.range) throw InputError("programs of different ranges");
    if (!(p1.alphabet == p2.alphabet)) throw InputError("programs over different alphabets");
    FiniteMonoid const& m  = p1.target();
    FiniteMonoid const& n  = p2.target();
    auto                mn = share(direct_product(m, n, limits));
    Element const       ns = static_cast<Element>(n.size());
    std::vector<Instruction> ins;
    for (auto const& i : p1.instructions) {
      Instruction j{i.position, {}};
      for (Element e : i.map) j.map.push_back(e * ns + n.identity());
      ins.push_back(std::move(j));
    }
    for (auto const& i : p2.instructions) {
      Instruction j{i.position, {}};
      for (Element e : i.map) j.map.push_back(m.identity() * ns + e);
      ins.push_back(std::move(j));
    }
    return Program(p1.range, p1.alphabet, mn, std::move(ins));
  }

  Program inverse_lm(Program const& p, Alphabet const& gamma,
                     std::vector<Word> const& images) {
    if (images.size() != gamma.size()) throw InputError("morphism needs one image per letter");
    if (images.empty()) throw InputError("morphism over an empty alphabet");
    std::size_t const k = images.front().size();
    if (k == 0) throw InputError("length-multiplying morphism with k = 0");
    for (auto const& w : images) {
      if (w.size() != k) throw InputError("morphism images have different lengths");
      for (Letter a : w) {
        if (a >= p.alphabet.size()) throw InputError("morphism image outside the program alphabet");
      }
    }
    if (p.range % k != 0) throw InputError("range is not a multiple of the image length");
    std::vector<Instruction> ins;
    for (auto const& i : p.instructions) {
      std::size_t const block  = (i.position + k - 1) / k;
      std::size_t const offset = (i.position - 1) % k;
      Instruction       j{block, {}};
      for (Letter b = 0; b < gamma.size(); ++b) j.map.push_back(i.map[images[b][offset]]);
      ins.push_back(std::move(j));
    }
    return Program(p.range / k, gamma, p.monoid, std::move(ins));
  }

  Program fix_boundary(Program const& p, Word const& u, Word const& v) {
    if (u.size() + v.size() > p.range) throw InputError("boundary words longer than the range");
    for (Letter a : concat(u, v)) {
      if (a >= p.alphabet.size()) throw InputError("boundary letter outside the alphabet");
    }
    std::size_t const n  = p.range - u.size() - v.size();
    Element const     id = p.target().identity();
    std::vector<Instruction> ins;
    for (auto const& i : p.instructions) {
      if (i.position <= u.size()) {
        Element c = i.map[u[i.position - 1]];
        if (c == id) continue;
        if (n == 0) throw InputError("constant instruction needs a position but the range is 0");
        ins.push_back({1, std::vector<Element>(p.alphabet.size(), c)});
      } else if (i.position > u.size() + n) {
        Element c = i.map[v[i.position - u.size() - n - 1]];
        if (c == id) continue;
        if (n == 0) throw InputError("constant instruction needs a position but the range is 0");
        ins.push_back({1, std::vector<Element>(p.alphabet.size(), c)});
      } else {
        ins.push_back({i.position - u.size(), i.map});
      }
    }
    return Program(n, p.alphabet, p.monoid, std::move(ins));
  }

  Recognizer complement(Recognizer const& r) {
    Recognizer out{r.program, {}};
    for (Element x = 0; x < r.program.target().size(); ++x) {
      if (!std::binary_search(r.accept.begin(), r.accept.end(), x)) out.accept.push_back(x);
    }
    return out;
  }

  namespace {

    Recognizer combine(Recognizer const& a, Recognizer const& b, bool conj,
                       Limits const& limits) {
      Recognizer  out{product_combine(a.program, b.program, limits), {}};
      std::size_t ns = b.program.target().size();
      for (Element x = 0; x < out.program.target().size(); ++x) {
        bool in_a = std::binary_search(a.accept.begin(), a.accept.end(), x / ns);
        bool in_b = std::binary_search(b.accept.begin(), b.accept.end(), x % ns);
        if (conj ? (in_a && in_b) : (in_a || in_b)) out.accept.push_back(x);
      }
      return out;
    }

  }  // namespace

  Recognizer intersect(Recognizer const& a, Recognizer const& b, Limits const& limits) {
    return combine(a, b, true, limits);
  }

  Recognizer unite(Recognizer const& a, Recognizer const& b, Limits const& limits) {
    return combine(a, b, false, limits);
  }

}  // namespace progmon
