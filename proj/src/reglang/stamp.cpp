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

#include "progmon/reglang/stamp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace progmon {

  Stamp::Stamp(Alphabet alpha, MonoidPtr m, std::vector<Element> imgs)
      : alphabet(std::move(alpha)), monoid(std::move(m)), images(std::move(imgs)) {
    if (!monoid) throw InputError("stamp without a target monoid");
    if (images.size() != alphabet.size()) {
      throw InputError("stamp needs exactly one image per letter");
    }
    for (Element e : images) {
      if (e >= monoid->size()) throw InputError("letter image out of range");
    }
    if (closure(*monoid, images).size() != monoid->size()) {
      throw InputError("letter images do not generate the target monoid");
    }
  }

  Element Stamp::eval(Word const& w) const {
    Element acc = monoid->identity();
    for (Letter a : w) {
      if (a >= images.size()) throw InputError("letter outside the stamp alphabet");
      acc = (*monoid)(acc, images[a]);
    }
    return acc;
  }

  SyntacticStamp syntactic_stamp(Dfa const& input, Limits const& limits) {
    Dfa const         d = minimize(input);
    std::size_t const k = d.alphabet.size();
    using Transform     = std::vector<State>;

    std::vector<Transform> elems;
    std::vector<Word>      reps;
    std::map<Transform, Element> index;
    Transform id(d.states);
    for (State q = 0; q < d.states; ++q) id[q] = q;
    elems.push_back(id);
    reps.emplace_back();
    index[id] = 0;
    std::vector<Element> letter_image(k, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      limits.cancel.check();
      for (Letter a = 0; a < k; ++a) {
        Transform t(d.states);
        for (State q = 0; q < d.states; ++q) t[q] = d.next(elems[i][q], a);
        auto [it, fresh] = index.emplace(t, static_cast<Element>(elems.size()));
        if (fresh) {
          if (elems.size() >= limits.syntactic_monoid_cap) {
            throw ResourceError("syntactic monoid exceeds the cap of "
                                + std::to_string(limits.syntactic_monoid_cap)
                                + " elements");
          }
          elems.push_back(std::move(t));
          reps.push_back(concat(reps[i], Word{a}));
        }
        if (i == 0) letter_image[a] = it->second;
      }
    }
    std::size_t const        n = elems.size();
    std::vector<Element>     table(n * n);
    std::vector<std::string> names(n);
    for (Element x = 0; x < n; ++x) {
      names[x] = reps[x].empty() ? "1" : d.alphabet.format(reps[x]);
      for (Element y = 0; y < n; ++y) {
        Transform t(d.states);
        for (State q = 0; q < d.states; ++q) t[q] = elems[y][elems[x][q]];
        table[x * n + y] = index.at(t);
      }
    }
    std::vector<Element> accept;
    for (Element x = 0; x < n; ++x) {
      if (d.accepting[elems[x][d.initial]]) accept.push_back(x);
    }
    auto monoid = share(FiniteMonoid::trusted(n, std::move(table), 0, std::move(names)));
    return {Stamp(d.alphabet, monoid, letter_image), std::move(accept), d};
  }

  SyntacticStamp syntactic_stamp(std::string_view regex_text,
                                 Limits const&    limits) {
    return syntactic_stamp(compile(regex_text), limits);
  }

  bool stamp_recognizes(Stamp const& phi, std::vector<Element> const& accept,
                        Word const& w) {
    Element x = phi.eval(w);
    return std::find(accept.begin(), accept.end(), x) != accept.end();
  }

  Stamp evaluation_stamp(FiniteMonoid const& m) {
    std::set<std::string>    distinct(m.names().begin(), m.names().end());
    std::vector<std::string> symbols;
    bool const use_names = distinct.size() == m.size() && !distinct.count("");
    std::vector<Element> images;
    for (Element x = 0; x < m.size(); ++x) {
      symbols.push_back(use_names ? m.name(x) : "e" + std::to_string(x));
      images.push_back(x);
    }
    return Stamp(Alphabet(std::move(symbols)), share(m), std::move(images));
  }

  std::vector<Word> representatives(Stamp const& phi) {
    FiniteMonoid const& m = phi.target();
    std::vector<Word>   reps(m.size());
    std::vector<bool>   seen(m.size(), false);
    std::vector<Element> queue{m.identity()};
    seen[m.identity()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Letter a = 0; a < phi.alphabet.size(); ++a) {
        Element y = m(queue[i], phi.images[a]);
        if (!seen[y]) {
          seen[y] = true;
          reps[y] = concat(reps[queue[i]], Word{a});
          queue.push_back(y);
        }
      }
    }
    return reps;
  }

  StampAnalysis stability_index(Stamp const& phi) {
    FiniteMonoid const& m = phi.target();
    using Set             = std::vector<bool>;
    Set a1(m.size(), false);
    for (Element e : phi.images) a1[e] = true;
    auto times = [&](Set const& x) {
      Set out(m.size(), false);
      for (Element u = 0; u < m.size(); ++u) {
        if (!x[u]) continue;
        for (Element v = 0; v < m.size(); ++v) {
          if (a1[v]) out[m(u, v)] = true;
        }
      }
      return out;
    };
    // The sequence A_1, A_2, ... is eventually periodic; find the first
    // repeat to get its preperiod and period.
    std::map<Set, std::size_t> first_seen;
    std::vector<Set>           seq{Set{}, a1};
    std::size_t                start = 0, period = 0;
    for (std::size_t k = 1;; ++k) {
      auto [it, fresh] = first_seen.emplace(seq[k], k);
      if (!fresh) {
        start  = it->second;
        period = k - it->second;
        break;
      }
      seq.push_back(times(seq[k]));
    }
    // A_{2k} = A_k exactly when k is past the preperiod and a multiple of
    // the period.
    std::size_t const s = ((start + period - 1) / period) * period;
    StampAnalysis     out;
    out.s = s;
    Set const& as = seq[start + (s - start) % period];
    for (Element e = 0; e < m.size(); ++e) {
      if (as[e]) out.stable_semigroup.push_back(e);
    }
    out.stable_monoid = generated_submonoid(m, out.stable_semigroup);
    return out;
  }

  StableStamp stable_stamp(Stamp const& phi, Limits const& limits) {
    StampAnalysis const an = stability_index(phi);
    std::size_t const   count = word_count(phi.alphabet.size(), an.s);
    if (count > limits.derived_alphabet_cap) {
      throw ResourceError("stable alphabet would have "
                          + (count == SIZE_MAX ? std::string("too many")
                                               : std::to_string(count))
                          + " letters, above the cap of "
                          + std::to_string(limits.derived_alphabet_cap));
    }
    auto const&          emb = an.stable_monoid.embedding;
    std::vector<Element> back(phi.target().size(), 0);
    for (Element i = 0; i < emb.size(); ++i) back[emb[i]] = i;

    bool const               compact = phi.alphabet.single_char();
    std::vector<std::string> symbols;
    std::vector<Word>        blocks;
    std::vector<Element>     images;
    for_each_word(phi.alphabet.size(), an.s, [&](Word const& w) {
      std::string sym;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) sym += "_";
        sym += phi.alphabet.symbol(w[i]);
      }
      symbols.push_back(std::move(sym));
      blocks.push_back(w);
      images.push_back(back[phi.eval(w)]);
      return true;
    });
    return {Stamp(Alphabet(std::move(symbols)), share(an.stable_monoid.monoid),
                  std::move(images)),
            std::move(blocks), emb, an.s};
  }

}  // namespace progmon
