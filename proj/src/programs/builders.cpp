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

#include "progmon/programs/builders.hpp"

#include <algorithm>
#include <map>

#include "progmon/reglang/essentially.hpp"

namespace progmon {

  Recognizer build_position_check(Alphabet const& sigma, std::size_t n,
                                  std::size_t k, Letter a, Side side,
                                  MonoidPtr monoid) {
    if (!monoid) monoid = share(FiniteMonoid::u1());
    if (monoid->size() < 2) throw InputError("position checks need a nontrivial monoid");
    if (a >= sigma.size()) throw InputError("letter outside the alphabet");
    if (k == 0) throw InputError("positions start at 1");
    Element const z = monoid->identity() == 0 ? 1 : 0;
    if (n < k) return {Program(n, sigma, monoid), {}};
    std::vector<Element> map(sigma.size(), monoid->identity());
    map[a]            = z;
    std::size_t const p = side == Side::Prefix ? k : n - k + 1;
    return {Program(n, sigma, monoid, {{p, map}}), {z}};
  }

  Program build_middle_scan(Stamp const& mu, std::size_t s, std::size_t n) {
    std::vector<Instruction> ins;
    for (std::size_t p = s + 1; p + s <= n; ++p) ins.push_back({p, mu.images});
    return Program(n, mu.alphabet, mu.monoid, std::move(ins));
  }

  Recognizer build_essentially_v_program(Stamp const& phi, VarietyId v,
                                         std::vector<Element> const& accept,
                                         std::size_t n, Limits const& limits) {
    if (v == VarietyId::Trivial) {
      throw InputError("the trivial variety cannot host position checks");
    }
    EssentialVerdict const verdict = is_essentially_v(phi, v);
    if (!verdict.holds) throw InputError("stamp is not essentially-" + variety_name(v));
    ContextQuotient const& q = verdict.quotient;
    std::size_t const      s = q.s;
    Stamp const            mu = quotient_stamp(phi, q);
    std::size_t const      k  = phi.alphabet.size();

    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < k) ++bits;
    std::vector<std::size_t> positions;
    bool const               whole = n < 2 * s;
    for (std::size_t p = 1; p <= n; ++p) {
      if (whole || p <= s || p > n - s) positions.push_back(p);
    }
    std::size_t const checks = positions.size() * bits;
    if (checks >= 63 || (std::size_t{1} << checks) * q.monoid.size() > limits.product_cap) {
      throw ResourceError("essentially-V program would need a product monoid above the cap of "
                          + std::to_string(limits.product_cap));
    }

    // Fold bit checks (most significant first) and the middle scan.
    auto    u1 = share(FiniteMonoid::u1());
    Program acc(n, phi.alphabet, share(FiniteMonoid::trivial()));
    bool    first = true;
    for (std::size_t p : positions) {
      for (std::size_t b = 0; b < bits; ++b) {
        std::vector<Element> map(k, 0);
        for (Letter a = 0; a < k; ++a) map[a] = (a >> b & 1U) ? 1 : 0;
        Program check(n, phi.alphabet, u1, {{p, map}});
        acc   = first ? check : product_combine(acc, check, limits);
        first = false;
      }
    }
    Program middle = build_middle_scan(mu, s, n);
    acc            = first ? middle : product_combine(acc, middle, limits);

    // Decode each product element into the boundary letters and the middle
    // class, then evaluate phi on boundary + representative + boundary.
    std::vector<Word> const nrep = [&] {
      std::vector<Word> reps = representatives(phi);
      std::vector<Word> out(q.monoid.size());
      std::vector<bool> have(q.monoid.size(), false);
      for (Element x = 0; x < phi.target().size(); ++x) {
        if (!have[q.projection[x]]) {
          have[q.projection[x]] = true;
          out[q.projection[x]]  = reps[x];
        }
      }
      return out;
    }();
    std::size_t const nsize = q.monoid.size();
    Recognizer        out{acc, {}};
    for (Element e = 0; e < acc.target().size(); ++e) {
      Element const m    = e % nsize;
      std::size_t   code = e / nsize;
      std::vector<Letter> letters(positions.size(), 0);
      // Digit j (0 = most significant) belongs to check j.
      std::vector<unsigned> digits(checks, 0);
      for (std::size_t j = checks; j-- > 0;) {
        digits[j] = code & 1U;
        code >>= 1U;
      }
      bool valid = true;
      for (std::size_t i = 0; i < positions.size(); ++i) {
        Letter a = 0;
        for (std::size_t b = 0; b < bits; ++b) a |= digits[i * bits + b] << b;
        if (a >= k) valid = false;
        letters[i] = a;
      }
      if (!valid) continue;
      Word w;
      if (whole) {
        w = letters;
        if (m != q.monoid.identity()) continue;
      } else {
        w.assign(letters.begin(), letters.begin() + s);
        w.insert(w.end(), nrep[m].begin(), nrep[m].end());
        w.insert(w.end(), letters.begin() + s, letters.end());
      }
      if (std::binary_search(accept.begin(), accept.end(), phi.eval(w))) {
        out.accept.push_back(e);
      }
    }
    return out;
  }

  JTrick build_j_trick(std::size_t n) {
    if (n < 2) throw InputError("the J trick needs range at least 2");
    Alphabet const sigma = Alphabet::from_chars("abc");
    auto sub = [&](char const* re) { return compile(re, sigma); };
    Dfa l = sub("(a+b+c)*c(a+b+c)*a(a+b+c)*");
    for (char const* bad : {"(a+b+c)*c(a+b+c)*c(a+b+c)*a(a+b+c)*",
                            "(a+b+c)*c(a+b+c)*a(a+b+c)*a(a+b+c)*",
                            "(a+b+c)*c(a+b+c)*b(a+b+c)*"}) {
      l = difference(l, sub(bad));
    }
    SyntacticStamp ss = syntactic_stamp(l);
    std::vector<Instruction> ins;
    for (std::size_t i = 1; i < n; ++i) {
      ins.push_back({i + 1, ss.stamp.images});
      ins.push_back({i, ss.stamp.images});
    }
    Program p(n, sigma, ss.stamp.monoid, std::move(ins));
    std::vector<Element> accept = ss.accept;
    return {std::move(ss), {std::move(p), std::move(accept)}};
  }

  Program single_scan_normalize(Program const& p) {
    if (!satisfies_variety(p.target(), VarietyId::Com)) {
      throw InputError("single-scan normalization needs a commutative monoid");
    }
    FiniteMonoid const&                   m = p.target();
    std::map<std::size_t, std::vector<Element>> merged;
    for (auto const& i : p.instructions) {
      auto [it, fresh] = merged.emplace(i.position, i.map);
      if (!fresh) {
        for (Letter a = 0; a < i.map.size(); ++a) it->second[a] = m(it->second[a], i.map[a]);
      }
    }
    std::vector<Instruction> ins;
    for (auto& [pos, map] : merged) ins.push_back({pos, std::move(map)});
    return Program(p.range, p.alphabet, p.monoid, std::move(ins));
  }

}  // namespace progmon
