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

#include "progmon/reglang/witnesses.hpp"

#include <algorithm>

#include "progmon/algebra/division.hpp"
#include "progmon/algebra/variety.hpp"
#include "progmon/reglang/stamp.hpp"

namespace progmon {

  FiniteMonoid syntactic_semigroup_monoid(std::string_view regex_text) {
    Stamp const         phi = syntactic_stamp(regex_text).stamp;
    FiniteMonoid const& m   = phi.target();
    // Image of the nonempty words: close the letter images under product.
    std::vector<bool>    in(m.size(), false);
    std::vector<Element> elems;
    for (Element e : phi.images) {
      if (!in[e]) {
        in[e] = true;
        elems.push_back(e);
      }
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Element p : {m(elems[i], elems[j]), m(elems[j], elems[i])}) {
          if (!in[p]) {
            in[p] = true;
            elems.push_back(p);
          }
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    for (Element e : elems) {
      bool neutral = true;
      for (Element x : elems) {
        if (m(e, x) != x || m(x, e) != x) {
          neutral = false;
          break;
        }
      }
      if (!neutral) continue;
      std::vector<Element> back(m.size(), 0);
      for (Element i = 0; i < elems.size(); ++i) back[elems[i]] = i;
      std::size_t const        n = elems.size();
      std::vector<Element>     table(n * n);
      std::vector<std::string> names;
      for (Element i = 0; i < n; ++i) {
        names.push_back(m.name(elems[i]));
        for (Element j = 0; j < n; ++j) table[i * n + j] = back[m(elems[i], elems[j])];
      }
      return FiniteMonoid::trusted(n, std::move(table), back[e], std::move(names));
    }
    throw InputError("the syntactic semigroup of " + std::string(regex_text)
                     + " has no identity element");
  }

  FiniteMonoid const& b2_monoid() {
    static FiniteMonoid const m = syntactic_semigroup_monoid("(c*ac*bc*)*");
    return m;
  }

  FiniteMonoid const& u_monoid() {
    static FiniteMonoid const m =
        syntactic_semigroup_monoid("((b+c)*a(b+c)*b(b+c)*)*");
    return m;
  }

  std::string to_string(DaObstruction const& o, FiniteMonoid const& m) {
    switch (o.kind) {
      case DaObstruction::Kind::NotAperiodic:
        return "not aperiodic: x = " + m.name(o.x) + ", k = " + std::to_string(o.k);
      case DaObstruction::Kind::DividedByB2: return "divided by B2";
      case DaObstruction::Kind::DividedByU: return "divided by U";
    }
    return "";
  }

  DaObstruction find_da_obstruction(FiniteMonoid const& m, Limits const& limits) {
    if (satisfies_variety(m, VarietyId::DA)) {
      throw InputError("monoid satisfies the DA identity");
    }
    std::size_t const omega = idempotent_power(m);
    for (Element x = 0; x < m.size(); ++x) {
      Element const e = m.power(x, omega);
      if (m(e, x) == e) continue;
      std::size_t k = 1;
      for (Element p = m(e, x); p != e; p = m(p, x)) ++k;
      return {DaObstruction::Kind::NotAperiodic, x, k};
    }
    if (divides(b2_monoid(), m, limits)) return {DaObstruction::Kind::DividedByB2};
    if (divides(u_monoid(), m, limits)) return {DaObstruction::Kind::DividedByU};
    throw CertificateError("aperiodic monoid outside DA divided by neither B2 nor U",
                           std::to_string(m.size()) + " elements");
  }

}  // namespace progmon
