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

#include "progmon/algebra/division.hpp"

#include <algorithm>
#include <set>

namespace progmon {

  namespace {

    using Mask = std::uint32_t;

    Mask close(FiniteMonoid const& s, Mask seed) {
      Mask cur = seed | (Mask{1} << s.identity());
      bool grew = true;
      while (grew) {
        grew = false;
        for (Element a = 0; a < s.size(); ++a) {
          if (!(cur >> a & 1U)) continue;
          for (Element b = 0; b < s.size(); ++b) {
            if (!(cur >> b & 1U)) continue;
            Mask bit = Mask{1} << s(a, b);
            if (!(cur & bit)) {
              cur |= bit;
              grew = true;
            }
          }
        }
      }
      return cur;
    }

    std::vector<Element> members(Mask m, std::size_t n) {
      std::vector<Element> out;
      for (Element i = 0; i < n; ++i) {
        if (m >> i & 1U) out.push_back(i);
      }
      return out;
    }

    std::pair<std::size_t, std::size_t> index_period(FiniteMonoid const& m,
                                                     Element             x) {
      std::vector<std::size_t> seen(m.size(), 0);
      Element                  p = x;
      for (std::size_t k = 1;; ++k) {
        if (seen[p] != 0) return {seen[p], k - seen[p]};
        seen[p] = k;
        p       = m(p, x);
      }
    }

    constexpr Element kUnset = static_cast<Element>(-1);

    struct Search {
      FiniteMonoid const&               s;
      FiniteMonoid const&               t;
      std::vector<Element>              gens;
      std::vector<std::vector<Element>> candidates;
      std::vector<Element>              images;
      std::vector<Element>              map;
      Limits const&                     limits;

      // Propagates the generator images over the submonoid they generate.
      bool extend() {
        std::fill(map.begin(), map.end(), kUnset);
        map[s.identity()] = t.identity();
        std::vector<Element> queue{s.identity()};
        for (std::size_t q = 0; q < queue.size(); ++q) {
          Element x = queue[q];
          for (std::size_t i = 0; i < images.size(); ++i) {
            Element y   = s(x, gens[i]);
            Element img = t(map[x], images[i]);
            if (map[y] == kUnset) {
              map[y] = img;
              queue.push_back(y);
            } else if (map[y] != img) {
              return false;
            }
          }
        }
        return true;
      }

      bool run() {
        limits.cancel.check();
        if (images.size() == gens.size()) {
          if (!extend()) return false;
          std::vector<bool> hit(t.size(), false);
          for (Element e : map) {
            if (e != kUnset) hit[e] = true;
          }
          return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
        }
        for (Element c : candidates[images.size()]) {
          images.push_back(c);
          if (extend() && run()) return true;
          images.pop_back();
        }
        return false;
      }
    };

  }  // namespace

  std::vector<std::vector<Element>> submonoids(FiniteMonoid const& s,
                                               Limits const&       limits) {
    if (s.size() > limits.division_cap || s.size() > 31) {
      throw ResourceError("division search needs |S| <= "
                          + std::to_string(limits.division_cap)
                          + ", got " + std::to_string(s.size()));
    }
    std::set<Mask>    seen;
    std::vector<Mask> work{close(s, 0)};
    seen.insert(work.front());
    for (std::size_t i = 0; i < work.size(); ++i) {
      limits.cancel.check();
      for (Element g = 0; g < s.size(); ++g) {
        if (work[i] >> g & 1U) continue;
        Mask next = close(s, work[i] | (Mask{1} << g));
        if (seen.insert(next).second) work.push_back(next);
      }
    }
    std::vector<std::vector<Element>> out;
    for (Mask m : seen) out.push_back(members(m, s.size()));
    return out;
  }

  std::optional<DivisionWitness> find_division(FiniteMonoid const& t,
                                               FiniteMonoid const& s,
                                               Limits const&       limits) {
    auto subs = submonoids(s, limits);
    std::sort(subs.begin(), subs.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size() || (a.size() == b.size() && a < b);
    });
    std::vector<std::pair<std::size_t, std::size_t>> sig_t;
    for (Element y = 0; y < t.size(); ++y) sig_t.push_back(index_period(t, y));

    for (auto const& sub : subs) {
      if (sub.size() < t.size()) continue;
      Search search{s, t, {}, {}, {}, std::vector<Element>(s.size(), kUnset),
                    limits};
      // Greedy generating set of the submonoid.
      Mask covered = close(s, 0);
      for (Element x : sub) {
        if (!(covered >> x & 1U)) {
          search.gens.push_back(x);
          Mask seed = 0;
          for (Element g : search.gens) seed |= Mask{1} << g;
          covered = close(s, seed);
        }
      }
      for (Element g : search.gens) {
        auto [ig, pg] = index_period(s, g);
        std::vector<Element> c;
        for (Element y = 0; y < t.size(); ++y) {
          if (sig_t[y].first <= ig && pg % sig_t[y].second == 0) {
            c.push_back(y);
          }
        }
        search.candidates.push_back(std::move(c));
      }
      if (search.run()) {
        DivisionWitness w;
        w.domain = sub;
        for (Element x : sub) w.image.push_back(search.map[x]);
        return w;
      }
    }
    return std::nullopt;
  }

}  // namespace progmon
