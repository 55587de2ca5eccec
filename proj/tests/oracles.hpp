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

// Independent reference implementations used as test oracles. They trade
// speed for directness and share no code with the library beyond the
// plain data types.

#ifndef PROGMON_TESTS_ORACLES_HPP
#define PROGMON_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "progmon/algebra/monoid.hpp"
#include "progmon/alphabet.hpp"
#include "progmon/reglang/regex.hpp"

namespace oracle {

  using progmon::Element;
  using progmon::FiniteMonoid;
  using progmon::Regex;
  using progmon::Word;

  // End positions reachable after matching r from position i of w.
  inline std::set<std::size_t> match(Regex const& r,
                                     std::vector<std::string> const& w,
                                     std::size_t i) {
    using K = Regex::Kind;
    switch (r.kind) {
      case K::Empty: return {};
      case K::Epsilon: return {i};
      case K::Letter:
        if (i < w.size() && w[i] == r.letter) return {i + 1};
        return {};
      case K::Union: {
        std::set<std::size_t> out;
        for (auto const& c : r.children) {
          auto s = match(c, w, i);
          out.insert(s.begin(), s.end());
        }
        return out;
      }
      case K::Concat: {
        std::set<std::size_t> cur{i};
        for (auto const& c : r.children) {
          std::set<std::size_t> nxt;
          for (auto p : cur) {
            auto s = match(c, w, p);
            nxt.insert(s.begin(), s.end());
          }
          cur = std::move(nxt);
        }
        return cur;
      }
      case K::Star:
      case K::Plus: {
        std::set<std::size_t> reached;
        std::set<std::size_t> frontier{i};
        if (r.kind == K::Star) reached.insert(i);
        while (!frontier.empty()) {
          std::set<std::size_t> nxt;
          for (auto p : frontier) {
            for (auto q : match(r.children[0], w, p)) {
              if (reached.insert(q).second) nxt.insert(q);
            }
          }
          frontier = std::move(nxt);
        }
        return reached;
      }
    }
    return {};
  }

  inline bool regex_accepts(Regex const& r, progmon::Alphabet const& sigma,
                            Word const& w) {
    std::vector<std::string> syms;
    for (auto a : w) syms.push_back(sigma.symbol(a));
    return match(r, syms, 0).count(syms.size()) != 0;
  }

  inline bool laws_hold(FiniteMonoid const& m) {
    for (Element a = 0; a < m.size(); ++a) {
      if (m(m.identity(), a) != a || m(a, m.identity()) != a) return false;
      for (Element b = 0; b < m.size(); ++b) {
        for (Element c = 0; c < m.size(); ++c) {
          if (m(m(a, b), c) != m(a, m(b, c))) return false;
        }
      }
    }
    return true;
  }

  // u <=_R v iff v = u x for some x.
  inline bool leq_r(FiniteMonoid const& m, Element u, Element v) {
    for (Element x = 0; x < m.size(); ++x) {
      if (m(u, x) == v) return true;
    }
    return false;
  }
  inline bool leq_l(FiniteMonoid const& m, Element u, Element v) {
    for (Element x = 0; x < m.size(); ++x) {
      if (m(x, u) == v) return true;
    }
    return false;
  }
  inline bool leq_j(FiniteMonoid const& m, Element u, Element v) {
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = 0; y < m.size(); ++y) {
        if (m(m(x, u), y) == v) return true;
      }
    }
    return false;
  }

  // Smallest t with every s^t idempotent, by trying t = 1, 2, ...
  inline std::size_t omega(FiniteMonoid const& m) {
    for (std::size_t t = 1;; ++t) {
      bool ok = true;
      for (Element x = 0; x < m.size() && ok; ++x) {
        Element p = m.identity();
        for (std::size_t i = 0; i < t; ++i) p = m(p, x);
        ok = m(p, p) == p;
      }
      if (ok) return t;
    }
  }

  // Division by exhaustive search: every closed subset containing 1 and
  // every function from it to T.
  inline bool divides(FiniteMonoid const& t, FiniteMonoid const& s) {
    std::size_t const n = s.size();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (!(mask >> s.identity() & 1U)) continue;
      std::vector<Element> dom;
      for (Element i = 0; i < n; ++i) {
        if (mask >> i & 1U) dom.push_back(i);
      }
      bool closed = true;
      for (Element a : dom) {
        for (Element b : dom) {
          if (!(mask >> s(a, b) & 1U)) closed = false;
        }
      }
      if (!closed || dom.size() < t.size()) continue;
      std::vector<Element> f(dom.size(), 0);
      while (true) {
        std::vector<Element> img(n, 0);
        for (std::size_t i = 0; i < dom.size(); ++i) img[dom[i]] = f[i];
        bool ok = img[s.identity()] == t.identity();
        for (std::size_t i = 0; ok && i < dom.size(); ++i) {
          for (std::size_t j = 0; ok && j < dom.size(); ++j) {
            ok = img[s(dom[i], dom[j])] == t(f[i], f[j]);
          }
        }
        if (ok) {
          std::set<Element> hit(f.begin(), f.end());
          if (hit.size() == t.size()) return true;
        }
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == t.size()) f[i++] = 0;
        if (i == f.size()) break;
      }
    }
    return false;
  }

  inline FiniteMonoid from_rows(std::vector<std::vector<Element>> rows,
                                Element identity = 0) {
    return FiniteMonoid(std::move(rows), identity);
  }

}  // namespace oracle

#endif  // PROGMON_TESTS_ORACLES_HPP
