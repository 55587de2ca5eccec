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

#include "progmon/algebra/monoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace progmon {

  namespace {

    std::vector<std::string> default_names(std::size_t n) {
      std::vector<std::string> names;
      names.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
      return names;
    }

    // Index and period of the cyclic subsemigroup generated by x.
    std::pair<std::size_t, std::size_t> index_period(FiniteMonoid const& m,
                                                     Element             x) {
      std::vector<std::size_t> seen(m.size(), 0);
      Element                  p = x;
      for (std::size_t k = 1;; ++k) {
        if (seen[p] != 0) {
          return {seen[p], k - seen[p]};
        }
        seen[p] = k;
        p       = m(p, x);
      }
    }

  }  // namespace

  FiniteMonoid::FiniteMonoid(std::vector<std::vector<Element>> table,
                             Element                           identity,
                             std::vector<std::string>          names) {
    size_ = table.size();
    if (size_ == 0) {
      throw InputError("a monoid needs at least one element");
    }
    table_.reserve(size_ * size_);
    for (auto const& row : table) {
      if (row.size() != size_) {
        throw InputError("multiplication table must be square");
      }
      for (Element e : row) {
        if (e >= size_) {
          throw InputError("table entry " + std::to_string(e)
                           + " out of range");
        }
        table_.push_back(e);
      }
    }
    if (identity >= size_) {
      throw InputError("identity index out of range");
    }
    identity_ = identity;
    if (names.empty()) {
      names = default_names(size_);
    } else if (names.size() != size_) {
      throw InputError("element name count does not match monoid size");
    }
    names_ = std::move(names);
    if (auto problem = check_laws()) {
      throw InputError(*problem);
    }
  }

  FiniteMonoid FiniteMonoid::trusted(std::size_t              size,
                                     std::vector<Element>     flat_table,
                                     Element                  identity,
                                     std::vector<std::string> names) {
    FiniteMonoid m;
    m.size_     = size;
    m.table_    = std::move(flat_table);
    m.identity_ = identity;
    m.names_    = names.empty() ? default_names(size) : std::move(names);
    return m;
  }

  FiniteMonoid FiniteMonoid::trivial() {
    return trusted(1, {0}, 0, {"1"});
  }

  FiniteMonoid FiniteMonoid::cyclic_group(std::size_t n) {
    if (n == 0) {
      throw InputError("cyclic group order must be positive");
    }
    std::vector<Element> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a * n + b] = static_cast<Element>((a + b) % n);
      }
    }
    return trusted(n, std::move(t), 0);
  }

  FiniteMonoid FiniteMonoid::u1() {
    return trusted(2, {0, 1, 1, 1}, 0, {"1", "0"});
  }

  Element FiniteMonoid::multiply(Element a, Element b) const {
    if (a >= size_ || b >= size_) {
      throw InputError("element index out of range");
    }
    return (*this)(a, b);
  }

  Element FiniteMonoid::product(std::span<Element const> elements) const {
    Element acc = identity_;
    for (Element e : elements) {
      acc = multiply(acc, e);
    }
    return acc;
  }

  Element FiniteMonoid::power(Element x, std::size_t k) const {
    Element acc = identity_;
    Element base = x;
    while (k > 0) {
      if (k & 1U) {
        acc = (*this)(acc, base);
      }
      base = (*this)(base, base);
      k >>= 1U;
    }
    return acc;
  }

  std::string const& FiniteMonoid::name(Element x) const {
    if (x >= size_) {
      throw InputError("element index out of range");
    }
    return names_[x];
  }

  std::optional<std::string> FiniteMonoid::check_laws() const {
    for (Element e : table_) {
      if (e >= size_) {
        return "table entry out of range";
      }
    }
    for (Element a = 0; a < size_; ++a) {
      if ((*this)(identity_, a) != a || (*this)(a, identity_) != a) {
        return "identity law fails at element " + std::to_string(a);
      }
    }
    for (Element a = 0; a < size_; ++a) {
      for (Element b = 0; b < size_; ++b) {
        Element ab = (*this)(a, b);
        for (Element c = 0; c < size_; ++c) {
          if ((*this)(ab, c) != (*this)(a, (*this)(b, c))) {
            return "associativity fails at (" + std::to_string(a) + ", "
                   + std::to_string(b) + ", " + std::to_string(c) + ")";
          }
        }
      }
    }
    return std::nullopt;
  }

  Element multiply(FiniteMonoid const& m, Element a, Element b) {
    return m.multiply(a, b);
  }

  std::size_t idempotent_power(FiniteMonoid const& m) {
    std::size_t max_index = 1;
    std::size_t period    = 1;
    for (Element x = 0; x < m.size(); ++x) {
      auto [index, p] = index_period(m, x);
      max_index       = std::max(max_index, index);
      period          = std::lcm(period, p);
    }
    return ((max_index + period - 1) / period) * period;
  }

  FiniteMonoid direct_product(FiniteMonoid const& m,
                              FiniteMonoid const& n,
                              Limits const&       limits) {
    std::size_t const size = m.size() * n.size();
    if (size > limits.product_cap) {
      throw ResourceError("direct product of sizes " + std::to_string(m.size())
                          + " and " + std::to_string(n.size())
                          + " exceeds the product cap of "
                          + std::to_string(limits.product_cap));
    }
    std::vector<Element>     t(size * size);
    std::vector<std::string> names(size);
    std::size_t const        ns = n.size();
    for (Element a = 0; a < size; ++a) {
      names[a] = "(" + m.name(a / ns) + "," + n.name(a % ns) + ")";
      for (Element b = 0; b < size; ++b) {
        t[static_cast<std::size_t>(a) * size + b] = static_cast<Element>(
            m(a / ns, b / ns) * ns + n(a % ns, b % ns));
      }
    }
    return FiniteMonoid::trusted(
        size,
        std::move(t),
        static_cast<Element>(m.identity() * ns + n.identity()),
        std::move(names));
  }

  std::vector<Element> closure(FiniteMonoid const&         m,
                               std::vector<Element> const& generators) {
    std::vector<bool>    in(m.size(), false);
    std::vector<Element> members{m.identity()};
    in[m.identity()] = true;
    for (Element g : generators) {
      if (g >= m.size()) {
        throw InputError("generator index out of range");
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element g : generators) {
        Element y = m(members[i], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  Submonoid generated_submonoid(FiniteMonoid const&         m,
                                std::vector<Element> const& generators) {
    std::vector<Element> members = closure(m, generators);
    std::vector<Element> reindex(m.size(), 0);
    for (Element i = 0; i < members.size(); ++i) {
      reindex[members[i]] = i;
    }
    std::size_t const        k = members.size();
    std::vector<Element>     t(k * k);
    std::vector<std::string> names(k);
    for (Element i = 0; i < k; ++i) {
      names[i] = m.name(members[i]);
      for (Element j = 0; j < k; ++j) {
        t[i * k + j] = reindex[m(members[i], members[j])];
      }
    }
    return {FiniteMonoid::trusted(
                k, std::move(t), reindex[m.identity()], std::move(names)),
            std::move(members)};
  }

  bool is_morphism(FiniteMonoid const&         m,
                   FiniteMonoid const&         n,
                   std::vector<Element> const& map) {
    if (map.size() != m.size()) {
      return false;
    }
    for (Element e : map) {
      if (e >= n.size()) {
        return false;
      }
    }
    if (map[m.identity()] != n.identity()) {
      return false;
    }
    for (Element a = 0; a < m.size(); ++a) {
      for (Element b = 0; b < m.size(); ++b) {
        if (map[m(a, b)] != n(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    constexpr Element kUnset = static_cast<Element>(-1);

    std::vector<Element> greedy_generators(FiniteMonoid const& m) {
      std::vector<Element> gens;
      std::vector<Element> covered = closure(m, gens);
      std::vector<bool>    in(m.size(), false);
      for (Element e : covered) {
        in[e] = true;
      }
      for (Element x = 0; x < m.size(); ++x) {
        if (!in[x]) {
          gens.push_back(x);
          for (Element e : closure(m, gens)) {
            in[e] = true;
          }
        }
      }
      return gens;
    }

    // Extends the assignment of generator images to the generated submonoid;
    // fails on an inconsistency or a collision of images.
    bool extend(FiniteMonoid const&         m,
                FiniteMonoid const&         n,
                std::vector<Element> const& gens,
                std::vector<Element> const& images,
                std::vector<Element>&       map,
                bool                        injective) {
      std::fill(map.begin(), map.end(), kUnset);
      std::vector<Element> inverse(n.size(), kUnset);
      map[m.identity()]     = n.identity();
      inverse[n.identity()] = m.identity();
      std::deque<Element> queue{m.identity()};
      while (!queue.empty()) {
        Element x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < images.size(); ++i) {
          Element y   = m(x, gens[i]);
          Element img = n(map[x], images[i]);
          if (map[y] == kUnset) {
            if (injective && inverse[img] != kUnset) {
              return false;
            }
            map[y]       = img;
            inverse[img] = y;
            queue.push_back(y);
          } else if (map[y] != img) {
            return false;
          }
        }
      }
      return true;
    }

    bool search_iso(FiniteMonoid const&                     m,
                    FiniteMonoid const&                     n,
                    std::vector<Element> const&             gens,
                    std::vector<std::vector<Element>> const& candidates,
                    std::vector<Element>&                   images,
                    std::vector<Element>&                   map) {
      if (images.size() == gens.size()) {
        return extend(m, n, gens, images, map, true)
               && std::find(map.begin(), map.end(), kUnset) == map.end();
      }
      for (Element c : candidates[images.size()]) {
        images.push_back(c);
        if (extend(m, n, gens, images, map, true)
            && search_iso(m, n, gens, candidates, images, map)) {
          return true;
        }
        images.pop_back();
      }
      return false;
    }

  }  // namespace

  std::optional<std::vector<Element>> find_isomorphism(FiniteMonoid const& m,
                                                       FiniteMonoid const& n) {
    if (m.size() != n.size()) {
      return std::nullopt;
    }
    std::vector<std::pair<std::size_t, std::size_t>> sig_m, sig_n;
    for (Element x = 0; x < m.size(); ++x) {
      sig_m.push_back(index_period(m, x));
      sig_n.push_back(index_period(n, x));
    }
    {
      auto a = sig_m, b = sig_n;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return std::nullopt;
      }
    }
    std::vector<Element>              gens = greedy_generators(m);
    std::vector<std::vector<Element>> candidates;
    for (Element g : gens) {
      std::vector<Element> c;
      for (Element y = 0; y < n.size(); ++y) {
        if (sig_n[y] == sig_m[g] && y != n.identity()) {
          c.push_back(y);
        }
      }
      candidates.push_back(std::move(c));
    }
    std::vector<Element> images;
    std::vector<Element> map(m.size(), kUnset);
    if (search_iso(m, n, gens, candidates, images, map)) {
      return map;
    }
    return std::nullopt;
  }

}  // namespace progmon
