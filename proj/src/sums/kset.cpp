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

#include "progmon/sums/kset.hpp"

#include <algorithm>
#include <map>

#include "progmon/error.hpp"

namespace progmon {

  void KSet::validate() const {
    for (auto const& t : tuples) {
      if (t.size() != k) {
        throw InputError("k-set tuple has " + std::to_string(t.size())
                         + " entries, expected " + std::to_string(k));
      }
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 1 || t[i] > n) {
          throw InputError("k-set entry " + std::to_string(t[i])
                           + " outside [1, " + std::to_string(n) + "]");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (t[j] == t[i]) {
            throw InputError("k-set tuple repeats position "
                             + std::to_string(t[i]));
          }
        }
      }
    }
  }

  KSet KSet::restrict(std::size_t j) const {
    if (k == 0) {
      throw InputError("cannot restrict a 0-set");
    }
    KSet out{n, k - 1, {}};
    for (auto const& t : tuples) {
      if (t.front() == j) {
        out.tuples.emplace(t.begin() + 1, t.end());
      }
    }
    return out;
  }

  bool KSet::starts_with(std::size_t j) const {
    return std::any_of(tuples.begin(), tuples.end(), [&](auto const& t) {
      return !t.empty() && t.front() == j;
    });
  }

  Alphabet const& binary_alphabet() {
    static Alphabet const sigma = Alphabet::from_chars("01");
    return sigma;
  }

  bool in_k_language(KSet const& s, Word const& w) {
    if (w.size() != s.n) {
      return false;
    }
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < w.size() && ones.size() < s.k; ++i) {
      if (w[i] == 1) {
        ones.push_back(i + 1);
      }
    }
    return ones.size() == s.k && s.tuples.count(ones) != 0;
  }

  Dfa k_language(KSet const& s) {
    s.validate();
    std::set<std::vector<std::size_t>> prefixes;
    for (auto const& t : s.tuples) {
      for (std::size_t len = 0; len <= t.size(); ++len) {
        prefixes.emplace(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(len));
      }
    }
    // A state is (positions read, ones seen so far); a complete tuple means
    // the word is accepted once it reaches length n.
    using Key = std::pair<std::size_t, std::vector<std::size_t>>;
    std::map<Key, State> ids;
    std::vector<Key>     keys;
    Dfa                  d;
    d.alphabet = binary_alphabet();
    State const dead = 0;
    keys.push_back({s.n + 1, {}});
    auto id = [&](Key const& key) -> State {
      auto [it, fresh] = ids.emplace(key, static_cast<State>(keys.size()));
      if (fresh) {
        keys.push_back(key);
      }
      return it->second;
    };
    d.initial = prefixes.count({}) != 0 ? id({0, {}}) : dead;
    for (std::size_t q = 0; q < keys.size(); ++q) {
      auto const [i, seen] = keys[q];
      for (Letter a = 0; a < 2; ++a) {
        State to = dead;
        if (q != dead && i < s.n) {
          auto next = seen;
          if (a == 1 && next.size() < s.k) {
            next.push_back(i + 1);
          }
          if (prefixes.count(next) != 0) {
            to = id({i + 1, std::move(next)});
          }
        }
        d.delta.push_back(to);
      }
    }
    d.states = keys.size();
    d.accepting.assign(d.states, false);
    for (std::size_t q = 1; q < keys.size(); ++q) {
      d.accepting[q] = keys[q].first == s.n && keys[q].second.size() == s.k;
    }
    return minimize(d);
  }

  KSet random_kset(std::mt19937_64& rng, std::size_t n, std::size_t k,
                   double density) {
    KSet                             s{n, k, {}};
    std::bernoulli_distribution      coin(density);
    std::vector<std::size_t>         t;
    std::function<void()>            rec = [&] {
      if (t.size() == k) {
        if (coin(rng)) {
          s.tuples.insert(t);
        }
        return;
      }
      for (std::size_t p = 1; p <= n; ++p) {
        if (std::find(t.begin(), t.end(), p) == t.end()) {
          t.push_back(p);
          rec();
          t.pop_back();
        }
      }
    };
    rec();
    return s;
  }

  boost::multiprecision::cpp_int count_bound(std::size_t i, std::size_t n,
                                             std::size_t l) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::pow;
    cpp_int const ci = i;
    return pow(ci, static_cast<unsigned>(i * i)) * pow(cpp_int(2), static_cast<unsigned>(i))
           * pow(cpp_int(n) * ci * ci, static_cast<unsigned>(l));
  }

}  // namespace progmon
