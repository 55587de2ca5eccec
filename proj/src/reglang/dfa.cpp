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

#include "progmon/reglang/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "progmon/error.hpp"

namespace progmon {

  State Dfa::run(State q, Word const& w) const {
    for (Letter a : w) {
      if (a >= alphabet.size()) {
        throw InputError("letter index out of range for automaton");
      }
      q = next(q, a);
    }
    return q;
  }

  namespace {

    constexpr int kEps = -1;

    struct Nfa {
      std::vector<std::vector<std::pair<int, int>>> edges;

      int add() {
        edges.emplace_back();
        return static_cast<int>(edges.size()) - 1;
      }
      void link(int from, int label, int to) {
        edges[from].emplace_back(label, to);
      }
    };

    // Thompson construction; returns (start, end).
    std::pair<int, int> build(Nfa& n, Regex const& r, Alphabet const& sigma) {
      int s = n.add();
      int e = n.add();
      switch (r.kind) {
        case Regex::Kind::Empty: break;
        case Regex::Kind::Epsilon: n.link(s, kEps, e); break;
        case Regex::Kind::Letter:
          n.link(s, static_cast<int>(sigma.letter(r.letter)), e);
          break;
        case Regex::Kind::Union:
          for (auto const& c : r.children) {
            auto [cs, ce] = build(n, c, sigma);
            n.link(s, kEps, cs);
            n.link(ce, kEps, e);
          }
          break;
        case Regex::Kind::Concat: {
          int cur = s;
          for (auto const& c : r.children) {
            auto [cs, ce] = build(n, c, sigma);
            n.link(cur, kEps, cs);
            cur = ce;
          }
          n.link(cur, kEps, e);
          break;
        }
        case Regex::Kind::Star:
        case Regex::Kind::Plus: {
          auto [cs, ce] = build(n, r.children[0], sigma);
          n.link(s, kEps, cs);
          n.link(ce, kEps, e);
          n.link(ce, kEps, cs);
          if (r.kind == Regex::Kind::Star) n.link(s, kEps, e);
          break;
        }
      }
      return {s, e};
    }

    std::vector<int> eps_closure(Nfa const& n, std::vector<int> set) {
      std::vector<bool> in(n.edges.size(), false);
      for (int q : set) in[q] = true;
      for (std::size_t i = 0; i < set.size(); ++i) {
        for (auto [label, to] : n.edges[set[i]]) {
          if (label == kEps && !in[to]) {
            in[to] = true;
            set.push_back(to);
          }
        }
      }
      std::sort(set.begin(), set.end());
      return set;
    }

    Dfa product(Dfa const& a, Dfa const& b, bool (*op)(bool, bool)) {
      if (!(a.alphabet == b.alphabet)) {
        throw InputError("automata over different alphabets");
      }
      std::size_t const k = a.alphabet.size();
      Dfa               d;
      d.alphabet = a.alphabet;
      std::map<std::pair<State, State>, State> index;
      std::vector<std::pair<State, State>>     pairs{{a.initial, b.initial}};
      index[pairs[0]] = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        d.accepting.push_back(op(a.accepting[p], b.accepting[q]));
        for (Letter c = 0; c < k; ++c) {
          std::pair<State, State> nxt{a.next(p, c), b.next(q, c)};
          auto [it, fresh] = index.emplace(nxt, static_cast<State>(pairs.size()));
          if (fresh) pairs.push_back(nxt);
          d.delta.push_back(it->second);
        }
      }
      d.states = pairs.size();
      return minimize(d);
    }

  }  // namespace

  Dfa compile(Regex const& r, Alphabet const* alphabet) {
    Alphabet sigma;
    if (alphabet != nullptr) {
      sigma = *alphabet;
    } else {
      auto ls = letters(r);
      sigma   = Alphabet(std::vector<std::string>(ls.begin(), ls.end()));
    }
    Nfa n;
    auto [start, accept] = build(n, r, sigma);
    std::size_t const k  = sigma.size();

    Dfa d;
    d.alphabet = sigma;
    std::map<std::vector<int>, State> index;
    std::vector<std::vector<int>>     sets{eps_closure(n, {start})};
    index[sets[0]] = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      d.accepting.push_back(
          std::binary_search(sets[i].begin(), sets[i].end(), accept));
      for (Letter c = 0; c < k; ++c) {
        std::vector<int> moved;
        for (int q : sets[i]) {
          for (auto [label, to] : n.edges[q]) {
            if (label == static_cast<int>(c)) moved.push_back(to);
          }
        }
        auto closed      = eps_closure(n, std::move(moved));
        auto [it, fresh] = index.emplace(closed, static_cast<State>(sets.size()));
        if (fresh) sets.push_back(std::move(closed));
        d.delta.push_back(it->second);
      }
    }
    d.states = sets.size();
    return minimize(d);
  }

  Dfa compile(std::string_view regex_text, Alphabet const* alphabet) {
    return compile(parse_regex(regex_text), alphabet);
  }

  Dfa minimize(Dfa const& d) {
    std::size_t const k = d.alphabet.size();
    // Reachable states.
    std::vector<State> order{d.initial};
    std::vector<bool>  seen(d.states, false);
    seen[d.initial] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Letter c = 0; c < k; ++c) {
        State t = d.next(order[i], c);
        if (!seen[t]) {
          seen[t] = true;
          order.push_back(t);
        }
      }
    }
    // Moore refinement over reachable states.
    std::vector<std::size_t> cls(d.states, 0);
    for (State q : order) cls[q] = d.accepting[q] ? 1 : 0;
    std::size_t count = 0;
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> sig;
      std::vector<std::size_t>                        next_cls(d.states, 0);
      for (State q : order) {
        std::vector<std::size_t> key{cls[q]};
        for (Letter c = 0; c < k; ++c) key.push_back(cls[d.next(q, c)]);
        auto [it, fresh] = sig.emplace(std::move(key), sig.size());
        next_cls[q]      = it->second;
      }
      cls = std::move(next_cls);
      if (sig.size() == count) break;
      count = sig.size();
    }
    // Canonical BFS numbering of the classes.
    std::vector<State> rep_of_class(count, 0);
    for (State q : order) rep_of_class[cls[q]] = q;
    std::map<std::size_t, State> number;
    std::vector<std::size_t>     queue{cls[d.initial]};
    number[cls[d.initial]] = 0;
    Dfa out;
    out.alphabet = d.alphabet;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      State q = rep_of_class[queue[i]];
      out.accepting.push_back(d.accepting[q]);
      for (Letter c = 0; c < k; ++c) {
        std::size_t tc   = cls[d.next(q, c)];
        auto [it, fresh] = number.emplace(tc, static_cast<State>(queue.size()));
        if (fresh) queue.push_back(tc);
        out.delta.push_back(it->second);
      }
    }
    out.states  = queue.size();
    out.initial = 0;
    return out;
  }

  Dfa with_alphabet(Dfa const& d, Alphabet const& superset) {
    std::vector<Letter> old_of(superset.size(), 0);
    std::vector<bool>   known(superset.size(), false);
    for (Letter a = 0; a < d.alphabet.size(); ++a) {
      Letter b = superset.letter(d.alphabet.symbol(a));
      old_of[b] = a;
      known[b]  = true;
    }
    Dfa out;
    out.alphabet = superset;
    out.states   = d.states + 1;
    State const sink = static_cast<State>(d.states);
    for (State q = 0; q <= sink; ++q) {
      out.accepting.push_back(q == sink ? false : d.accepting[q]);
      for (Letter b = 0; b < superset.size(); ++b) {
        out.delta.push_back(q == sink || !known[b] ? sink : d.next(q, old_of[b]));
      }
    }
    out.initial = d.initial;
    return minimize(out);
  }

  Dfa complement(Dfa const& d) {
    Dfa out = d;
    out.accepting.flip();
    return minimize(out);
  }

  Dfa intersect(Dfa const& a, Dfa const& b) {
    return product(a, b, [](bool x, bool y) { return x && y; });
  }

  Dfa unite(Dfa const& a, Dfa const& b) {
    return product(a, b, [](bool x, bool y) { return x || y; });
  }

  Dfa difference(Dfa const& a, Dfa const& b) {
    return product(a, b, [](bool x, bool y) { return x && !y; });
  }

  Dfa left_quotient(Dfa const& d, Word const& u) {
    Dfa out     = d;
    out.initial = d.run(d.initial, u);
    return minimize(out);
  }

  Dfa right_quotient(Dfa const& d, Word const& u) {
    Dfa out = d;
    for (State q = 0; q < d.states; ++q) {
      out.accepting[q] = d.accepting[d.run(q, u)];
    }
    return minimize(out);
  }

  Dfa inverse_morphism(Dfa const& d, Alphabet const& gamma,
                       std::vector<Word> const& images) {
    if (images.size() != gamma.size()) {
      throw InputError("morphism needs one image per letter");
    }
    Dfa out;
    out.alphabet  = gamma;
    out.states    = d.states;
    out.initial   = d.initial;
    out.accepting = d.accepting;
    for (State q = 0; q < d.states; ++q) {
      for (Letter b = 0; b < gamma.size(); ++b) {
        out.delta.push_back(d.run(q, images[b]));
      }
    }
    return minimize(out);
  }

  Dfa universal(Alphabet const& alphabet) {
    Dfa d;
    d.alphabet  = alphabet;
    d.states    = 1;
    d.delta     = std::vector<State>(alphabet.size(), 0);
    d.accepting = {true};
    return d;
  }

  Dfa empty_language(Alphabet const& alphabet) {
    Dfa d       = universal(alphabet);
    d.accepting = {false};
    return d;
  }

  bool is_empty(Dfa const& d) {
    Dfa m = minimize(d);
    return m.states == 1 && !m.accepting[0];
  }

  std::optional<Word> distinguishing_word(Dfa const& a, Dfa const& b) {
    if (!(a.alphabet == b.alphabet)) {
      throw InputError("automata over different alphabets");
    }
    std::size_t const k = a.alphabet.size();
    using Pair          = std::pair<State, State>;
    std::map<Pair, std::pair<Pair, Letter>> parent;
    std::deque<Pair>                        queue{{a.initial, b.initial}};
    parent[queue.front()] = {queue.front(), 0};
    while (!queue.empty()) {
      Pair cur = queue.front();
      queue.pop_front();
      if (a.accepting[cur.first] != b.accepting[cur.second]) {
        Word w;
        Pair at = cur;
        while (at != Pair{a.initial, b.initial}) {
          auto [prev, letter] = parent[at];
          w.push_back(letter);
          at = prev;
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      for (Letter c = 0; c < k; ++c) {
        Pair nxt{a.next(cur.first, c), b.next(cur.second, c)};
        if (parent.emplace(nxt, std::pair{cur, c}).second) queue.push_back(nxt);
      }
    }
    return std::nullopt;
  }

}  // namespace progmon
