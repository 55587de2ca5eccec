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

#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "progmon/algebra/variety.hpp"
#include "progmon/reglang/essentially.hpp"
#include "progmon/reglang/witnesses.hpp"

using namespace progmon;

namespace {

  // Number of Myhill-Nerode classes seen among prefixes of length <= p,
  // telling residuals apart with suffixes of length <= q.
  std::size_t residual_count(char const* re, Alphabet const& sigma, std::size_t p,
                             std::size_t q) {
    Regex r = parse_regex(re);
    std::set<std::vector<bool>> sigs;
    for (std::size_t lu = 0; lu <= p; ++lu) {
      for_each_word(sigma.size(), lu, [&](Word const& u) {
        std::vector<bool> sig;
        for (std::size_t lv = 0; lv <= q; ++lv) {
          for_each_word(sigma.size(), lv, [&](Word const& v) {
            sig.push_back(oracle::regex_accepts(r, sigma, concat(u, v)));
            return true;
          });
        }
        sigs.insert(sig);
        return true;
      });
    }
    return sigs.size();
  }

  void check_membership(char const* re, std::size_t max_len) {
    Dfa   d = compile(re);
    Regex r = parse_regex(re);
    for (std::size_t n = 0; n <= max_len; ++n) {
      for_each_word(d.alphabet.size(), n, [&](Word const& w) {
        CHECK(d.accepts(w) == oracle::regex_accepts(r, d.alphabet, w));
        return true;
      });
    }
  }

  FiniteMonoid left_zero_plus_identity() {
    return FiniteMonoid({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
  }

}  // namespace

TEST_CASE("regex parsing and printing") {
  CHECK(to_string(parse_regex("a(a+b)*")) == "a(a+b)*");
  CHECK(to_string(parse_regex("(a+b)*ac~")) == "(a+b)*ac~");
  CHECK(parse_regex("\xE2\x88\x85").kind == Regex::Kind::Empty);
  CHECK(parse_regex("\xCE\xB5").kind == Regex::Kind::Epsilon);
  CHECK(letters(parse_regex("[T1][B2]*a")) == std::set<std::string>{"B2", "T1", "a"});
  CHECK_THROWS_AS(parse_regex("a+"), InputError);
  CHECK_THROWS_AS(parse_regex("(ab"), InputError);
  CHECK_THROWS_AS(parse_regex("*a"), InputError);
  for (char const* re : {"(c+ab)*", "a(a+b)*b(a+b)*a", "#+_", "((a~b)*+c)~"}) {
    Dfa d1 = compile(re);
    Dfa d2 = compile(to_string(parse_regex(re)));
    CHECK(d1 == d2);
  }
}

TEST_CASE("minimal automata") {
  Dfa a = compile("a(a+b)*");
  CHECK(a.states == 3);
  CHECK(a.states == residual_count("a(a+b)*", a.alphabet, 3, 3));
  Dfa e = compile("#", Alphabet{"a"});
  CHECK(e.states == 1);
  CHECK_FALSE(e.accepting[0]);
  Dfa c = compile("(c+ab)*");
  CHECK(c.states == 3);
  CHECK(c.states == residual_count("(c+ab)*", c.alphabet, 3, 3));
  CHECK(minimize(c) == c);
  for (char const* re : {"a(a+b)*", "(c+ab)*", "(a+b)*ac~", "a(a+b)*b(a+b)*a",
                         "(c*ac*bc*)*", "b*((ab*)(ab*)(ab*))*"}) {
    check_membership(re, 6);
    Dfa d = compile(re);
    CHECK(d.states == residual_count(re, d.alphabet, 4, 4));
  }
}

TEST_CASE("automaton operations agree with brute force") {
  Alphabet sigma = Alphabet::from_chars("abc");
  Dfa      l1    = compile("(a+b)*ac~", sigma);
  Dfa      l2    = compile("(c+ab)*", sigma);
  Word     u     = sigma.parse("ab");
  Dfa      lq    = left_quotient(l1, u);
  Dfa      rq    = right_quotient(l2, u);
  Dfa      in    = intersect(l1, l2);
  Dfa      un    = unite(l1, l2);
  Dfa      co    = complement(l1);
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_word(3, n, [&](Word const& w) {
      CHECK(lq.accepts(w) == l1.accepts(concat(u, w)));
      CHECK(rq.accepts(w) == l2.accepts(concat(w, u)));
      CHECK(in.accepts(w) == (l1.accepts(w) && l2.accepts(w)));
      CHECK(un.accepts(w) == (l1.accepts(w) || l2.accepts(w)));
      CHECK(co.accepts(w) == !l1.accepts(w));
      return true;
    });
  }
  Alphabet gamma{"x", "y"};
  std::vector<Word> images{sigma.parse("ab"), sigma.parse("c")};
  Dfa inv = inverse_morphism(l2, gamma, images);
  CHECK(equivalent(inv, universal(gamma)));
  Dfa wide = with_alphabet(compile("a*"), sigma);
  CHECK(wide.accepts("aaa"));
  CHECK_FALSE(wide.accepts("ab"));
  auto dw = distinguishing_word(l1, l2);
  REQUIRE(dw);
  CHECK(l1.accepts(*dw) != l2.accepts(*dw));
}

TEST_CASE("syntactic stamps") {
  auto full = syntactic_stamp(compile("(a+b)*"));
  CHECK(full.stamp.target().size() == 1);
  CHECK(full.accept == std::vector<Element>{0});

  auto a = syntactic_stamp("a(a+b)*");
  auto const& m = a.stamp.target();
  CHECK(m.size() == 3);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      if (x != m.identity()) CHECK(m(x, y) == x);
    }
  }
  // The 7-element syntactic monoid of (c*ac*bc*)* keeps the empty word apart
  // from c; its nonempty-word image is B2.
  auto b = syntactic_stamp("(c*ac*bc*)*");
  CHECK(b.stamp.target().size() == 7);
  CHECK(b2_monoid().size() == 6);
  CHECK(isomorphic(b2_monoid(), syntactic_stamp("(c+ab)*").stamp.target()));

  for (char const* re : {"(a+b)*ac~", "(c+ab)*", "a(a+b)*b(a+b)*a"}) {
    auto ss = syntactic_stamp(re);
    CHECK(oracle::laws_hold(ss.stamp.target()));
    for (std::size_t n = 0; n <= 8; ++n) {
      for_each_word(ss.stamp.alphabet.size(), n, [&](Word const& w) {
        CHECK(stamp_recognizes(ss.stamp, ss.accept, w) == ss.dfa.accepts(w));
        return true;
      });
    }
  }
  auto tail = syntactic_stamp("(a+b)*ac~");
  CHECK(stamp_recognizes(tail.stamp, tail.accept, tail.stamp.alphabet.parse("aacc")));
  CHECK_FALSE(stamp_recognizes(tail.stamp, tail.accept, tail.stamp.alphabet.parse("aca")));
  CHECK(stamp_recognizes(tail.stamp, {tail.stamp.target().identity()}, Word{}));
  CHECK_THROWS_AS(tail.stamp.eval("abd"), InputError);
  Limits tight;
  tight.syntactic_monoid_cap = 4;
  CHECK_THROWS_AS(syntactic_stamp("(c+ab)*", tight), ResourceError);
}

TEST_CASE("stability index and stable stamps") {
  CHECK(stability_index(syntactic_stamp("a(a+b)*").stamp).s == 1);
  CHECK(stability_index(syntactic_stamp("(a+b)*ac~").stamp).s == 2);
  CHECK(stability_index(syntactic_stamp("a(a+b)*b(a+b)*a").stamp).s == 3);

  for (char const* re : {"a(a+b)*", "(a+b)*ac~", "a(a+b)*b(a+b)*a", "(aa)*", "(c+ab)*"}) {
    auto phi = syntactic_stamp(re).stamp;
    auto an  = stability_index(phi);
    auto const& m = phi.target();
    // Oracle: image sets of all words of length k, by enumeration.
    auto image = [&](std::size_t k) {
      std::set<Element> out;
      for_each_word(phi.alphabet.size(), k, [&](Word const& w) {
        out.insert(phi.eval(w));
        return true;
      });
      return out;
    };
    CHECK(image(an.s) == image(2 * an.s));
    for (std::size_t k = 1; k < an.s; ++k) CHECK(image(k) != image(2 * k));
    CHECK(image(an.s) == std::set<Element>(an.stable_semigroup.begin(),
                                           an.stable_semigroup.end()));
    for (Element x : an.stable_semigroup) {
      for (Element y : an.stable_semigroup) {
        CHECK(std::count(an.stable_semigroup.begin(), an.stable_semigroup.end(),
                         m(x, y)) == 1);
      }
    }
  }

  auto tail = stable_stamp(syntactic_stamp("(a+b)*ac~").stamp);
  CHECK(tail.stamp.alphabet.size() == 9);
  CHECK(tail.stamp.alphabet.symbol(0) == "aa");
  CHECK(tail.stamp.target().size() == syntactic_stamp("(a+b)*ac~").stamp.target().size());
  auto three = stable_stamp(syntactic_stamp("a(a+b)*b(a+b)*a").stamp);
  CHECK(three.stamp.alphabet.size() == 8);
  CHECK(three.s == 3);
  auto one = stable_stamp(syntactic_stamp("a(a+b)*").stamp);
  CHECK(one.stamp.alphabet.size() == 2);
  CHECK(stability_index(one.stamp).s == 1);
  Limits tight;
  tight.derived_alphabet_cap = 4;
  CHECK_THROWS_AS(stable_stamp(syntactic_stamp("(a+b)*ac~").stamp, tight), ResourceError);
}

TEST_CASE("context quotient") {
  auto trivial = context_quotient(syntactic_stamp("a(a+b)*").stamp);
  CHECK(trivial.monoid.size() == 1);
  auto phi = syntactic_stamp("a(a+b)*b(a+b)*a").stamp;
  auto q   = context_quotient(phi);
  CHECK(isomorphic(q.monoid, syntactic_stamp("(a+b)*b(a+b)*").stamp.target()));
  auto z = context_quotient(evaluation_stamp(FiniteMonoid::cyclic_group(3)));
  CHECK(z.monoid.size() == 3);

  for (char const* re : {"a(a+b)*", "(a+b)*ac~", "a(a+b)*b(a+b)*a", "(c+ab)*", "(aa)*b"}) {
    auto st = syntactic_stamp(re).stamp;
    auto cq = context_quotient(st);
    auto const& m = st.target();
    auto const& p = cq.projection;
    CHECK(oracle::laws_hold(cq.monoid));
    // Congruence, and the morphism law for the projection.
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = 0; y < m.size(); ++y) {
        CHECK(p[m(x, y)] == cq.monoid(p[x], p[y]));
        if (p[x] != p[y]) continue;
        for (Element n = 0; n < m.size(); ++n) {
          CHECK(p[m(x, n)] == p[m(y, n)]);
          CHECK(p[m(n, x)] == p[m(n, y)]);
        }
      }
    }
    // Defining implication over words: same class, same value in every
    // context of length s.
    auto mu = quotient_stamp(st, cq);
    std::vector<Word> mids;
    for (std::size_t n = 0; n <= cq.s + 2 && n <= 4; ++n) {
      for_each_word(st.alphabet.size(), n, [&](Word const& w) {
        mids.push_back(w);
        return true;
      });
    }
    std::vector<Word> ctx;
    for_each_word(st.alphabet.size(), cq.s, [&](Word const& w) {
      ctx.push_back(w);
      return true;
    });
    for (auto const& u : mids) {
      for (auto const& v : mids) {
        if (mu.eval(u) != mu.eval(v)) continue;
        for (auto const& x : ctx) {
          for (auto const& y : ctx) {
            CHECK(st.eval(concat(concat(x, u), y)) == st.eval(concat(concat(x, v), y)));
          }
        }
      }
    }
  }
}

TEST_CASE("essentially-V verdicts and certificates") {
  CHECK(is_essentially_v(syntactic_stamp("a(a+b)*").stamp, VarietyId::Trivial).holds);
  auto phi = syntactic_stamp("a(a+b)*b(a+b)*a").stamp;
  auto v   = is_essentially_v(phi, VarietyId::Trivial);
  CHECK_FALSE(v.holds);
  REQUIRE(v.certificate);
  // Certificate check: contexts of length >= s separate u and v.
  auto const& c = *v.certificate;
  CHECK(c.x.size() >= v.quotient.s);
  CHECK(c.y.size() >= v.quotient.s);
  CHECK(phi.eval(concat(concat(c.x, c.u), c.y)) != phi.eval(concat(concat(c.x, c.v), c.y)));
  // The text's own pair: (aaa) a (aaa) against (aaa) b (aaa).
  CHECK(phi.eval("aaaaaaa") != phi.eval("aaabaaa"));

  auto tail = stable_stamp(syntactic_stamp("(a+b)*ac~").stamp).stamp;
  auto j    = is_essentially_v(tail, VarietyId::J);
  CHECK_FALSE(j.holds);
  REQUIRE(j.certificate);
  auto const& jc = *j.certificate;
  CHECK(tail.eval(concat(concat(jc.x, jc.u), jc.y)) != tail.eval(concat(concat(jc.x, jc.v), jc.y)));

  std::vector<VarietyId> chain{VarietyId::Trivial, VarietyId::J, VarietyId::DA,
                               VarietyId::Aperiodic};
  for (char const* re : {"a(a+b)*", "(a+b)*ac~", "a(a+b)*b(a+b)*a", "(c+ab)*",
                         "(aa)*", "(a+b)*b(a+b)*"}) {
    auto st = syntactic_stamp(re).stamp;
    bool prev = false;
    for (VarietyId id : chain) {
      bool now = is_essentially_v(st, id).holds;
      if (prev) CHECK(now);
      prev = now;
      if (!now) {
        auto r = is_essentially_v(st, id);
        REQUIRE(r.certificate);
        auto const& ce = *r.certificate;
        CHECK(st.eval(concat(concat(ce.x, ce.u), ce.y)) != st.eval(concat(concat(ce.x, ce.v), ce.y)));
      }
    }
    if (is_essentially_v(st, VarietyId::Trivial).holds) {
      CHECK(is_essentially_v(st, VarietyId::Com).holds);
    }
  }
}

TEST_CASE("quasi and quasi-essential membership") {
  Stamp triv(Alphabet{"a"}, share(FiniteMonoid::trivial()), {0});
  for (VarietyId id : all_varieties()) {
    CHECK(is_quasi_v(triv, id));
    CHECK(is_quasi_essentially_v(triv, id).holds);
  }
  auto tail = syntactic_stamp("(a+b)*ac~").stamp;
  CHECK_FALSE(is_quasi_v(tail, VarietyId::J));
  CHECK_FALSE(is_quasi_essentially_v(tail, VarietyId::J).holds);
  CHECK(is_quasi_v(tail, VarietyId::DA));

  for (char const* re : {"a(a+b)*", "(c+ab)*", "(a+b)*b(a+b)*"}) {
    auto st = syntactic_stamp(re).stamp;
    if (stability_index(st).s != 1) continue;
    for (VarietyId id : all_varieties()) {
      CHECK(is_quasi_v(st, id) == satisfies_variety(st.target(), id));
      CHECK(is_quasi_essentially_v(st, id).holds == is_essentially_v(st, id).holds);
    }
  }
}

TEST_CASE("evaluation stamps") {
  auto t = evaluation_stamp(FiniteMonoid::trivial());
  CHECK(t.alphabet.size() == 1);
  auto z = evaluation_stamp(FiniteMonoid::cyclic_group(2));
  CHECK(z.alphabet.size() == 2);
  CHECK(stability_index(z).s == 1);
  auto b = evaluation_stamp(b2_monoid());
  CHECK(b.alphabet.size() == 6);
  for (Letter x = 0; x < 6; ++x) {
    for (Letter y = 0; y < 6; ++y) CHECK(b.eval(Word{x, y}) == b2_monoid()(x, y));
  }
}

TEST_CASE("equational conditions for Com") {
  Stamp triv(Alphabet{"a"}, share(FiniteMonoid::trivial()), {0});
  CHECK(check_ecom_condition(triv));
  CHECK(check_com_program_equations(triv));
  CHECK(check_ecom_condition(evaluation_stamp(FiniteMonoid::cyclic_group(2))));
  auto bv = ecom_violation(evaluation_stamp(b2_monoid()));
  REQUIRE(bv);
  CHECK(bv->letters.size() == 4);
  for (std::size_t n : {2, 3, 4}) {
    CHECK(check_com_program_equations(evaluation_stamp(FiniteMonoid::cyclic_group(n))));
  }
  CHECK(check_com_program_equations(evaluation_stamp(FiniteMonoid::u1())));
  CHECK_FALSE(check_com_program_equations(evaluation_stamp(left_zero_plus_identity())));
  CHECK_THROWS_AS(check_ecom_condition(syntactic_stamp("(a+b)*ac~").stamp), InputError);

  std::vector<Stamp> stamps{evaluation_stamp(FiniteMonoid::cyclic_group(3)),
                            evaluation_stamp(FiniteMonoid::u1()),
                            evaluation_stamp(b2_monoid()),
                            evaluation_stamp(left_zero_plus_identity()),
                            syntactic_stamp("a(a+b)*").stamp,
                            syntactic_stamp("(c+ab)*").stamp};
  for (auto const& st : stamps) {
    if (stability_index(st).s != 1) continue;
    if (check_ecom_condition(st)) CHECK(is_essentially_v(st, VarietyId::Com).holds);
  }
}
