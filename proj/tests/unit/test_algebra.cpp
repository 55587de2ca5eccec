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

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "progmon/algebra/division.hpp"
#include "progmon/algebra/green.hpp"
#include "progmon/algebra/variety.hpp"
#include "progmon/reglang/stamp.hpp"
#include "progmon/reglang/witnesses.hpp"

using namespace progmon;

namespace {

  Element named(FiniteMonoid const& m, std::string const& n) {
    auto it = std::find(m.names().begin(), m.names().end(), n);
    REQUIRE(it != m.names().end());
    return static_cast<Element>(it - m.names().begin());
  }

  FiniteMonoid syn(char const* re) {
    return syntactic_stamp(re).stamp.target();
  }

  // Small monoids for the property sweeps.
  std::vector<FiniteMonoid> zoo() {
    std::vector<FiniteMonoid> out{FiniteMonoid::trivial(),
                                  FiniteMonoid::cyclic_group(2),
                                  FiniteMonoid::cyclic_group(3),
                                  FiniteMonoid::u1(),
                                  b2_monoid(),
                                  u_monoid()};
    for (char const* re : {"a(a+b)*", "(a+b)*b(a+b)*", "a(a+b)*b", "(a+b)*ac~",
                           "(c+ab)*", "(aa)*", "a*b*", "(ab)*", "a(a+b)*b(a+b)*a",
                           "b*((ab*)(ab*))*"}) {
      out.push_back(syn(re));
    }
    return out;
  }

}  // namespace

TEST_CASE("multiply follows the table and the identity laws") {
  FiniteMonoid const& b2 = b2_monoid();
  for (Element x = 0; x < b2.size(); ++x) {
    CHECK(multiply(b2, b2.identity(), x) == x);
    CHECK(multiply(b2, x, b2.identity()) == x);
  }
  CHECK(multiply(b2, named(b2, "a"), named(b2, "b")) == named(b2, "ab"));
  CHECK_THROWS_AS(multiply(b2, 99, 0), InputError);
}

TEST_CASE("table validation rejects broken monoids") {
  CHECK_THROWS_AS(FiniteMonoid({{0, 1}, {1, 2}}, 0), InputError);
  CHECK_THROWS_AS(FiniteMonoid({{0, 1}, {1, 1}}, 1), InputError);
  // Not associative: a 2x2 table where 1 acts as identity fails on 0.
  CHECK_THROWS_AS(FiniteMonoid({{1, 0, 2}, {0, 1, 2}, {2, 2, 0}}, 1), InputError);
  CHECK_NOTHROW(FiniteMonoid({{0, 1}, {1, 0}}, 0));
}

TEST_CASE("idempotent power") {
  CHECK(idempotent_power(FiniteMonoid::trivial()) == 1);
  CHECK(idempotent_power(FiniteMonoid::cyclic_group(3)) == 3);
  auto m = syn("a(a+b)*");
  CHECK(m.size() == 3);
  CHECK(idempotent_power(m) == 1);
  for (auto const& z : zoo()) CHECK(idempotent_power(z) == oracle::omega(z));
}

TEST_CASE("variety membership on named monoids") {
  CHECK(satisfies_variety(FiniteMonoid::trivial(), VarietyId::DA));
  CHECK_FALSE(satisfies_variety(b2_monoid(), VarietyId::DA));
  CHECK(satisfies_variety(b2_monoid(), VarietyId::Aperiodic));
  CHECK(satisfies_variety(syn("(a+b)*b(a+b)*"), VarietyId::J));
  CHECK(satisfies_variety(FiniteMonoid::cyclic_group(4), VarietyId::Com));
  CHECK_FALSE(satisfies_variety(FiniteMonoid::cyclic_group(2), VarietyId::Aperiodic));
  CHECK_FALSE(satisfies_variety(FiniteMonoid::u1(), VarietyId::Trivial));
}

TEST_CASE("variety violations expand to words that evaluate to the sides") {
  auto ss = syntactic_stamp("(c*ac*bc*)*");
  auto v  = find_violation(ss.stamp.target(), VarietyId::DA);
  REQUIRE(v);
  auto reps = representatives(ss.stamp);
  std::vector<Word> words;
  for (Element e : v->assignment) words.push_back(reps[e]);
  std::size_t w = idempotent_power(ss.stamp.target());
  CHECK(ss.stamp.eval(expand(v->identity->lhs, words, w)) == v->lhs);
  CHECK(ss.stamp.eval(expand(v->identity->rhs, words, w)) == v->rhs);
}

TEST_CASE("Green preorders match the definitions") {
  for (auto const& m : zoo()) {
    GreenData g = green(m);
    for (Element u = 0; u < m.size(); ++u) {
      for (Element v = 0; v < m.size(); ++v) {
        CHECK(g.leq_r[u][v] == oracle::leq_r(m, u, v));
        CHECK(g.leq_l[u][v] == oracle::leq_l(m, u, v));
        CHECK(g.leq_j[u][v] == oracle::leq_j(m, u, v));
        CHECK(g.sim_h[u][v] == (g.sim_r(u, v) && g.sim_l(u, v)));
      }
      for (Element r = 0; r < m.size(); ++r) CHECK(g.leq_r[u][m(u, r)]);
    }
  }
}

TEST_CASE("Green examples") {
  auto t = green(FiniteMonoid::trivial());
  CHECK(t.leq_r[0][0]);
  CHECK(t.sim_h[0][0]);
  auto z = FiniteMonoid::cyclic_group(5);
  auto gz = green(z);
  for (Element u = 0; u < 5; ++u) {
    for (Element v = 0; v < 5; ++v) CHECK((gz.sim_r(u, v) && gz.sim_l(u, v) && gz.sim_j(u, v)));
  }
  auto const& b2 = b2_monoid();
  auto        g  = green(b2);
  Element one = b2.identity(), a = named(b2, "a"), zero = named(b2, "aa");
  CHECK(g.leq_j[one][a]);
  CHECK_FALSE(g.leq_j[a][one]);
  CHECK(g.leq_j[a][zero]);
  CHECK_FALSE(g.leq_j[zero][a]);
  CHECK(g.sim_j(a, named(b2, "b")));
  CHECK(g.sim_j(a, named(b2, "ab")));
  CHECK(eggbox_dot(b2).find("digraph") != std::string::npos);
}

TEST_CASE("R-bad and L-bad") {
  for (auto const& m : zoo()) {
    auto g = green(m);
    for (Element u = 0; u < m.size(); ++u) {
      CHECK_FALSE(is_r_bad(m, g, u, m.identity()));
      CHECK_FALSE(is_l_bad(m, g, u, m.identity()));
      for (Element r = 0; r < m.size(); ++r) {
        bool same_r = oracle::leq_r(m, m(u, r), u);
        CHECK(is_r_bad(m, g, u, r) == !same_r);
        bool same_l = oracle::leq_l(m, m(r, u), u);
        CHECK(is_l_bad(m, g, u, r) == !same_l);
      }
    }
  }
  auto z = FiniteMonoid::cyclic_group(3);
  auto gz = green(z);
  for (Element u = 0; u < 3; ++u) {
    for (Element r = 0; r < 3; ++r) CHECK_FALSE(is_r_bad(z, gz, u, r));
  }
  auto m = syn("a(a+b)*");
  auto gm = green(m);
  CHECK(is_r_bad(m, gm, m.identity(), named(m, "a")));
}

TEST_CASE("direct products") {
  auto b2 = b2_monoid();
  CHECK(isomorphic(direct_product(FiniteMonoid::trivial(), b2), b2));
  auto z2 = FiniteMonoid::cyclic_group(2);
  auto p  = direct_product(z2, z2);
  CHECK(p.size() == 4);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      CHECK(p(a, b) == ((a / 2 + b / 2) % 2) * 2 + (a % 2 + b % 2) % 2);
    }
  }
  auto big = direct_product(b2, z2);
  CHECK(big.size() == 12);
  CHECK(oracle::laws_hold(big));
  CHECK_FALSE(satisfies_variety(big, VarietyId::DA));
  Limits tight;
  tight.product_cap = 10;
  CHECK_THROWS_AS(direct_product(b2, z2, tight), ResourceError);
}

TEST_CASE("generated submonoids") {
  auto b2 = b2_monoid();
  CHECK(generated_submonoid(b2, {}).monoid.size() == 1);
  std::vector<Element> all(b2.size());
  for (Element i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(isomorphic(generated_submonoid(b2, all).monoid, b2));
  auto z6  = FiniteMonoid::cyclic_group(6);
  auto sub = generated_submonoid(z6, {2});
  CHECK(sub.embedding == std::vector<Element>{0, 2, 4});
  CHECK(sub.monoid.identity() == 0);
  CHECK(oracle::laws_hold(sub.monoid));
}

TEST_CASE("isomorphism finder returns a bijective morphism") {
  auto a = syn("(c+ab)*");
  auto b = b2_monoid();
  auto f = find_isomorphism(a, b);
  REQUIRE(f);
  CHECK(is_morphism(a, b, *f));
  CHECK(std::set<Element>(f->begin(), f->end()).size() == a.size());
  CHECK_FALSE(isomorphic(FiniteMonoid::cyclic_group(4),
                         direct_product(FiniteMonoid::cyclic_group(2),
                                        FiniteMonoid::cyclic_group(2))));
}

TEST_CASE("division") {
  auto b2 = b2_monoid();
  CHECK(divides(FiniteMonoid::trivial(), b2));
  CHECK(divides(b2, b2));
  CHECK_FALSE(divides(FiniteMonoid::cyclic_group(2), b2));
  CHECK(divides(FiniteMonoid::cyclic_group(2), FiniteMonoid::cyclic_group(4)));
  CHECK(divides(FiniteMonoid::u1(), b2));
  Limits tight;
  tight.division_cap = 4;
  CHECK_THROWS_AS(divides(FiniteMonoid::u1(), b2, tight), ResourceError);
}

TEST_CASE("division agrees with the exhaustive oracle on small monoids") {
  std::vector<FiniteMonoid> small;
  for (auto const& m : zoo()) {
    if (m.size() <= 6) small.push_back(m);
  }
  for (auto const& s : small) {
    for (auto const& t : small) {
      if (t.size() > 4) continue;  // keeps the oracle's |T|^|S| loop small
      CHECK(divides(t, s) == oracle::divides(t, s));
    }
  }
}

TEST_CASE("DA obstructions") {
  CHECK(find_da_obstruction(b2_monoid()).kind == DaObstruction::Kind::DividedByB2);
  CHECK(find_da_obstruction(u_monoid()).kind == DaObstruction::Kind::DividedByU);
  auto z2 = FiniteMonoid::cyclic_group(2);
  auto o  = find_da_obstruction(z2);
  CHECK(o.kind == DaObstruction::Kind::NotAperiodic);
  CHECK(o.x == 1);
  CHECK(o.k == 2);
  CHECK_THROWS_AS(find_da_obstruction(FiniteMonoid::u1()), InputError);
  CHECK(u_monoid().size() == 7);
  CHECK(b2_monoid().size() == 6);
  CHECK(satisfies_variety(u_monoid(), VarietyId::Aperiodic));
  CHECK_FALSE(isomorphic(u_monoid(), b2_monoid()));
}

TEST_CASE("structural lemmas hold on every zoo monoid") {
  for (auto const& m : zoo()) {
    CHECK(oracle::laws_hold(m));
    auto g = green(m);
    bool da = satisfies_variety(m, VarietyId::DA);
    bool ap = satisfies_variety(m, VarietyId::Aperiodic);
    if (satisfies_variety(m, VarietyId::J)) CHECK(da);
    if (da) CHECK(ap);
    for (Element u = 0; u < m.size(); ++u) {
      for (Element v = 0; v < m.size(); ++v) {
        if (g.leq_r[v][u] && g.sim_j(u, v)) CHECK(g.sim_r(u, v));
        if (g.leq_l[v][u] && g.sim_j(u, v)) CHECK(g.sim_l(u, v));
        if (ap && g.sim_h[u][v]) CHECK(u == v);
        if (!da || !g.sim_r(u, v)) continue;
        for (Element r = 0; r < m.size(); ++r) {
          if (g.sim_r(m(u, r), u)) CHECK(g.sim_r(m(v, r), u));
        }
      }
    }
  }
}
