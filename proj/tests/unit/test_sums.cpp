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

#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"
#include "progmon/algebra/variety.hpp"
#include "progmon/programs/pk.hpp"
#include "progmon/sums/closure.hpp"
#include "progmon/sums/compress.hpp"

using namespace progmon;

namespace {

  // Membership straight from the definition: try every marker position.
  bool naive_member(SumExpr const& e, Word const& w) {
    if (e.kind() == SumExpr::Kind::Star) {
      for (Letter a : w) {
        if (std::find(e.letters().begin(), e.letters().end(), a) == e.letters().end()) {
          return false;
        }
      }
      return true;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == e.marker() && naive_member(e.left(), Word(w.begin(), w.begin() + i))
          && naive_member(e.right(), Word(w.begin() + i + 1, w.end()))) {
        return true;
      }
    }
    return false;
  }

  bool naive_union(std::vector<SumExpr> const& es, Word const& w) {
    return std::any_of(es.begin(), es.end(), [&](auto const& e) { return naive_member(e, w); });
  }

  SumExpr random_sum(std::mt19937_64& rng, std::vector<Letter> allowed, int depth) {
    std::uniform_int_distribution<int> coin(0, 2);
    if (depth == 0 || allowed.empty() || coin(rng) == 0) {
      std::vector<Letter> pick;
      for (Letter a : allowed) {
        if (coin(rng) != 0) pick.push_back(a);
      }
      return SumExpr::star(pick);
    }
    Letter a = allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
    std::vector<Letter> without;
    for (Letter b : allowed) {
      if (b != a) without.push_back(b);
    }
    Avoid side = coin(rng) == 0 ? Avoid::Right : Avoid::Left;
    SumExpr l = random_sum(rng, side == Avoid::Left ? without : allowed, depth - 1);
    SumExpr r = random_sum(rng, side == Avoid::Right ? without : allowed, depth - 1);
    return SumExpr::split(l, a, r, side);
  }

  std::vector<Word> words_upto(std::size_t k, std::size_t max_len) {
    std::vector<Word> out;
    for (std::size_t n = 0; n <= max_len; ++n) {
      for_each_word(k, n, [&](Word const& w) {
        out.push_back(w);
        return true;
      });
    }
    return out;
  }

  // The prose definition of Z_k over Y_k (letters 2(l-1) and 2(l-1)+1).
  bool naive_zk(std::size_t k, Word const& w) {
    if (k == 0) return w.empty();
    Letter const top = top_letter(k), bot = bottom_letter(k);
    auto first = std::find(w.begin(), w.end(), top);
    if (first == w.end()) return false;
    if (std::find(w.begin(), first, bot) != first) return false;
    auto end = std::find_if(first + 1, w.end(), [&](Letter a) { return a == top || a == bot; });
    return naive_zk(k - 1, Word(first + 1, end));
  }

}  // namespace

TEST_CASE("SUM expressions: construction, text and levels") {
  Alphabet sigma = Alphabet::from_chars("ab");
  auto ab = SumExpr::star({0, 1, 1});
  CHECK(ab.letters() == std::vector<Letter>{0, 1});
  CHECK(sum_member(ab, sigma, "abba"));
  CHECK(ab.level() == 0);
  auto bab = SumExpr::split(SumExpr::star({1}), 0, ab, Avoid::Left);
  CHECK(sum_member(bab, sigma, "ba"));
  CHECK_FALSE(sum_member(bab, sigma, "bb"));
  CHECK(bab.level() == 1);
  CHECK(to_string(bab, sigma) == "SPLIT(STAR{b}, 'a', STAR{a,b}, L)");
  CHECK(parse_sum("SPLIT(STAR{b}, 'a', STAR{a,b}, L)", sigma) == bab);
  CHECK(parse_sum("SPLIT(STAR{b},a,STAR{a,b},L)", sigma) == bab);
  CHECK(parse_sum("STAR{}", sigma).letters().empty());
  CHECK_THROWS_AS(SumExpr::split(ab, 0, ab, Avoid::Left), InputError);
  CHECK_THROWS_AS(SumExpr::split(ab, 0, ab, Avoid::Right), InputError);
  CHECK_THROWS_AS(parse_sum("SPLIT(STAR{a}, 'a', STAR{b}, L)", sigma), InputError);
  CHECK_THROWS_AS(parse_sum("STAR{c}", sigma), InputError);
  CHECK_THROWS_AS(parse_sum("STAR{a} x", sigma), InputError);
  CHECK_THROWS_AS(parse_sum("SPLIT(STAR{b}, 'a', STAR{a}, X)", sigma), InputError);
  CHECK_THROWS_AS(ab.marker(), InputError);

  auto y1 = zk_alphabet(1);
  CHECK(sum_member(zk_expr(1), y1, "T1"));
  CHECK(to_string(zk_expr(1), y1) == "SPLIT(STAR{}, 'T1', STAR{B1,T1}, L)");
  auto y2 = zk_alphabet(2);
  CHECK(sum_member(zk_expr(2), y2, "T2 T1"));
  CHECK(zk_expr(2).level() == 2);
  CHECK(zk_expr(3).level() == 3);
  CHECK_THROWS_AS(zk_expr(0), InputError);

  std::mt19937_64 rng(3);
  Alphabet abc = Alphabet::from_chars("abc");
  for (int t = 0; t < 60; ++t) {
    SumExpr e = random_sum(rng, {0, 1, 2}, 3);
    CHECK(parse_sum(to_string(e, abc), abc) == e);
  }
}

TEST_CASE("SUM membership agrees with the definition") {
  std::mt19937_64 rng(17);
  Alphabet abc = Alphabet::from_chars("abc");
  auto words = words_upto(3, 6);
  for (int t = 0; t < 60; ++t) {
    SumExpr e   = random_sum(rng, {0, 1, 2}, 3);
    Dfa     d   = sum_dfa(e, abc);
    Regex   rex = to_regex(e, abc);
    for (auto const& w : words) {
      bool const expect = naive_member(e, w);
      CHECK(d.accepts(w) == expect);
      CHECK(sum_matches(e, w) == expect);
    }
    for (auto const& w : words_upto(3, 4)) {
      CHECK(oracle::regex_accepts(rex, abc, w) == naive_member(e, w));
    }
  }
  auto y3 = zk_alphabet(3);
  auto z3 = zk_expr(3);
  for (auto const& w : words_upto(6, 5)) {
    CHECK(sum_matches(z3, w) == naive_zk(3, w));
  }
  auto z2 = zk_expr(2);
  for (auto const& w : words_upto(4, 6)) {
    CHECK(sum_matches(z2, w) == naive_zk(2, w));
  }
}

TEST_CASE("quotients of SUM expressions") {
  Alphabet ab = Alphabet::from_chars("ab");
  auto star_ab = SumExpr::star({0, 1});
  CHECK(sum_quotient(star_ab, ab.parse("ab"), QuotientSide::Left) == std::vector{star_ab});
  CHECK(sum_quotient(SumExpr::star({0}), ab.parse("ab"), QuotientSide::Right).empty());
  auto bab = SumExpr::split(SumExpr::star({1}), 0, star_ab, Avoid::Left);
  CHECK(sum_quotient(bab, ab.parse("b"), QuotientSide::Left) == std::vector{bab});

  std::mt19937_64 rng(23);
  auto words = words_upto(3, 5);
  for (int t = 0; t < 80; ++t) {
    SumExpr e = random_sum(rng, {0, 1, 2}, 3);
    Word    u = gen::random_word(rng, std::uniform_int_distribution<std::size_t>(0, 3)(rng), 3);
    for (auto side : {QuotientSide::Left, QuotientSide::Right}) {
      auto q = sum_quotient(e, u, side);
      for (auto const& x : q) CHECK(x.level() <= e.level());
      for (auto const& w : words) {
        Word full = side == QuotientSide::Left ? concat(u, w) : concat(w, u);
        CHECK(naive_union(q, w) == naive_member(e, full));
      }
    }
  }
}

TEST_CASE("inverse morphisms of SUM expressions") {
  Alphabet ab = Alphabet::from_chars("ab");
  auto a_star = SumExpr::star({0});
  auto pre = sum_inverse_morphism(a_star, {ab.parse("a"), ab.parse("ab"), ab.parse("")});
  REQUIRE(pre.size() == 1);
  CHECK(pre[0] == SumExpr::star({0, 2}));

  std::mt19937_64 rng(29);
  for (int t = 0; t < 80; ++t) {
    SumExpr e = random_sum(rng, {0, 1, 2}, 3);
    std::size_t gamma = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<Word> images;
    for (std::size_t g = 0; g < gamma; ++g) {
      images.push_back(gen::random_word(rng, std::uniform_int_distribution<std::size_t>(0, 3)(rng), 3));
    }
    auto inv = sum_inverse_morphism(e, images);
    for (auto const& x : inv) CHECK(x.level() <= e.level());
    for (auto const& w : words_upto(gamma, 5)) {
      Word img;
      for (Letter g : w) img = concat(img, images[g]);
      CHECK(naive_union(inv, w) == naive_member(e, img));
    }
    auto erased = sum_inverse_morphism(e, std::vector<Word>(2));
    for (auto const& x : erased) CHECK(x.level() == 0);
    auto same = sum_inverse_morphism(e, {Word{0}, Word{1}, Word{2}});
    for (auto const& w : words_upto(3, 5)) CHECK(naive_union(same, w) == naive_member(e, w));
  }
}

TEST_CASE("Z_k and M_k") {
  for (std::size_t k = 1; k <= 3; ++k) {
    MkFamily f = mk_stamp(k);
    CHECK(satisfies_variety(f.syntactic.stamp.target(), VarietyId::DA));
    CHECK(oracle::laws_hold(f.syntactic.stamp.target()));
    CHECK(equivalent(f.syntactic.dfa, sum_dfa(f.z, f.letters)));
    Element top = f.syntactic.stamp.eval(f.letters.parse("T1"));
    CHECK((k == 1) == std::binary_search(f.syntactic.accept.begin(), f.syntactic.accept.end(), top));
  }
  CHECK(mk_stamp(1).syntactic.stamp.target().size() == 3);
  Limits tiny;
  tiny.syntactic_monoid_cap = 4;
  CHECK_THROWS_AS(mk_stamp(2, tiny), ResourceError);
}

TEST_CASE("k-sets and their languages") {
  Alphabet const& bin = binary_alphabet();
  KSet s{3, 1, {{2}}};
  Dfa  d = k_language(s);
  std::vector<std::string> acc;
  for_each_word(2, 3, [&](Word const& w) {
    if (d.accepts(w)) acc.push_back(bin.format(w));
    return true;
  });
  CHECK(acc == std::vector<std::string>{"010", "011"});
  CHECK_THROWS_AS((KSet{3, 2, {{1, 1}}}.validate()), InputError);
  CHECK_THROWS_AS((KSet{3, 2, {{1, 4}}}.validate()), InputError);
  CHECK_THROWS_AS((KSet{3, 2, {{1}}}.validate()), InputError);
  CHECK(KSet{4, 2, {{1, 3}, {1, 4}, {2, 3}}}.restrict(1).tuples
        == std::set<std::vector<std::size_t>>{{3}, {4}});

  std::mt19937_64 rng(31);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n = 0; n <= 7; ++n) {
      KSet  r   = random_kset(rng, n, k, 0.4);
      Dfa   dr  = k_language(r);
      for_each_word(2, n, [&](Word const& w) {
        std::vector<std::size_t> ones;
        for (std::size_t i = 0; i < n; ++i) if (w[i] == 1) ones.push_back(i + 1);
        bool expect = ones.size() >= k
                      && r.tuples.count(std::vector<std::size_t>(ones.begin(), ones.begin() + k));
        CHECK(in_k_language(r, w) == expect);
        CHECK(dr.accepts(w) == expect);
        return true;
      });
      CHECK_FALSE(dr.accepts(Word(n + 1, 1)));
    }
  }
}

TEST_CASE("counting bound") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t l = 0; l <= 5; ++l) {
      boost::multiprecision::cpp_int expect = 2;
      for (std::size_t i = 0; i < l; ++i) expect *= n;
      CHECK(count_bound(1, n, l) == expect);
    }
  }
  CHECK(count_bound(2, 3, 2) == 9216);
  CHECK(count_bound(3, 10, 20).str().size() > 30);

  // All programs over monoids of size i with at most l instructions, n = 2.
  auto languages = [](std::vector<FiniteMonoid> const& ms, std::size_t n, std::size_t l) {
    std::set<std::vector<bool>> langs;
    for (auto const& m : ms) {
      auto mp = share(m);
      std::vector<Instruction> options;
      for (std::size_t p = 1; p <= n; ++p)
        for (Element x = 0; x < m.size(); ++x)
          for (Element y = 0; y < m.size(); ++y) options.push_back({p, {x, y}});
      std::function<void(std::vector<Instruction>&)> rec = [&](std::vector<Instruction>& ins) {
        Program prog(n, binary_alphabet(), mp, ins);
        for (std::size_t fmask = 0; fmask < (1U << m.size()); ++fmask) {
          std::vector<bool> lang;
          for_each_word(2, n, [&](Word const& w) {
            lang.push_back((fmask >> eval(prog, w)) & 1U);
            return true;
          });
          langs.insert(lang);
        }
        if (ins.size() == l) return;
        for (auto const& o : options) {
          ins.push_back(o);
          rec(ins);
          ins.pop_back();
        }
      };
      std::vector<Instruction> ins;
      rec(ins);
    }
    return langs.size();
  };
  std::size_t trivial = languages({FiniteMonoid::trivial()}, 2, 1);
  CHECK(trivial == 2);
  CHECK(trivial <= count_bound(1, 2, 1));
  std::size_t two = languages({FiniteMonoid::u1(), FiniteMonoid::cyclic_group(2)}, 2, 2);
  CHECK(two <= count_bound(2, 2, 2));
}

TEST_CASE("P_k programs") {
  Alphabet const& bin = binary_alphabet();
  MkFamily        m1 = mk_stamp(1), m2 = mk_stamp(2);
  auto p = build_pk(3, 1, KSet{3, 1, {{2}}});
  std::vector<std::string> acc;
  for_each_word(2, 3, [&](Word const& w) {
    if (p.accepts(w)) acc.push_back(bin.format(w));
    return true;
  });
  CHECK(acc == std::vector<std::string>{"010", "011"});
  auto none = build_pk(KSet{4, 2, {}}, m2);
  for_each_word(2, 4, [&](Word const& w) {
    CHECK_FALSE(none.accepts(w));
    return true;
  });
  CHECK_THROWS_AS(build_pk(KSet{4, 1, {}}, m2), InputError);
  CHECK_THROWS_AS(build_pk(KSet{4, 2, {{1, 5}}}, m2), InputError);
  CHECK_THROWS_AS(build_pk(4, 2, KSet{3, 2, {}}), InputError);

  std::mt19937_64 rng(41);
  for (std::size_t k : {1, 2, 3}) {
    MkFamily f = mk_stamp(k);
    for (std::size_t n = 0; n <= (k == 3 ? 6 : 8); ++n) {
      for (int t = 0; t < 5; ++t) {
        KSet s  = random_kset(rng, n, k, 0.3);
        auto r  = build_pk(s, f);
        std::size_t bound = 4;
        for (std::size_t i = 0; i < k; ++i) bound *= n;
        CHECK(r.program.length() <= bound);
        CHECK(recognizes_exhaustive(r, [&](Word const& w) { return in_k_language(s, w); }).ok);
      }
    }
  }
}

TEST_CASE("compression for a single SUM expression") {
  std::mt19937_64 rng(43);
  Alphabet sigma = Alphabet::from_chars("ab");
  MkFamily f1 = mk_stamp(1);
  auto m = f1.syntactic.stamp.monoid;
  std::size_t const n = 5;

  Program big = gen::random_program(rng, n, sigma, m, 40);
  auto full = compress_for_sum(big, SumExpr::star({0, 1, 2}));
  CHECK(full.size() <= sigma.size() * m->size() * n);
  CHECK_THROWS_AS(compress_for_sum(big, SumExpr::star({7})), InputError);
  CHECK(compress_for_sum(Program(n, sigma, m), zk_expr(1)).empty());

  auto words = words_upto(2, n);
  std::vector<Letter> all_elems;
  for (Element x = 0; x < m->size(); ++x) all_elems.push_back(x);
  for (int t = 0; t < 40; ++t) {
    SumExpr k = random_sum(rng, all_elems, 3);
    Program p = gen::random_program(rng, n, sigma, m, 30);
    auto    I = compress_for_sum(p, k);
    std::vector<std::vector<std::size_t>> supersets{I, {}};
    for (std::size_t i = 0; i < p.length(); ++i) supersets[1].push_back(i);
    for (int extra = 0; extra < 3; ++extra) {
      auto sup = I;
      for (std::size_t i = 0; i < p.length(); ++i)
        if (std::bernoulli_distribution(0.3)(rng)) sup.push_back(i);
      supersets.push_back(sup);
    }
    for (auto const& sup : supersets) {
      Program q = subprogram(p, sup);
      for_each_word(2, n, [&](Word const& w) {
        CHECK(sum_matches(k, trace(p, w)) == sum_matches(k, trace(q, w)));
        return true;
      });
    }
  }
}

TEST_CASE("program compression with certificates") {
  std::mt19937_64 rng(47);
  Alphabet sigma = Alphabet::from_chars("ab");
  std::size_t const n = 6;
  for (std::size_t k : {1, 2}) {
    MkFamily f = mk_stamp(k);
    auto m = f.syntactic.stamp.monoid;
    Alphabet in = k == 1 ? sigma : Alphabet::from_chars("abc");
    BoolCombo cert = mk_certificate(f, f.syntactic.accept);
    CHECK(max_level(cert) <= k);
    for (int t = 0; t < (k == 1 ? 10 : 4); ++t) {
      Program p = gen::random_program(rng, k == 1 ? n : 5, in, m, (k == 1 ? n * n : 25));
      auto c = compress_program(p, f.syntactic.accept, cert);
      CHECK(c.direct_equivalent);
      CHECK(c.level <= k);
      std::size_t bound = 4 * in.size() * m->size() * m->size();
      for (std::size_t i = 0; i < std::max<std::size_t>(k, 1); ++i) bound *= p.range;
      CHECK(c.indices.size() <= bound);
    }
  }

  // Every accepting set over M_1 gets a certificate from syntactic classes.
  MkFamily f1 = mk_stamp(1);
  auto m1 = f1.syntactic.stamp.monoid;
  Program p = gen::random_program(rng, 4, sigma, m1, 16);
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<Element> acc;
    for (Element x = 0; x < 3; ++x) if (mask >> x & 1U) acc.push_back(x);
    auto c = compress_program(p, acc, mk_certificate(f1, acc));
    CHECK(c.direct_equivalent);
    if (acc.empty()) CHECK(c.indices.empty());
  }

  // Padding a single-scan program with repeats of its own instructions.
  Program scan = from_stamp(Stamp(sigma, m1, {f1.syntactic.stamp.images[0], f1.syntactic.stamp.images[1]}), n);
  Program padded = scan;
  for (std::size_t r = 1; r < n; ++r)
    padded.instructions.insert(padded.instructions.end(), scan.instructions.begin(), scan.instructions.end());
  CHECK(padded.length() == n * n);
  auto c = compress_program(padded, f1.syntactic.accept, mk_certificate(f1, f1.syntactic.accept));
  CHECK(c.words_checked == 64);
  CHECK(c.direct_equivalent);
  CHECK(c.program.length() <= 4 * n);

  CHECK_THROWS_AS(compress_program(padded, f1.syntactic.accept, BoolCombo::truth(true)),
                  CertificateError);
}
