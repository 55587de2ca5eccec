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

#include "progmon/sums/family.hpp"

#include <algorithm>

#include "progmon/sums/closure.hpp"

namespace progmon {

  Alphabet zk_alphabet(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t l = 1; l <= k; ++l) {
      names.push_back("B" + std::to_string(l));
      names.push_back("T" + std::to_string(l));
    }
    return Alphabet(std::move(names));
  }

  namespace {

    // Y_l as letters of Y_k.
    std::vector<Letter> levels_upto(std::size_t l) {
      std::vector<Letter> out;
      for (std::size_t i = 1; i <= l; ++i) {
        out.push_back(bottom_letter(i));
        out.push_back(top_letter(i));
      }
      return out;
    }

  }  // namespace

  SumExpr zk_expr(std::size_t k) {
    if (k == 0) {
      throw InputError("Z_k is defined for k >= 1");
    }
    // Built from the inside out: T1 Y_k*, then Y_1* T2 (...), and so on.
    SumExpr e = SumExpr::star(levels_upto(k));
    for (std::size_t l = 1; l <= k; ++l) {
      e = SumExpr::split(SumExpr::star(levels_upto(l - 1)), top_letter(l),
                         std::move(e), Avoid::Left);
    }
    return e;
  }

  MkFamily mk_stamp(std::size_t k, Limits const& limits) {
    Alphabet y = zk_alphabet(k);
    SumExpr  z = zk_expr(k);
    auto     ss = syntactic_stamp(sum_dfa(z, y), limits);
    return {k, std::move(y), std::move(z), std::move(ss)};
  }

  Alphabet element_alphabet(FiniteMonoid const& m) {
    return Alphabet(m.names());
  }

  BoolCombo mk_certificate(MkFamily const& family,
                           std::vector<Element> const& accept) {
    Stamp const&        eta  = family.syntactic.stamp;
    FiniteMonoid const& m    = eta.target();
    std::vector<Word>   reps = representatives(eta);
    std::vector<Element> acc = accept;
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    for (Element x : acc) {
      if (x >= m.size()) {
        throw InputError("accepting element out of range");
      }
    }

    auto pull_back = [&](std::vector<SumExpr> const& over_y) {
      std::vector<SumExpr> out;
      for (auto const& e : over_y) {
        auto pre = sum_inverse_morphism(e, reps);
        out.insert(out.end(), pre.begin(), pre.end());
      }
      return BoolCombo::any_of(dedupe(std::move(out)));
    };

    if (acc == family.syntactic.accept) {
      return pull_back({family.z});
    }

    std::vector<BoolCombo> per_element;
    for (Element target : acc) {
      std::vector<BoolCombo> conds;
      for (Element x = 0; x < m.size(); ++x) {
        for (Element y = 0; y < m.size(); ++y) {
          std::vector<SumExpr> q;
          for (auto const& lq : sum_quotient(family.z, reps[x], QuotientSide::Left)) {
            auto rq = sum_quotient(lq, reps[y], QuotientSide::Right);
            q.insert(q.end(), rq.begin(), rq.end());
          }
          BoolCombo in_q = pull_back(dedupe(std::move(q)));
          bool const inside = std::binary_search(
              family.syntactic.accept.begin(), family.syntactic.accept.end(),
              m(m(x, target), y));
          conds.push_back(inside ? std::move(in_q) : BoolCombo::negate(std::move(in_q)));
        }
      }
      per_element.push_back(BoolCombo::all(std::move(conds)));
    }
    return BoolCombo::any(std::move(per_element));
  }

}  // namespace progmon
