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

#include "progmon/sums/closure.hpp"

#include <algorithm>

namespace progmon {

  namespace {

    bool inside(Word const& u, std::vector<Letter> const& sorted) {
      return std::all_of(u.begin(), u.end(), [&](Letter a) {
        return std::binary_search(sorted.begin(), sorted.end(), a);
      });
    }

    // Position of the marker occurrence that a split of this side uses.
    std::size_t marker_at(Word const& u, Letter a, Avoid side) {
      if (side == Avoid::Left) {
        return static_cast<std::size_t>(std::find(u.begin(), u.end(), a)
                                        - u.begin());
      }
      auto it = std::find(u.rbegin(), u.rend(), a);
      return u.size() - 1 - static_cast<std::size_t>(it - u.rbegin());
    }

    void append(std::vector<SumExpr>& out, std::vector<SumExpr> const& more) {
      out.insert(out.end(), more.begin(), more.end());
    }

  }  // namespace

  std::vector<SumExpr> sum_quotient(SumExpr const& e, Word const& u,
                                    QuotientSide side) {
    if (e.kind() == SumExpr::Kind::Star) {
      if (inside(u, e.letters())) {
        return {e};
      }
      return {};
    }
    Letter const a     = e.marker();
    Avoid const  avoid = e.side();
    std::vector<SumExpr> out;
    if (std::find(u.begin(), u.end(), a) == u.end()) {
      if (side == QuotientSide::Left) {
        for (auto const& q : sum_quotient(e.left(), u, side)) {
          out.push_back(SumExpr::split(q, a, e.right(), avoid));
        }
      } else {
        for (auto const& q : sum_quotient(e.right(), u, side)) {
          out.push_back(SumExpr::split(e.left(), a, q, avoid));
        }
      }
      return dedupe(std::move(out));
    }
    std::size_t const i = marker_at(u, a, avoid);
    Word const u1(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
    Word const u2(u.begin() + static_cast<std::ptrdiff_t>(i) + 1, u.end());
    // The quotient that can swallow the marker is the one on the side where
    // the marker is forced: the left quotient of a left-avoiding split, the
    // right quotient of a right-avoiding one. The other direction also keeps
    // the marker outside u.
    bool const consumes = (avoid == Avoid::Left) == (side == QuotientSide::Left);
    if (consumes) {
      if (side == QuotientSide::Left) {
        if (sum_matches(e.left(), u1)) {
          append(out, sum_quotient(e.right(), u2, side));
        }
      } else if (sum_matches(e.right(), u2)) {
        append(out, sum_quotient(e.left(), u1, side));
      }
      return dedupe(std::move(out));
    }
    if (side == QuotientSide::Right) {
      for (auto const& q : sum_quotient(e.right(), u, side)) {
        out.push_back(SumExpr::split(e.left(), a, q, avoid));
      }
      if (sum_matches(e.right(), u2)) {
        append(out, sum_quotient(e.left(), u1, side));
      }
    } else {
      for (auto const& q : sum_quotient(e.left(), u, side)) {
        out.push_back(SumExpr::split(q, a, e.right(), avoid));
      }
      if (sum_matches(e.left(), u1)) {
        append(out, sum_quotient(e.right(), u2, side));
      }
    }
    return dedupe(std::move(out));
  }

  std::vector<SumExpr> sum_inverse_morphism(SumExpr const&           e,
                                            std::vector<Word> const& images) {
    if (e.kind() == SumExpr::Kind::Star) {
      std::vector<Letter> b;
      for (Letter g = 0; g < images.size(); ++g) {
        if (inside(images[g], e.letters())) {
          b.push_back(g);
        }
      }
      return {SumExpr::star(std::move(b))};
    }
    Letter const         a = e.marker();
    std::vector<SumExpr> out;
    for (Letter g = 0; g < images.size(); ++g) {
      Word const& img = images[g];
      if (std::find(img.begin(), img.end(), a) == img.end()) {
        continue;
      }
      std::size_t const i = marker_at(img, a, e.side());
      Word const u1(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(i));
      Word const u2(img.begin() + static_cast<std::ptrdiff_t>(i) + 1, img.end());
      std::vector<SumExpr> lefts, rights;
      for (auto const& q : sum_quotient(e.left(), u1, QuotientSide::Right)) {
        append(lefts, sum_inverse_morphism(q, images));
      }
      for (auto const& q : sum_quotient(e.right(), u2, QuotientSide::Left)) {
        append(rights, sum_inverse_morphism(q, images));
      }
      lefts  = dedupe(std::move(lefts));
      rights = dedupe(std::move(rights));
      for (auto const& l : lefts) {
        for (auto const& r : rights) {
          out.push_back(SumExpr::split(l, g, r, e.side()));
        }
      }
    }
    return dedupe(std::move(out));
  }

}  // namespace progmon
