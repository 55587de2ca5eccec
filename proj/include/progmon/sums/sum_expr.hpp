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

/**
 * @file
 *
 * Strongly unambiguous monomials. A SUM expression is either A* for an
 * alphabet A, or a marked concatenation L1 a L2 in which the marker a occurs
 * in no word of one designated side. Because of that side condition the
 * marker position in any member word is forced: it is the first occurrence
 * of a when the left side avoids it, the last one otherwise.
 */

#ifndef PROGMON_SUMS_SUM_EXPR_HPP
#define PROGMON_SUMS_SUM_EXPR_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "progmon/alphabet.hpp"
#include "progmon/reglang/dfa.hpp"
#include "progmon/reglang/regex.hpp"

namespace progmon {

  enum class Avoid { Left, Right };

  class SumExpr {
   public:
    enum class Kind { Star, Split };

    /// Star of the given letters. Duplicates are removed; the empty set
    /// denotes {ε}.
    static SumExpr star(std::vector<Letter> letters);
    /// Throws InputError when the marker occurs on the avoiding side.
    static SumExpr split(SumExpr left, Letter marker, SumExpr right, Avoid side);

    Kind kind() const noexcept {
      return node_->kind;
    }
    /// Star letters, sorted.
    std::vector<Letter> const& letters() const noexcept {
      return node_->letters;
    }
    SumExpr const& left() const;
    SumExpr const& right() const;
    Letter         marker() const;
    Avoid          side() const;

    /// Letters occurring in at least one word of the language, sorted.
    std::vector<Letter> const& occurring() const noexcept {
      return node_->occurring;
    }
    /// 0 for a star; level(left) + level(right) + 1 for a split.
    std::size_t level() const noexcept {
      return node_->level;
    }

    bool operator==(SumExpr const& o) const;
    bool operator<(SumExpr const& o) const;

   private:
    struct Node {
      Kind                 kind = Kind::Star;
      std::vector<Letter>  letters;
      std::vector<Letter>  occurring;
      std::size_t          level = 0;
      Letter               marker = 0;
      Avoid                side   = Avoid::Left;
      std::vector<SumExpr> children;
    };
    explicit SumExpr(std::shared_ptr<Node const> n) : node_(std::move(n)) {}
    std::shared_ptr<Node const> node_;
  };

  /// Text form: `STAR{a,b}` and `SPLIT(left, 'a', right, L|R)`, where L
  /// means the left side avoids the marker.
  SumExpr     parse_sum(std::string_view text, Alphabet const& alphabet);
  std::string to_string(SumExpr const& e, Alphabet const& alphabet);

  Regex to_regex(SumExpr const& e, Alphabet const& alphabet);
  Dfa   sum_dfa(SumExpr const& e, Alphabet const& alphabet);

  /// Membership decided on the compiled automaton.
  bool sum_member(SumExpr const& e, Alphabet const& alphabet, Word const& w);
  bool sum_member(SumExpr const& e, Alphabet const& alphabet, std::string_view w);

  /// Linear-time membership that follows the forced marker position. Letters
  /// are plain indices, so this also runs on traces over a monoid.
  bool sum_matches(SumExpr const& e, std::span<Letter const> w);

  /// Keeps the first occurrence of each structurally equal expression.
  std::vector<SumExpr> dedupe(std::vector<SumExpr> exprs);

  /// Boolean formula over SUM leaves.
  struct BoolCombo {
    enum class Kind { True, False, Leaf, Not, And, Or };
    Kind                   kind = Kind::False;
    std::vector<SumExpr>   leaf;  // exactly one entry for Kind::Leaf
    std::vector<BoolCombo> children;

    static BoolCombo truth(bool value);
    static BoolCombo of(SumExpr e);
    static BoolCombo negate(BoolCombo c);
    static BoolCombo all(std::vector<BoolCombo> cs);
    static BoolCombo any(std::vector<BoolCombo> cs);
    /// Union of the given expressions; False for an empty list.
    static BoolCombo any_of(std::vector<SumExpr> const& es);
  };

  bool                 evaluate(BoolCombo const& c, std::span<Letter const> w);
  std::vector<SumExpr> leaves(BoolCombo const& c);
  std::size_t          max_level(BoolCombo const& c);
  std::string          to_string(BoolCombo const& c, Alphabet const& alphabet);

}  // namespace progmon

#endif  // PROGMON_SUMS_SUM_EXPR_HPP
