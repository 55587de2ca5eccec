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

#include "progmon/sums/sum_expr.hpp"

#include <algorithm>
#include <cctype>

#include "progmon/error.hpp"

namespace progmon {

  namespace {

    bool has(std::vector<Letter> const& sorted, Letter a) {
      return std::binary_search(sorted.begin(), sorted.end(), a);
    }

    int compare(SumExpr const& x, SumExpr const& y) {
      if (x.kind() != y.kind()) {
        return x.kind() == SumExpr::Kind::Star ? -1 : 1;
      }
      if (x.kind() == SumExpr::Kind::Star) {
        if (x.letters() == y.letters()) {
          return 0;
        }
        return x.letters() < y.letters() ? -1 : 1;
      }
      if (x.marker() != y.marker()) {
        return x.marker() < y.marker() ? -1 : 1;
      }
      if (x.side() != y.side()) {
        return x.side() == Avoid::Left ? -1 : 1;
      }
      if (int c = compare(x.left(), y.left()); c != 0) {
        return c;
      }
      return compare(x.right(), y.right());
    }

  }  // namespace

  SumExpr SumExpr::star(std::vector<Letter> letters) {
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    auto n       = std::make_shared<Node>();
    n->kind      = Kind::Star;
    n->letters   = letters;
    n->occurring = std::move(letters);
    return SumExpr(std::move(n));
  }

  SumExpr SumExpr::split(SumExpr left, Letter marker, SumExpr right, Avoid side) {
    SumExpr const& avoiding = side == Avoid::Left ? left : right;
    if (has(avoiding.occurring(), marker)) {
      throw InputError("marker letter occurs on the side that must avoid it");
    }
    auto n    = std::make_shared<Node>();
    n->kind   = Kind::Split;
    n->marker = marker;
    n->side   = side;
    n->level  = left.level() + right.level() + 1;
    std::vector<Letter> occ = left.occurring();
    occ.insert(occ.end(), right.occurring().begin(), right.occurring().end());
    occ.push_back(marker);
    std::sort(occ.begin(), occ.end());
    occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
    n->occurring = std::move(occ);
    n->children  = {std::move(left), std::move(right)};
    return SumExpr(std::move(n));
  }

  SumExpr const& SumExpr::left() const {
    if (kind() != Kind::Split) {
      throw InputError("a star expression has no sides");
    }
    return node_->children[0];
  }

  SumExpr const& SumExpr::right() const {
    if (kind() != Kind::Split) {
      throw InputError("a star expression has no sides");
    }
    return node_->children[1];
  }

  Letter SumExpr::marker() const {
    if (kind() != Kind::Split) {
      throw InputError("a star expression has no marker");
    }
    return node_->marker;
  }

  Avoid SumExpr::side() const {
    if (kind() != Kind::Split) {
      throw InputError("a star expression has no avoiding side");
    }
    return node_->side;
  }

  bool SumExpr::operator==(SumExpr const& o) const {
    return node_ == o.node_ || compare(*this, o) == 0;
  }

  bool SumExpr::operator<(SumExpr const& o) const {
    return compare(*this, o) < 0;
  }

  // --- text format -------------------------------------------------------

  namespace {

    class SumParser {
     public:
      SumParser(std::string_view text, Alphabet const& alphabet)
          : text_(text), alphabet_(alphabet) {}

      SumExpr parse_all() {
        SumExpr e = parse();
        skip();
        if (pos_ != text_.size()) {
          fail("trailing input");
        }
        return e;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw InputError("SUM expression: " + what + " at offset "
                         + std::to_string(pos_));
      }

      void skip() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool accept(std::string_view tok) {
        skip();
        if (text_.substr(pos_, tok.size()) == tok) {
          pos_ += tok.size();
          return true;
        }
        return false;
      }

      void expect(std::string_view tok) {
        if (!accept(tok)) {
          fail("expected '" + std::string(tok) + "'");
        }
      }

      Letter symbol() {
        skip();
        std::string name;
        if (pos_ < text_.size() && text_[pos_] == '\'') {
          std::size_t end = text_.find('\'', pos_ + 1);
          if (end == std::string_view::npos) {
            fail("unterminated quote");
          }
          name = std::string(text_.substr(pos_ + 1, end - pos_ - 1));
          pos_ = end + 1;
        } else {
          while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ',' || c == '}' || c == ')' || c == '('
                || std::isspace(static_cast<unsigned char>(c))) {
              break;
            }
            name.push_back(c);
            ++pos_;
          }
        }
        if (name.empty()) {
          fail("expected a letter");
        }
        if (!alphabet_.contains(name)) {
          fail("unknown letter '" + name + "'");
        }
        return alphabet_.letter(name);
      }

      SumExpr parse() {
        if (accept("STAR")) {
          expect("{");
          std::vector<Letter> letters;
          if (!accept("}")) {
            do {
              letters.push_back(symbol());
            } while (accept(","));
            expect("}");
          }
          return SumExpr::star(std::move(letters));
        }
        if (accept("SPLIT")) {
          expect("(");
          SumExpr left = parse();
          expect(",");
          Letter a = symbol();
          expect(",");
          SumExpr right = parse();
          expect(",");
          Avoid side = Avoid::Left;
          if (accept("L")) {
            side = Avoid::Left;
          } else if (accept("R")) {
            side = Avoid::Right;
          } else {
            fail("expected L or R");
          }
          expect(")");
          return SumExpr::split(std::move(left), a, std::move(right), side);
        }
        fail("expected STAR or SPLIT");
      }

      std::string_view text_;
      Alphabet const&  alphabet_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  SumExpr parse_sum(std::string_view text, Alphabet const& alphabet) {
    return SumParser(text, alphabet).parse_all();
  }

  std::string to_string(SumExpr const& e, Alphabet const& alphabet) {
    if (e.kind() == SumExpr::Kind::Star) {
      std::string out = "STAR{";
      for (std::size_t i = 0; i < e.letters().size(); ++i) {
        if (i > 0) {
          out += ",";
        }
        out += alphabet.symbol(e.letters()[i]);
      }
      return out + "}";
    }
    return "SPLIT(" + to_string(e.left(), alphabet) + ", '"
           + alphabet.symbol(e.marker()) + "', " + to_string(e.right(), alphabet)
           + ", " + (e.side() == Avoid::Left ? "L" : "R") + ")";
  }

  // --- languages ---------------------------------------------------------

  Regex to_regex(SumExpr const& e, Alphabet const& alphabet) {
    if (e.kind() == SumExpr::Kind::Star) {
      if (e.letters().empty()) {
        return Regex::epsilon();
      }
      std::vector<std::string> names;
      for (Letter a : e.letters()) {
        names.push_back(alphabet.symbol(a));
      }
      return Regex::star(Regex::any_of(names));
    }
    return Regex::seq({to_regex(e.left(), alphabet),
                       Regex::sym(alphabet.symbol(e.marker())),
                       to_regex(e.right(), alphabet)});
  }

  Dfa sum_dfa(SumExpr const& e, Alphabet const& alphabet) {
    return compile(to_regex(e, alphabet), alphabet);
  }

  bool sum_member(SumExpr const& e, Alphabet const& alphabet, Word const& w) {
    return sum_dfa(e, alphabet).accepts(w);
  }

  bool sum_member(SumExpr const& e, Alphabet const& alphabet,
                  std::string_view w) {
    return sum_member(e, alphabet, alphabet.parse(w));
  }

  bool sum_matches(SumExpr const& e, std::span<Letter const> w) {
    if (e.kind() == SumExpr::Kind::Star) {
      return std::all_of(w.begin(), w.end(),
                         [&](Letter a) { return has(e.letters(), a); });
    }
    std::size_t i = w.size();
    if (e.side() == Avoid::Left) {
      auto it = std::find(w.begin(), w.end(), e.marker());
      if (it == w.end()) {
        return false;
      }
      i = static_cast<std::size_t>(it - w.begin());
    } else {
      auto it = std::find(w.rbegin(), w.rend(), e.marker());
      if (it == w.rend()) {
        return false;
      }
      i = w.size() - 1 - static_cast<std::size_t>(it - w.rbegin());
    }
    return sum_matches(e.left(), w.subspan(0, i))
           && sum_matches(e.right(), w.subspan(i + 1));
  }

  std::vector<SumExpr> dedupe(std::vector<SumExpr> exprs) {
    std::vector<SumExpr> out;
    for (auto& e : exprs) {
      if (std::find(out.begin(), out.end(), e) == out.end()) {
        out.push_back(std::move(e));
      }
    }
    return out;
  }

  // --- Boolean combinations ----------------------------------------------

  BoolCombo BoolCombo::truth(bool value) {
    BoolCombo c;
    c.kind = value ? Kind::True : Kind::False;
    return c;
  }

  BoolCombo BoolCombo::of(SumExpr e) {
    BoolCombo c;
    c.kind = Kind::Leaf;
    c.leaf.push_back(std::move(e));
    return c;
  }

  BoolCombo BoolCombo::negate(BoolCombo x) {
    BoolCombo c;
    c.kind = Kind::Not;
    c.children.push_back(std::move(x));
    return c;
  }

  BoolCombo BoolCombo::all(std::vector<BoolCombo> cs) {
    if (cs.empty()) {
      return truth(true);
    }
    if (cs.size() == 1) {
      return std::move(cs.front());
    }
    BoolCombo c;
    c.kind     = Kind::And;
    c.children = std::move(cs);
    return c;
  }

  BoolCombo BoolCombo::any(std::vector<BoolCombo> cs) {
    if (cs.empty()) {
      return truth(false);
    }
    if (cs.size() == 1) {
      return std::move(cs.front());
    }
    BoolCombo c;
    c.kind     = Kind::Or;
    c.children = std::move(cs);
    return c;
  }

  BoolCombo BoolCombo::any_of(std::vector<SumExpr> const& es) {
    std::vector<BoolCombo> cs;
    for (auto const& e : es) {
      cs.push_back(of(e));
    }
    return any(std::move(cs));
  }

  bool evaluate(BoolCombo const& c, std::span<Letter const> w) {
    switch (c.kind) {
      case BoolCombo::Kind::True:
        return true;
      case BoolCombo::Kind::False:
        return false;
      case BoolCombo::Kind::Leaf:
        return sum_matches(c.leaf.at(0), w);
      case BoolCombo::Kind::Not:
        return !evaluate(c.children.at(0), w);
      case BoolCombo::Kind::And:
        return std::all_of(c.children.begin(), c.children.end(),
                           [&](BoolCombo const& x) { return evaluate(x, w); });
      case BoolCombo::Kind::Or:
        return std::any_of(c.children.begin(), c.children.end(),
                           [&](BoolCombo const& x) { return evaluate(x, w); });
    }
    return false;
  }

  std::vector<SumExpr> leaves(BoolCombo const& c) {
    std::vector<SumExpr> out(c.leaf.begin(), c.leaf.end());
    for (auto const& x : c.children) {
      auto sub = leaves(x);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return dedupe(std::move(out));
  }

  std::size_t max_level(BoolCombo const& c) {
    std::size_t k = 0;
    for (auto const& e : leaves(c)) {
      k = std::max(k, e.level());
    }
    return k;
  }

  std::string to_string(BoolCombo const& c, Alphabet const& alphabet) {
    auto join = [&](std::string const& op) {
      std::string out = "(";
      for (std::size_t i = 0; i < c.children.size(); ++i) {
        if (i > 0) {
          out += " " + op + " ";
        }
        out += to_string(c.children[i], alphabet);
      }
      return out + ")";
    };
    switch (c.kind) {
      case BoolCombo::Kind::True:
        return "TRUE";
      case BoolCombo::Kind::False:
        return "FALSE";
      case BoolCombo::Kind::Leaf:
        return to_string(c.leaf.at(0), alphabet);
      case BoolCombo::Kind::Not:
        return "NOT " + to_string(c.children.at(0), alphabet);
      case BoolCombo::Kind::And:
        return join("AND");
      case BoolCombo::Kind::Or:
        return join("OR");
    }
    return "";
  }

}  // namespace progmon
