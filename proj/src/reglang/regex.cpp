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

#include "progmon/reglang/regex.hpp"

#include <cctype>

#include "progmon/error.hpp"

namespace progmon {

  Regex Regex::empty() {
    return Regex{};
  }

  Regex Regex::epsilon() {
    Regex r;
    r.kind = Kind::Epsilon;
    return r;
  }

  Regex Regex::sym(std::string name) {
    Regex r;
    r.kind   = Kind::Letter;
    r.letter = std::move(name);
    return r;
  }

  Regex Regex::alt(std::vector<Regex> options) {
    if (options.empty()) return empty();
    if (options.size() == 1) return std::move(options.front());
    Regex r;
    r.kind     = Kind::Union;
    r.children = std::move(options);
    return r;
  }

  Regex Regex::seq(std::vector<Regex> parts) {
    if (parts.empty()) return epsilon();
    if (parts.size() == 1) return std::move(parts.front());
    Regex r;
    r.kind     = Kind::Concat;
    r.children = std::move(parts);
    return r;
  }

  Regex Regex::star(Regex inner) {
    Regex r;
    r.kind = Kind::Star;
    r.children.push_back(std::move(inner));
    return r;
  }

  Regex Regex::plus(Regex inner) {
    Regex r;
    r.kind = Kind::Plus;
    r.children.push_back(std::move(inner));
    return r;
  }

  Regex Regex::any_of(std::vector<std::string> const& names) {
    std::vector<Regex> opts;
    for (auto const& n : names) opts.push_back(sym(n));
    return alt(std::move(opts));
  }

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      Regex parse() {
        Regex r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return r;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw InputError("regex syntax error at offset " + std::to_string(pos_)
                         + ": " + msg);
      }

      void skip_ws() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool starts_with(std::string_view s) const {
        return text_.substr(pos_, s.size()) == s;
      }

      bool at_atom_start() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '('
               || c == '[' || c == '#' || c == '_' || starts_with("\xE2\x88\x85")
               || starts_with("\xCE\xB5");
      }

      Regex expr() {
        std::vector<Regex> opts{term()};
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == '+') {
          ++pos_;
          opts.push_back(term());
          skip_ws();
        }
        return Regex::alt(std::move(opts));
      }

      Regex term() {
        if (!at_atom_start()) fail("expected a letter, '(' or a constant");
        std::vector<Regex> parts;
        while (at_atom_start()) parts.push_back(factor());
        return Regex::seq(std::move(parts));
      }

      Regex factor() {
        Regex r = atom();
        while (true) {
          skip_ws();
          if (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            r = Regex::star(std::move(r));
          } else if (pos_ < text_.size() && text_[pos_] == '~') {
            ++pos_;
            r = Regex::plus(std::move(r));
          } else {
            return r;
          }
        }
      }

      Regex atom() {
        skip_ws();
        char c = text_[pos_];
        if (c == '(') {
          ++pos_;
          Regex r = expr();
          skip_ws();
          if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
          ++pos_;
          return r;
        }
        if (c == '[') {
          std::size_t close = text_.find(']', pos_);
          if (close == std::string_view::npos || close == pos_ + 1) {
            fail("malformed bracketed letter");
          }
          std::string name(text_.substr(pos_ + 1, close - pos_ - 1));
          pos_ = close + 1;
          return Regex::sym(std::move(name));
        }
        if (c == '#') {
          ++pos_;
          return Regex::empty();
        }
        if (c == '_') {
          ++pos_;
          return Regex::epsilon();
        }
        if (starts_with("\xE2\x88\x85")) {
          pos_ += 3;
          return Regex::empty();
        }
        if (starts_with("\xCE\xB5")) {
          pos_ += 2;
          return Regex::epsilon();
        }
        ++pos_;
        return Regex::sym(std::string(1, c));
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };

    int precedence(Regex const& r) {
      switch (r.kind) {
        case Regex::Kind::Union: return 0;
        case Regex::Kind::Concat: return 1;
        default: return 2;
      }
    }

    std::string wrap(Regex const& r, int min_prec) {
      std::string s = to_string(r);
      return precedence(r) < min_prec ? "(" + s + ")" : s;
    }

  }  // namespace

  Regex parse_regex(std::string_view text) {
    return Parser(text).parse();
  }

  std::string to_string(Regex const& r) {
    switch (r.kind) {
      case Regex::Kind::Empty: return "#";
      case Regex::Kind::Epsilon: return "_";
      case Regex::Kind::Letter: {
        bool simple = r.letter.size() == 1
                      && std::isalnum(static_cast<unsigned char>(r.letter[0]));
        return simple ? r.letter : "[" + r.letter + "]";
      }
      case Regex::Kind::Union: {
        std::string s;
        for (std::size_t i = 0; i < r.children.size(); ++i) {
          if (i) s += "+";
          s += wrap(r.children[i], 1);
        }
        return s;
      }
      case Regex::Kind::Concat: {
        std::string s;
        for (auto const& c : r.children) s += wrap(c, 2);
        return s;
      }
      case Regex::Kind::Star: return wrap(r.children[0], 2) + "*";
      case Regex::Kind::Plus: return wrap(r.children[0], 2) + "~";
    }
    return "";
  }

  std::set<std::string> letters(Regex const& r) {
    std::set<std::string> out;
    if (r.kind == Regex::Kind::Letter) out.insert(r.letter);
    for (auto const& c : r.children) {
      auto sub = letters(c);
      out.insert(sub.begin(), sub.end());
    }
    return out;
  }

}  // namespace progmon
