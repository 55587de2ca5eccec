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

#include "progmon/algebra/variety.hpp"

#include <algorithm>
#include <cctype>

namespace progmon {

  std::string variety_name(VarietyId v) {
    switch (v) {
      case VarietyId::Trivial: return "I";
      case VarietyId::Com: return "Com";
      case VarietyId::J: return "J";
      case VarietyId::DA: return "DA";
      case VarietyId::Aperiodic: return "A";
    }
    return "?";
  }

  VarietyId parse_variety(std::string const& text) {
    std::string t;
    for (char c : text) {
      t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (t == "I" || t == "TRIVIAL") return VarietyId::Trivial;
    if (t == "COM") return VarietyId::Com;
    if (t == "J") return VarietyId::J;
    if (t == "DA") return VarietyId::DA;
    if (t == "A" || t == "APERIODIC") return VarietyId::Aperiodic;
    throw InputError("unknown variety '" + text + "'");
  }

  std::vector<VarietyId> all_varieties() {
    return {VarietyId::Trivial, VarietyId::Com, VarietyId::J, VarietyId::DA,
            VarietyId::Aperiodic};
  }

  Term Term::var_(std::size_t i) {
    Term t;
    t.kind = Kind::Var;
    t.var  = i;
    return t;
  }

  Term Term::mul(Term a, Term b) {
    Term t;
    t.kind  = Kind::Mul;
    t.left  = std::make_shared<Term const>(std::move(a));
    t.right = std::make_shared<Term const>(std::move(b));
    return t;
  }

  Term Term::omega(Term a) {
    Term t;
    t.kind = Kind::Omega;
    t.left = std::make_shared<Term const>(std::move(a));
    return t;
  }

  std::string Term::to_string() const {
    switch (kind) {
      case Kind::Var: return std::string(1, static_cast<char>('x' + var));
      case Kind::Mul: return left->to_string() + right->to_string();
      case Kind::Omega: {
        std::string inner = left->to_string();
        if (inner.size() > 1) {
          inner = "(" + inner + ")";
        }
        return inner + "^w";
      }
    }
    return "";
  }

  std::vector<Identity> const& identities(VarietyId v) {
    static auto const table = [] {
      Term const x  = Term::var_(0);
      Term const y  = Term::var_(1);
      Term const xy = Term::mul(x, y);
      Term const w  = Term::omega(xy);
      std::vector<std::vector<Identity>> t(5);
      t[0] = {{"x = y", 2, x, y}};
      t[1] = {{"xy = yx", 2, xy, Term::mul(y, x)}};
      t[2] = {{"(xy)^w = (xy)^w x", 2, w, Term::mul(w, x)},
              {"(xy)^w = y(xy)^w", 2, w, Term::mul(y, w)}};
      t[3] = {{"(xy)^w = (xy)^w x (xy)^w", 2, w,
               Term::mul(Term::mul(w, x), w)}};
      t[4] = {{"x^w = x^(w+1)", 1, Term::omega(x),
               Term::mul(Term::omega(x), x)}};
      return t;
    }();
    return table[static_cast<std::size_t>(v)];
  }

  Element evaluate(Term const&                 t,
                   FiniteMonoid const&         m,
                   std::vector<Element> const& assignment,
                   std::size_t                 omega) {
    switch (t.kind) {
      case Term::Kind::Var: return assignment.at(t.var);
      case Term::Kind::Mul:
        return m(evaluate(*t.left, m, assignment, omega),
                 evaluate(*t.right, m, assignment, omega));
      case Term::Kind::Omega:
        return m.power(evaluate(*t.left, m, assignment, omega), omega);
    }
    return m.identity();
  }

  Word expand(Term const& t, std::vector<Word> const& assignment,
              std::size_t omega) {
    switch (t.kind) {
      case Term::Kind::Var: return assignment.at(t.var);
      case Term::Kind::Mul:
        return concat(expand(*t.left, assignment, omega),
                      expand(*t.right, assignment, omega));
      case Term::Kind::Omega: {
        Word base = expand(*t.left, assignment, omega);
        Word out;
        for (std::size_t i = 0; i < omega; ++i) {
          out.insert(out.end(), base.begin(), base.end());
        }
        return out;
      }
    }
    return {};
  }

  std::optional<Violation> find_violation(FiniteMonoid const& m, VarietyId v) {
    std::size_t const omega = idempotent_power(m);
    for (Identity const& id : identities(v)) {
      std::vector<Element> a(id.arity, 0);
      while (true) {
        Element l = evaluate(id.lhs, m, a, omega);
        Element r = evaluate(id.rhs, m, a, omega);
        if (l != r) {
          return Violation{&id, a, l, r};
        }
        std::size_t i = a.size();
        while (i > 0 && ++a[i - 1] == m.size()) {
          a[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace progmon
