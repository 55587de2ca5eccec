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

#include "progmon/algebra/green.hpp"

#include <sstream>

namespace progmon {

  namespace {

    using Table = std::vector<std::vector<bool>>;

    // Every ideal uM, Mu, MuM contains u because M has an identity, so a
    // single pass over products gives the full reachability sets.
    Table right_ideals(FiniteMonoid const& m) {
      Table t(m.size(), std::vector<bool>(m.size(), false));
      for (Element u = 0; u < m.size(); ++u) {
        for (Element v = 0; v < m.size(); ++v) {
          t[u][m(u, v)] = true;
        }
      }
      return t;
    }

    Table left_ideals(FiniteMonoid const& m) {
      Table t(m.size(), std::vector<bool>(m.size(), false));
      for (Element u = 0; u < m.size(); ++u) {
        for (Element v = 0; v < m.size(); ++v) {
          t[u][m(v, u)] = true;
        }
      }
      return t;
    }

    Table two_sided_ideals(FiniteMonoid const& m) {
      Table t(m.size(), std::vector<bool>(m.size(), false));
      for (Element u = 0; u < m.size(); ++u) {
        for (Element a = 0; a < m.size(); ++a) {
          Element au = m(a, u);
          for (Element b = 0; b < m.size(); ++b) {
            t[u][m(au, b)] = true;
          }
        }
      }
      return t;
    }

  }  // namespace

  GreenData green(FiniteMonoid const& m) {
    GreenData g;
    g.leq_r = right_ideals(m);
    g.leq_l = left_ideals(m);
    g.leq_j = two_sided_ideals(m);
    std::size_t const n = m.size();
    g.sim_h.assign(n, std::vector<bool>(n, false));
    for (Element u = 0; u < n; ++u) {
      for (Element v = 0; v < n; ++v) {
        g.sim_h[u][v] = g.sim_r(u, v) && g.sim_l(u, v);
      }
    }
    return g;
  }

  bool is_r_bad(FiniteMonoid const& m, GreenData const& g, Element u,
                Element r) {
    return !g.sim_r(u, m.multiply(u, r));
  }

  bool is_l_bad(FiniteMonoid const& m, GreenData const& g, Element u,
                Element r) {
    return !g.sim_l(u, m.multiply(r, u));
  }

  std::vector<std::vector<Element>> classes(std::size_t  n,
                                            Table const& leq) {
    std::vector<std::vector<Element>> out;
    std::vector<bool>                 placed(n, false);
    for (Element u = 0; u < n; ++u) {
      if (placed[u]) {
        continue;
      }
      std::vector<Element> cls;
      for (Element v = u; v < n; ++v) {
        if (!placed[v] && leq[u][v] && leq[v][u]) {
          placed[v] = true;
          cls.push_back(v);
        }
      }
      out.push_back(std::move(cls));
    }
    return out;
  }

  std::string eggbox_dot(FiniteMonoid const& m) {
    GreenData const g       = green(m);
    auto const      jcls    = classes(m.size(), g.leq_j);
    auto const      rcls    = classes(m.size(), g.leq_r);
    auto const      lcls    = classes(m.size(), g.leq_l);
    auto            escape  = [](std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '<' || c == '>' || c == '&' || c == '"' || c == '|'
            || c == '{' || c == '}') {
          out += "&#" + std::to_string(static_cast<int>(c)) + ";";
        } else {
          out.push_back(c);
        }
      }
      return out;
    };
    std::ostringstream out;
    out << "digraph eggbox {\n  node [shape=plaintext];\n";
    for (std::size_t j = 0; j < jcls.size(); ++j) {
      Element const rep = jcls[j].front();
      out << "  J" << j << " [label=<<table border=\"1\" cellborder=\"1\" "
          << "cellspacing=\"0\">";
      for (auto const& r : rcls) {
        if (!g.sim_j(rep, r.front())) {
          continue;
        }
        out << "<tr>";
        for (auto const& l : lcls) {
          if (!g.sim_j(rep, l.front())) {
            continue;
          }
          out << "<td>";
          bool first = true;
          for (Element x : r) {
            if (g.sim_l(x, l.front())) {
              out << (first ? "" : " ") << escape(m.name(x))
                  << (m.is_idempotent(x) ? "*" : "");
              first = false;
            }
          }
          out << "</td>";
        }
        out << "</tr>";
      }
      out << "</table>>];\n";
    }
    // Hasse edges of the J-order, drawn from higher to lower classes
    // (the identity's class on top).
    for (std::size_t a = 0; a < jcls.size(); ++a) {
      for (std::size_t b = 0; b < jcls.size(); ++b) {
        Element x = jcls[a].front(), y = jcls[b].front();
        if (a == b || !g.leq_j[x][y]) {
          continue;
        }
        bool covered = true;
        for (std::size_t c = 0; c < jcls.size(); ++c) {
          Element z = jcls[c].front();
          if (c != a && c != b && g.leq_j[x][z] && g.leq_j[z][y]) {
            covered = false;
            break;
          }
        }
        if (covered) {
          out << "  J" << a << " -> J" << b << ";\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace progmon
