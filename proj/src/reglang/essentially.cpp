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

#include "progmon/reglang/essentially.hpp"

#include <algorithm>
#include <map>

namespace progmon {

  ContextQuotient context_quotient(Stamp const& phi) {
    FiniteMonoid const& m  = phi.target();
    StampAnalysis const an = stability_index(phi);
    std::vector<bool>   in_ctx(m.size(), false);
    for (Element a : an.stable_semigroup) {
      for (Element x = 0; x < m.size(); ++x) in_ctx[m(a, x)] = true;
    }
    std::vector<Element> ctx;
    for (Element x = 0; x < m.size(); ++x) {
      if (in_ctx[x]) ctx.push_back(x);
    }
    std::map<std::vector<Element>, Element> classes;
    std::vector<Element>                    proj(m.size());
    std::vector<Element>                    rep;
    for (Element x = 0; x < m.size(); ++x) {
      std::vector<Element> sig;
      for (Element a : ctx) {
        Element ax = m(a, x);
        for (Element b : ctx) sig.push_back(m(ax, b));
      }
      auto [it, fresh] = classes.emplace(std::move(sig), static_cast<Element>(rep.size()));
      if (fresh) rep.push_back(x);
      proj[x] = it->second;
    }
    std::size_t const        n = rep.size();
    std::vector<Element>     table(n * n);
    std::vector<std::string> names(n);
    for (Element i = 0; i < n; ++i) {
      names[i] = m.name(rep[i]);
      for (Element j = 0; j < n; ++j) table[i * n + j] = proj[m(rep[i], rep[j])];
    }
    return {FiniteMonoid::trusted(n, std::move(table), proj[m.identity()],
                                  std::move(names)),
            std::move(proj), an.s, std::move(ctx)};
  }

  Stamp quotient_stamp(Stamp const& phi, ContextQuotient const& q) {
    std::vector<Element> images;
    for (Element e : phi.images) images.push_back(q.projection[e]);
    return Stamp(phi.alphabet, share(q.monoid), std::move(images));
  }

  EssentialVerdict is_essentially_v(Stamp const& phi, VarietyId v) {
    EssentialVerdict out;
    out.quotient   = context_quotient(phi);
    auto violation = find_violation(out.quotient.monoid, v);
    out.holds      = !violation.has_value();
    if (out.holds) return out;

    FiniteMonoid const& m    = phi.target();
    FiniteMonoid const& n    = out.quotient.monoid;
    auto const&         proj = out.quotient.projection;
    std::vector<Word> const reps = representatives(phi);
    // Word for each element of N: the representative of its first preimage.
    std::vector<Word> nrep(n.size());
    std::vector<bool> have(n.size(), false);
    for (Element x = 0; x < m.size(); ++x) {
      if (!have[proj[x]]) {
        have[proj[x]] = true;
        nrep[proj[x]] = reps[x];
      }
    }
    std::vector<Word> assignment;
    for (Element e : violation->assignment) assignment.push_back(nrep[e]);
    std::size_t const omega = idempotent_power(n);
    EssentialCertificate cert;
    cert.identity = violation->identity->name;
    cert.u        = expand(violation->identity->lhs, assignment, omega);
    cert.v        = expand(violation->identity->rhs, assignment, omega);
    Element const pu = phi.eval(cert.u), pv = phi.eval(cert.v);
    // u and v land in different classes, so some pair of contexts of length
    // at least s separates them. Shortest such context word per element,
    // found by BFS over (element, min(length, s)).
    std::size_t const s = out.quotient.s;
    std::map<std::pair<Element, std::size_t>, Word> seen{{{m.identity(), 0}, {}}};
    std::vector<std::pair<Element, std::size_t>> queue{{m.identity(), 0}};
    std::map<Element, Word> ctx;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto [e, len] = queue[i];
      Word const w  = seen[queue[i]];
      if (len == s) ctx.emplace(e, w);
      for (Letter a = 0; a < phi.alphabet.size(); ++a) {
        std::pair<Element, std::size_t> nxt{m(e, phi.images[a]), std::min(len + 1, s)};
        if (seen.emplace(nxt, concat(w, Word{a})).second) queue.push_back(nxt);
      }
    }
    for (auto const& [a, x] : ctx) {
      for (auto const& [b, y] : ctx) {
        Element l = m(m(a, pu), b), r = m(m(a, pv), b);
        if (l != r) {
          cert.x   = x;
          cert.y   = y;
          cert.xuy = l;
          cert.xvy = r;
          out.certificate = cert;
          return out;
        }
      }
    }
    throw CertificateError("no separating context for a violated identity",
                           phi.alphabet.format(cert.u) + " / "
                               + phi.alphabet.format(cert.v));
  }

  bool is_quasi_v(Stamp const& phi, VarietyId v) {
    return satisfies_variety(stability_index(phi).stable_monoid.monoid, v);
  }

  EssentialVerdict is_quasi_essentially_v(Stamp const& phi, VarietyId v,
                                          Limits const& limits) {
    return is_essentially_v(stable_stamp(phi, limits).stamp, v);
  }

  namespace {

    void require_stable(Stamp const& phi) {
      if (stability_index(phi).s != 1) {
        throw InputError("equational check needs a stamp of stability index 1");
      }
    }

    std::vector<Letter> idempotent_letters(Stamp const& phi) {
      std::vector<Letter> out;
      for (Letter a = 0; a < phi.alphabet.size(); ++a) {
        if (phi.target().is_idempotent(phi.images[a])) out.push_back(a);
      }
      return out;
    }

  }  // namespace

  std::optional<EquationWitness> ecom_violation(Stamp const& phi) {
    require_stable(phi);
    auto const          idem = idempotent_letters(phi);
    std::size_t const   k    = phi.alphabet.size();
    for (Letter e : idem) {
      for (Letter f : idem) {
        for (Letter x = 0; x < k; ++x) {
          for (Letter y = 0; y < k; ++y) {
            if (phi.eval(Word{e, x, y, f}) != phi.eval(Word{e, y, x, f})) {
              return EquationWitness{0, {e, x, y, f}};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<EquationWitness> com_equation_violation(Stamp const& phi) {
    require_stable(phi);
    auto const        idem = idempotent_letters(phi);
    std::size_t const k    = phi.alphabet.size();
    for (Letter e : idem) {
      for (Letter f : idem) {
        for (Letter g : idem) {
          for (Letter x = 0; x < k; ++x) {
            for (Letter y = 0; y < k; ++y) {
              if (phi.eval(Word{e, x, f, y, g}) != phi.eval(Word{e, y, f, x, g})) {
                return EquationWitness{1, {e, x, f, y, g}};
              }
            }
          }
        }
      }
    }
    for (Letter e : idem) {
      for (Letter f : idem) {
        if (phi.eval(Word{e, f, e, f}) != phi.eval(Word{e, f})) {
          return EquationWitness{2, {e, f}};
        }
      }
    }
    for (Letter e : idem) {
      for (Letter f : idem) {
        for (Letter x = 0; x < k; ++x) {
          for (Letter y = 0; y < k; ++y) {
            if (phi.eval(Word{e, x, y, f}) != phi.eval(Word{e, y, e, f, x, f})) {
              return EquationWitness{3, {e, x, y, f}};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  OmegaPair omega_pair(Stamp const& phi, Word const& p, Word const& x,
                       Word const& y, Word const& z) {
    OmegaPair out;
    out.omega = idempotent_power(phi.target());
    Word xy   = concat(x, y);
    out.u     = p;
    for (std::size_t i = 0; i < out.omega; ++i) {
      out.u.insert(out.u.end(), xy.begin(), xy.end());
    }
    out.v = out.u;
    out.v.insert(out.v.end(), x.begin(), x.end());
    out.u.insert(out.u.end(), z.begin(), z.end());
    out.v.insert(out.v.end(), z.begin(), z.end());
    out.image_u = phi.eval(out.u);
    out.image_v = phi.eval(out.v);
    return out;
  }

}  // namespace progmon
