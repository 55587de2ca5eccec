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

#include "progmon/report/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "progmon/fooling/fooling.hpp"
#include "progmon/programs/builders.hpp"
#include "progmon/programs/pk.hpp"
#include "progmon/reglang/essentially.hpp"
#include "progmon/reglang/witnesses.hpp"
#include "progmon/sums/compress.hpp"
#include "progmon/sums/family.hpp"

namespace progmon {

  bool Report::pass() const {
    return std::all_of(items.begin(), items.end(), [](ReportItem const& i) { return i.pass; });
  }

  Json Report::to_json() const {
    Json list = Json::array();
    for (auto const& i : items) {
      list.push_back(
          Json{{"name", i.name}, {"pass", i.pass}, {"evidence", i.evidence}, {"data", i.data}});
    }
    return Json{{"title", title}, {"pass", pass()}, {"items", list}};
  }

  std::string Report::to_text() const {
    std::ostringstream out;
    out << title << "\n";
    for (auto const& i : items) {
      out << (i.pass ? "  [pass] " : "  [FAIL] ") << i.name;
      if (!i.evidence.empty()) {
        out << ": " << i.evidence;
      }
      out << "\n";
    }
    out << (pass() ? "all checks passed" : "some checks failed") << "\n";
    return out.str();
  }

  Report Report::from_json(Json const& j) {
    try {
      Report r;
      r.title = j.at("title").get<std::string>();
      for (auto const& i : j.at("items")) {
        r.items.push_back({i.at("name").get<std::string>(), i.at("pass").get<bool>(),
                           i.at("evidence").get<std::string>(), i.at("data")});
      }
      return r;
    } catch (Json::exception const& e) {
      throw InputError(std::string("malformed report: ") + e.what());
    }
  }

  namespace {

    std::string names_of(FiniteMonoid const& m, std::vector<Element> const& xs) {
      std::string out;
      for (Element x : xs) {
        out += (out.empty() ? "" : ", ") + m.name(x);
      }
      return "{" + out + "}";
    }

    std::string show(Alphabet const& sigma, Word const& w) {
      return w.empty() ? "ε" : sigma.format(w);
    }

    std::string describe(EssentialCertificate const& c, Alphabet const& sigma) {
      return "violates " + c.identity + " with u=" + show(sigma, c.u) + ", v="
             + show(sigma, c.v) + " in context (" + show(sigma, c.x) + ", "
             + show(sigma, c.y) + ")";
    }

    std::size_t int_power(std::size_t n, std::size_t k) {
      std::size_t v = 1;
      for (std::size_t i = 0; i < k; ++i) {
        v *= n;
      }
      return v;
    }

  }  // namespace

  // --- analyze -----------------------------------------------------------

  Report cmd_analyze(std::string const& regex, std::vector<VarietyId> const& varieties,
                     Limits const& limits) {
    Report r{"analyze " + regex, {}};
    auto const          syn = syntactic_stamp(regex, limits);
    Stamp const&        phi = syn.stamp;
    FiniteMonoid const& m   = phi.target();

    ReportItem stamp{"syntactic stamp", true, std::to_string(m.size()) + " elements", {}};
    stamp.data = Json{{"alphabet", phi.alphabet.symbols()},
                      {"monoid", monoid_to_json(m)},
                      {"images", phi.images},
                      {"accept", syn.accept}};
    if (auto bad = m.check_laws()) {
      stamp.pass     = false;
      stamp.evidence = *bad;
    }
    r.items.push_back(std::move(stamp));

    for (VarietyId v : varieties) {
      ReportItem item{"monoid in " + variety_name(v), true, "", {}};
      auto const viol = find_violation(m, v);
      item.data["value"] = !viol.has_value();
      if (viol) {
        item.evidence = "no: " + viol->identity->name + " fails at "
                        + names_of(m, viol->assignment);
      } else {
        item.evidence = "yes: every identity checked on all assignments";
      }
      r.items.push_back(std::move(item));
    }

    if (!satisfies_variety(m, VarietyId::DA)) {
      ReportItem item{"DA obstruction", true, "", {}};
      auto const o  = find_da_obstruction(m, limits);
      item.evidence = to_string(o, m);
      item.data["isomorphic_to_B2"] = isomorphic(m, b2_monoid());
      item.data["isomorphic_to_U"]  = isomorphic(m, u_monoid());
      if (isomorphic(m, b2_monoid())) {
        item.evidence += "; the monoid is isomorphic to B2";
      }
      r.items.push_back(std::move(item));
    }

    auto const analysis = stability_index(phi);
    ReportItem stab{"stability index", true, "s = " + std::to_string(analysis.s), {}};
    stab.data = Json{{"s", analysis.s},
                     {"stable_semigroup", analysis.stable_semigroup},
                     {"stable_monoid_size", analysis.stable_monoid.monoid.size()}};
    r.items.push_back(std::move(stab));

    std::optional<StableStamp> stable;
    try {
      stable = stable_stamp(phi, limits);
    } catch (ResourceError const& e) {
      r.items.push_back({"stable stamp", true, std::string("skipped: ") + e.what(), {}});
    }

    for (VarietyId v : varieties) {
      std::string const name = variety_name(v);
      bool const        q    = is_quasi_v(phi, v);
      r.items.push_back({"quasi-" + name, true, q ? "yes" : "no", Json{{"value", q}}});

      auto const ev = is_essentially_v(phi, v);
      ReportItem e{"essentially-" + name, true,
                   ev.holds ? "yes: context quotient of size "
                                  + std::to_string(ev.quotient.monoid.size()) + " lies in " + name
                            : "no",
                   Json{{"value", ev.holds}}};
      if (!ev.holds && ev.certificate) {
        e.evidence += ": " + describe(*ev.certificate, phi.alphabet);
      }
      r.items.push_back(std::move(e));

      if (stable) {
        auto const qe = is_quasi_essentially_v(phi, v, limits);
        ReportItem item{"quasi-essentially-" + name, true, qe.holds ? "yes" : "no",
                        Json{{"value", qe.holds}}};
        if (!qe.holds && qe.certificate) {
          item.evidence += ": " + describe(*qe.certificate, stable->stamp.alphabet);
        }
        // A quasi-V stamp is quasi-essentially-V.
        if (q && !qe.holds) {
          item.pass = false;
          item.evidence += " (inconsistent with the quasi-" + name + " verdict)";
        }
        r.items.push_back(std::move(item));
      }
    }
    return r;
  }

  // --- J is not tame -----------------------------------------------------

  Report cmd_nontameness_j(Limits const& limits) {
    Report         r{"report nontameness-j", {}};
    Alphabet const sigma = Alphabet::from_chars("abc");
    Dfa const      lang  = compile("(a+b)*ac~", sigma);

    bool programs_ok = true;
    for (std::size_t n = 2; n <= 8; ++n) {
      JTrick const j  = build_j_trick(n);
      bool const   inj = satisfies_variety(j.recognizer.program.target(), VarietyId::J);
      auto const   chk = recognizes_exhaustive(j.recognizer, lang, limits);
      ReportItem   item{"program of range " + std::to_string(n) + " recognizes (a+b)*ac+",
                      chk.ok && inj, "exhaustive over " + std::to_string(chk.words_checked) + " words",
                      Json{{"length", j.recognizer.program.length()},
                           {"monoid_size", j.recognizer.program.target().size()},
                           {"monoid_in_J", inj}}};
      if (!chk.ok && chk.counterexample) {
        item.evidence = "disagrees on " + sigma.format(*chk.counterexample);
      }
      programs_ok = programs_ok && item.pass;
      r.items.push_back(std::move(item));
    }

    auto const  syn  = syntactic_stamp(lang, limits);
    auto const  an   = stability_index(syn.stamp);
    auto const  qej  = is_quasi_essentially_v(syn.stamp, VarietyId::J, limits);
    auto const  pair = omega_pair(syn.stamp, sigma.parse("aa"), sigma.parse("bb"),
                                  sigma.parse("aa"), sigma.parse("cc"));
    bool const  in_u = lang.accepts(pair.u);
    bool const  in_v = lang.accepts(pair.v);
    std::string k    = std::to_string(pair.omega);
    ReportItem  verdict{"stable stamp of (a+b)*ac+ is not essentially-J",
                       !qej.holds && an.s == 2 && in_u && !in_v,
                       "(aa)((bb)(aa))^" + k + "(cc) = " + sigma.format(pair.u) + " is in, (aa)((bb)(aa))^"
                           + k + "(bb)(cc) = " + sigma.format(pair.v) + " is not",
                       Json{{"s", an.s},
                            {"qe_j", qej.holds},
                            {"k", pair.omega},
                            {"u", sigma.format(pair.u)},
                            {"v", sigma.format(pair.v)},
                            {"u_in", in_u},
                            {"v_in", in_v}}};
    r.items.push_back(verdict);
    r.items.push_back({"J is not tame", programs_ok && verdict.pass,
                       "programs over J for every checked length, yet not quasi-essentially-J",
                       Json::object()});
    return r;
  }

  // --- DA experiments ----------------------------------------------------

  Report cmd_da_experiments(std::size_t k_max, std::size_t n, std::uint64_t seed,
                            Limits const& limits) {
    if (k_max == 0) {
      throw InputError("k_max must be at least 1");
    }
    Report          r{"report da", {}};
    std::mt19937_64 rng(seed);

    std::vector<MkFamily> families;
    for (std::size_t k = 1; k <= k_max; ++k) {
      families.push_back(mk_stamp(k, limits));
      MkFamily const& f = families.back();
      KSet const      s = random_kset(rng, n, k, 0.3);
      auto const      p = build_pk(s, f);
      auto const      c = recognizes_exhaustive(p, [&](Word const& w) { return in_k_language(s, w); },
                                                limits);
      std::size_t const bound = 4 * int_power(n, k);
      r.items.push_back({"P_" + std::to_string(k) + " at n=" + std::to_string(n),
                         c.ok && p.program.length() <= bound,
                         "exhaustive over " + std::to_string(c.words_checked) + " words; length "
                             + std::to_string(p.program.length()) + " <= " + std::to_string(bound),
                         Json{{"kset", kset_to_json(s)},
                              {"length", p.program.length()},
                              {"bound", bound},
                              {"monoid_size", f.syntactic.stamp.target().size()}}});
    }

    for (MkFamily const& f : families) {
      if (f.k > 2) {
        break;  // Y_3 inputs are already too many to enumerate at useful n
      }
      Alphabet const sigma = f.k == 1 ? binary_alphabet() : f.letters;
      MonoidPtr      m     = f.syntactic.stamp.monoid;
      Program        p(n, sigma, m, {});
      std::uniform_int_distribution<std::size_t> pos(1, std::max<std::size_t>(n, 1));
      std::uniform_int_distribution<Element>     el(0, static_cast<Element>(m->size() - 1));
      for (std::size_t i = 0; i < n * n; ++i) {
        Instruction in{pos(rng), {}};
        for (std::size_t a = 0; a < sigma.size(); ++a) {
          in.map.push_back(el(rng));
        }
        p.instructions.push_back(std::move(in));
      }
      auto const  c     = compress_program(p, f.syntactic.accept,
                                           mk_certificate(f, f.syntactic.accept), limits);
      double      scale = static_cast<double>(sigma.size() * m->size() * m->size());
      std::size_t nk    = int_power(n, std::max<std::size_t>(f.k, 1));
      scale *= static_cast<double>(nk);
      double const constant = static_cast<double>(c.indices.size()) / scale;
      r.items.push_back({"compression over M_" + std::to_string(f.k),
                         c.direct_equivalent && constant <= 4.0,
                         "exhaustive over " + std::to_string(c.words_checked) + " words; "
                             + std::to_string(p.length()) + " -> " + std::to_string(c.indices.size())
                             + " instructions",
                         Json{{"length", p.length()},
                              {"kept", c.indices.size()},
                              {"level", c.level},
                              {"constant", constant}}});
    }

    {
      MkFamily const& f1 = families.front();
      Alphabet const& bin = binary_alphabet();
      Program const   scan =
          from_stamp(Stamp(bin, f1.syntactic.stamp.monoid,
                           {f1.syntactic.stamp.images[0], f1.syntactic.stamp.images[1]}),
                     n);
      Program padded = scan;
      for (std::size_t i = 1; i < n; ++i) {
        padded.instructions.insert(padded.instructions.end(), scan.instructions.begin(),
                                   scan.instructions.end());
      }
      auto const c = compress_program(padded, f1.syntactic.accept,
                                      mk_certificate(f1, f1.syntactic.accept), limits);
      r.items.push_back({"compression of a padded program over M_1",
                         c.direct_equivalent && c.indices.size() <= 4 * n,
                         std::to_string(padded.length()) + " -> " + std::to_string(c.indices.size())
                             + " instructions, exhaustive over " + std::to_string(c.words_checked)
                             + " words",
                         Json{{"length", padded.length()}, {"kept", c.indices.size()}}});
    }

    struct FoolingRun {
      std::vector<std::string> delta;
      std::string              target;
      std::string              program_language;
    };
    for (FoolingRun const& run : std::vector<FoolingRun>{
             {{"c", "ab"}, "(c+ab)*", "(a+b+c)*a"},
             {{"b", "ab"}, "(b+ab)*", "(a+b)*ab(a+b)*"},
             {{"a", "b"}, "b*((ab*)(ab*))*", "(a+b)*ab(a+b)*"}}) {
      auto const        cfg    = make_fooling_config(run.delta);
      std::string const dname  = "{" + run.delta[0] + "," + run.delta[1] + "}";
      auto const        safety = check_safe_delta(cfg, 12, 12, seed);
      r.items.push_back({"Δ=" + dname + " is safe", safety.safe,
                         "assumption checked on every mask up to length "
                             + std::to_string(safety.exhaustive_upto),
                         Json{{"masks", safety.masks_checked}}});

      auto const syn    = syntactic_stamp(compile(run.program_language, cfg.sigma), limits);
      Program    p      = from_stamp(syn.stamp, 40);
      Dfa const  target = compile(run.target, cfg.sigma);
      auto const fp     = fooling_pair(p, syn.accept, cfg, target);
      bool const found  = fp.status == FoolingPair::Status::Found;
      ReportItem item{"fooling " + run.target + " against the scan of " + run.program_language,
                      found && fp.in0 != fp.in1 && fp.out0 == fp.out1,
                      found ? "w0=" + cfg.sigma.format(fp.w0) + " w1=" + cfg.sigma.format(fp.w1)
                            : "insufficient range: " + fp.note,
                      Json{{"n", 40},
                           {"mask", format_mask(fp.fix.mask, cfg.sigma)},
                           {"t", syn.stamp.target().name(fp.fix.t)},
                           {"depth", fp.fix.depth}}};
      r.items.push_back(std::move(item));
    }
    return r;
  }

}  // namespace progmon
