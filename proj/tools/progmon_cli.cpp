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

// Command line front end. Every command builds a Report (or a JSON document)
// and maps the outcome to the exit code: 0 when all checks pass, 1 when a
// verdict fails, 2 for usage, input and resource errors.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "progmon/algebra/green.hpp"
#include "progmon/fooling/fooling.hpp"
#include "progmon/io/json.hpp"
#include "progmon/programs/builders.hpp"
#include "progmon/programs/pk.hpp"
#include "progmon/report/report.hpp"
#include "progmon/sums/compress.hpp"
#include "progmon/sums/family.hpp"

using namespace progmon;

namespace {

  struct Options {
    bool          json = false;
    std::uint64_t seed = 0;
    Limits        limits;
  };

  int emit(Report const& r, Options const& o) {
    if (o.json) {
      std::cout << r.to_json().dump(2) << "\n";
    } else {
      std::cout << r.to_text();
    }
    return r.pass() ? 0 : 1;
  }

  std::vector<std::string> split_list(std::string const& text) {
    std::vector<std::string> out;
    std::string              cur;
    for (char c : text) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur.push_back(c);
      }
    }
    out.push_back(cur);
    return out;
  }

  Recognizer load_program(std::string const& path, std::string const& monoid_path) {
    Json j = read_json_file(path);
    if (!monoid_path.empty()) {
      j["monoid"] = read_json_file(monoid_path);
    }
    return program_from_json(j, std::filesystem::path(path).parent_path().string());
  }

  // --- program -----------------------------------------------------------

  int program_eval(Options const& o, std::string const& file, std::vector<std::string> const& words) {
    Recognizer const r = load_program(file, "");
    Report           rep{"program eval", {}};
    for (auto const& text : words) {
      Word const    w = r.program.alphabet.parse(text);
      if (w.size() != r.program.range) {
        throw InputError("word length differs from the program range: " + text);
      }
      Element const out = eval(r.program, w);
      bool const    acc = r.accepts(w);
      rep.items.push_back({text, true,
                           "output " + r.program.target().name(out) + (acc ? ", accepted" : ", rejected"),
                           Json{{"output", r.program.target().name(out)}, {"accepted", acc}}});
    }
    return emit(rep, o);
  }

  int program_check(Options const& o, std::string const& file, std::string const& regex) {
    Recognizer const r    = load_program(file, "");
    Dfa const        lang = compile(regex, r.program.alphabet);
    auto const       chk  = recognizes_exhaustive(r, lang, o.limits);
    Report           rep{"program check " + regex, {}};
    ReportItem       item{"recognition at length " + std::to_string(r.program.range), chk.ok,
                    "exhaustive over " + std::to_string(chk.words_checked) + " words",
                    Json{{"words", chk.words_checked}}};
    if (chk.counterexample) {
      item.evidence           = "disagrees on " + r.program.alphabet.format(*chk.counterexample);
      item.data["counterexample"] = r.program.alphabet.format(*chk.counterexample);
    }
    rep.items.push_back(std::move(item));
    return emit(rep, o);
  }

  // --- sum ---------------------------------------------------------------

  int sum_show(Options const& o, std::string const& expr, std::string const& letters,
               std::vector<std::string> const& words) {
    Alphabet const sigma = Alphabet::from_chars(letters);
    SumExpr const  e     = parse_sum(expr, sigma);
    Dfa const      d     = sum_dfa(e, sigma);
    Report         rep{"sum " + to_string(e, sigma), {}};
    rep.items.push_back({"level", true, std::to_string(e.level()), Json{{"level", e.level()}}});
    rep.items.push_back({"regular expression", true, to_string(to_regex(e, sigma)),
                         Json{{"states", d.states}}});
    for (auto const& text : words) {
      Word const w     = sigma.parse(text);
      bool const in    = sum_member(e, sigma, w);
      bool const fast  = sum_matches(e, w);
      rep.items.push_back({"member " + text, in == fast, in ? "yes" : "no", Json{{"value", in}}});
    }
    return emit(rep, o);
  }

  int sum_compress(Options const& o, std::string const& file, std::size_t k) {
    Recognizer const r = load_program(file, "");
    MkFamily const   f = mk_stamp(k, o.limits);
    if (!(r.program.target() == f.syntactic.stamp.target())) {
      throw InputError("the program's monoid is not M_" + std::to_string(k));
    }
    BoolCombo const cert = mk_certificate(f, r.accept);
    Compression     c;
    Report          rep{"sum compress", {}};
    try {
      c = compress_program(r.program, r.accept, cert, o.limits);
    } catch (CertificateError const& e) {
      rep.items.push_back({"compression", false, std::string(e.what()) + ": " + e.witness(), {}});
      return emit(rep, o);
    }
    Json out      = program_to_json(Recognizer{c.program, r.accept});
    rep.items.push_back({"compression", c.direct_equivalent,
                         std::to_string(r.program.length()) + " -> " + std::to_string(c.indices.size())
                             + " instructions, exhaustive over " + std::to_string(c.words_checked)
                             + " words",
                         Json{{"indices", c.indices}, {"level", c.level}, {"program", out}}});
    return emit(rep, o);
  }

  // --- fooling -----------------------------------------------------------

  int fooling(Options const& o, std::string const& program_file, std::string const& monoid_file,
              std::string const& delta, std::size_t n, std::string target_text, std::size_t mod) {
    Recognizer const r = load_program(program_file, monoid_file);
    if (n != 0 && n != r.program.range) {
      throw InputError("--n differs from the program range");
    }
    FoolingConfig const cfg = make_fooling_config(split_list(delta), &r.program.alphabet);
    Dfa                 target;
    if (!target_text.empty()) {
      target = compile(target_text, cfg.sigma);
    } else if (equivalent(cfg.star, universal(cfg.sigma))) {
      // Δ* is everything: count the first letter modulo `mod` instead.
      std::string first = cfg.sigma.symbol(0), rest;
      for (Letter a = 1; a < cfg.sigma.size(); ++a) {
        rest += (rest.empty() ? "" : "+") + cfg.sigma.symbol(a);
      }
      std::string const others = rest.empty() ? "" : "(" + rest + ")*";
      std::string block;
      for (std::size_t i = 0; i < mod; ++i) {
        block += "(" + first + others + ")";
      }
      target_text = others + "(" + block + ")*";
      target      = compile(target_text, cfg.sigma);
    } else {
      target      = cfg.star;
      target_text = "(";
      for (auto const& w : split_list(delta)) {
        target_text += (target_text.size() > 1 ? "+" : "") + w;
      }
      target_text += ")*";
    }

    auto const safety = check_safe_delta(cfg, 12, 12, o.seed);
    auto const fp     = fooling_pair(r.program, r.accept, cfg, target);
    auto const& m     = r.program.target();
    bool const found  = fp.status == FoolingPair::Status::Found;
    Json cert{{"status", found ? "found" : "insufficient range"},
              {"target", target_text},
              {"delta", split_list(delta)},
              {"n", r.program.range},
              {"delta_safe_upto", safety.safe ? safety.exhaustive_upto : 0},
              {"mask", format_mask(fp.fix.mask, cfg.sigma)},
              {"t", m.name(fp.fix.t)},
              {"depth", fp.fix.depth},
              {"fixed", fp.fix.fixed_after}};
    if (found) {
      cert["w0"]          = cfg.sigma.format(fp.w0);
      cert["w1"]          = cfg.sigma.format(fp.w1);
      cert["outputs"]     = Json::array({m.name(fp.out0), m.name(fp.out1)});
      cert["memberships"] = Json::array({fp.in0, fp.in1});
      cert["accepted"]    = Json::array({fp.accept0, fp.accept1});
    } else {
      cert["note"] = fp.note;
    }
    if (o.json) {
      std::cout << cert.dump(2) << "\n";
      return found && safety.safe ? 0 : 1;
    }
    Report rep{"fooling " + target_text, {}};
    rep.items.push_back({"Δ safe (bounded check)", safety.safe,
                         "every mask up to length " + std::to_string(safety.exhaustive_upto), {}});
    rep.items.push_back({"fixed mask", true,
                         format_mask(fp.fix.mask, cfg.sigma) + " with output " + m.name(fp.fix.t), {}});
    rep.items.push_back({"fooling pair", found,
                         found ? "w0=" + cfg.sigma.format(fp.w0) + " (in) and w1="
                                     + cfg.sigma.format(fp.w1) + " (out) both give "
                                     + m.name(fp.out0)
                               : fp.note,
                         {}});
    return emit(rep, o);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"progmon: programs over finite monoids"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options     o;
  std::size_t monoid_cap = o.limits.syntactic_monoid_cap;
  std::size_t enum_cap   = o.limits.enumeration_cap;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--seed", o.seed, "Seed for random choices")->capture_default_str();
  app.add_option("--enumeration-cap", enum_cap, "Largest exhaustive enumeration")->capture_default_str();
  app.add_option("--monoid-cap", monoid_cap, "Largest syntactic monoid")->capture_default_str();

  std::function<int()> action;

  auto* analyze = app.add_subcommand("analyze", "Algebraic analysis of a regular language");
  std::string regex;
  std::string varieties = "I,Com,J,DA,A";
  analyze->add_option("regex", regex, "Regular expression, e.g. (a+b)*ac~")->required();
  analyze->add_option("--varieties", varieties, "Comma-separated varieties")->capture_default_str();
  bool eggbox = false;
  analyze->add_flag("--eggbox", eggbox, "Print the eggbox diagram of the syntactic monoid (DOT)");
  analyze->callback([&] {
    action = [&] {
      if (eggbox) {
        std::cout << eggbox_dot(syntactic_stamp(regex, o.limits).stamp.target());
        return 0;
      }
      std::vector<VarietyId> vs;
      for (auto const& v : split_list(varieties)) {
        vs.push_back(parse_variety(v));
      }
      return emit(cmd_analyze(regex, vs, o.limits), o);
    };
  });

  auto* program = app.add_subcommand("program", "Evaluate, check or build programs");
  program->require_subcommand(1);
  std::string              program_file;
  std::vector<std::string> words;
  auto* p_eval = program->add_subcommand("eval", "Evaluate a program on words");
  p_eval->add_option("--program", program_file, "Program JSON file")->required();
  p_eval->add_option("--word", words, "Input word (repeatable)")->required();
  p_eval->callback([&] { action = [&] { return program_eval(o, program_file, words); }; });

  auto* p_check = program->add_subcommand("check", "Exhaustive recognition check");
  p_check->add_option("--program", program_file, "Program JSON file")->required();
  p_check->add_option("--regex", regex, "Language to compare against")->required();
  p_check->callback([&] { action = [&] { return program_check(o, program_file, regex); }; });

  auto*       p_build = program->add_subcommand("build", "Print a program as JSON");
  std::string kind;
  std::size_t n = 0;
  std::string kset_file, variety = "J";
  p_build->add_option("kind", kind, "jtrick, pk or essentially")
      ->required()
      ->check(CLI::IsMember({"jtrick", "pk", "essentially"}));
  p_build->add_option("--n", n, "Range");
  p_build->add_option("--kset", kset_file, "k-set JSON file (pk)");
  p_build->add_option("--regex", regex, "Language (essentially)");
  p_build->add_option("--variety", variety, "Variety (essentially)")->capture_default_str();
  p_build->callback([&] {
    action = [&] {
      Recognizer r;
      if (kind == "jtrick") {
        r = build_j_trick(n).recognizer;
      } else if (kind == "pk") {
        KSet const s = kset_from_json(read_json_file(kset_file));
        r            = build_pk(s.n, s.k, s, o.limits);
      } else {
        auto const syn = syntactic_stamp(regex, o.limits);
        r = build_essentially_v_program(syn.stamp, parse_variety(variety), syn.accept, n, o.limits);
      }
      std::cout << program_to_json(r).dump(o.json ? 2 : -1) << "\n";
      return 0;
    };
  });

  auto* p_norm = program->add_subcommand("normalize", "Merge instructions per position (commutative monoids)");
  p_norm->add_option("--program", program_file, "Program JSON file")->required();
  p_norm->callback([&] {
    action = [&] {
      Recognizer r = load_program(program_file, "");
      r.program    = single_scan_normalize(r.program);
      std::cout << program_to_json(r).dump(o.json ? 2 : -1) << "\n";
      return 0;
    };
  });

  auto* sum = app.add_subcommand("sum", "SUM expressions and compression");
  sum->require_subcommand(1);
  std::string expr, letters;
  auto*       s_show = sum->add_subcommand("show", "Level, regular expression and membership");
  s_show->add_option("expr", expr, "e.g. SPLIT(STAR{b}, a, STAR{a,b}, L)")->required();
  s_show->add_option("--alphabet", letters, "Letters, one character each")->required();
  s_show->add_option("--word", words, "Words to test");
  s_show->callback([&] { action = [&] { return sum_show(o, expr, letters, words); }; });
  std::size_t k       = 1;
  auto*       s_comp  = sum->add_subcommand("compress", "Compress a program over M_k");
  s_comp->add_option("--program", program_file, "Program JSON file over M_k")->required();
  s_comp->add_option("--k", k, "Level")->capture_default_str();
  s_comp->callback([&] { action = [&] { return sum_compress(o, program_file, k); }; });

  auto*       fool = app.add_subcommand("fooling", "Fooling pair for a program over a DA monoid");
  std::string monoid_file, delta = "c,ab", target;
  std::size_t mod = 2;
  fool->add_option("--program", program_file, "Program JSON file")->required();
  fool->add_option("--monoid", monoid_file, "Monoid JSON file overriding the program's");
  fool->add_option("--delta", delta, "Comma-separated words of Δ")->capture_default_str();
  fool->add_option("--n", n, "Expected range");
  fool->add_option("--target", target, "Target language (default Δ*, or MOD_k when Δ* = Σ*)");
  fool->add_option("--mod", mod, "Modulus for the default counting target")->capture_default_str();
  fool->callback([&] {
    action = [&] { return fooling(o, program_file, monoid_file, delta, n, target, mod); };
  });

  auto*       count = app.add_subcommand("count", "Bound i^(i^2) 2^i (n i^2)^l on recognized languages");
  std::size_t ci = 1, cn = 1, cl = 1;
  count->add_option("--i", ci, "Monoid size")->required();
  count->add_option("--n", cn, "Range")->required();
  count->add_option("--l", cl, "Program length")->required();
  count->callback([&] {
    action = [&] {
      auto const b = count_bound(ci, cn, cl);
      if (o.json) {
        std::cout << Json{{"i", ci}, {"n", cn}, {"l", cl}, {"bound", b.str()}}.dump(2) << "\n";
      } else {
        std::cout << b.str() << "\n";
      }
      return 0;
    };
  });

  auto* report = app.add_subcommand("report", "Canned experiments");
  report->require_subcommand(1);
  auto* nontame = report->add_subcommand("nontameness-j", "J is not tame");
  nontame->callback([&] { action = [&] { return emit(cmd_nontameness_j(o.limits), o); }; });
  auto*       da    = report->add_subcommand("da", "P_k, compression and fooling experiments");
  std::size_t k_max = 2;
  std::size_t da_n  = 6;
  da->add_option("--k-max", k_max, "Largest k")->capture_default_str();
  da->add_option("--n", da_n, "Range for P_k and compression")->capture_default_str();
  da->callback([&] { action = [&] { return emit(cmd_da_experiments(k_max, da_n, o.seed, o.limits), o); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.limits.syntactic_monoid_cap = monoid_cap;
  o.limits.enumeration_cap      = enum_cap;
  try {
    return action();
  } catch (CertificateError const& e) {
    std::cerr << "certificate error: " << e.what() << " (" << e.witness() << ")\n";
    return 1;
  } catch (InputError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (ResourceError const& e) {
    std::cerr << "resource error: " << e.what() << "\n";
  } catch (Cancelled const& e) {
    std::cerr << "cancelled: " << e.what() << "\n";
  }
  return 2;
}
