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

#include "progmon/fooling/fooling.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <stdexcept>

#include "progmon/algebra/green.hpp"
#include "progmon/algebra/variety.hpp"

namespace progmon {

  // --- masks -------------------------------------------------------------

  std::size_t Mask::fixed_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](Letter c) { return c != kFree; }));
  }

  Mask Mask::with(std::size_t p, Letter a) const {
    Mask m = *this;
    m.cells.at(p - 1) = a;
    return m;
  }

  bool is_submask(Mask const& sub, Mask const& of) {
    if (sub.size() != of.size()) {
      return false;
    }
    for (std::size_t i = 0; i < of.size(); ++i) {
      if (of.cells[i] != kFree && sub.cells[i] != of.cells[i]) {
        return false;
      }
    }
    return true;
  }

  Mask parse_mask(std::string_view text, Alphabet const& sigma) {
    Mask        m;
    std::string token;
    auto        flush = [&] {
      if (token.empty()) {
        return;
      }
      m.cells.push_back(token == "_" || token == "⊥" ? kFree : sigma.letter(token));
      token.clear();
    };
    if (sigma.single_char()) {
      for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.substr(i, 3) == "⊥") {
          m.cells.push_back(kFree);
          i += 2;
        } else if (text[i] == '_') {
          m.cells.push_back(kFree);
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
          m.cells.push_back(sigma.letter(text.substr(i, 1)));
        }
      }
      return m;
    }
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '.') {
        flush();
      } else {
        token.push_back(c);
      }
    }
    flush();
    return m;
  }

  std::string format_mask(Mask const& m, Alphabet const& sigma) {
    std::string out;
    bool const  compact = sigma.single_char();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!compact && i > 0) {
        out.push_back('.');
      }
      out += m.cells[i] == kFree ? std::string("_") : sigma.symbol(m.cells[i]);
    }
    return out;
  }

  // --- configuration -----------------------------------------------------

  FoolingConfig make_fooling_config(std::vector<std::string> const& words,
                                    Alphabet const*                 sigma) {
    if (words.empty()) {
      throw InputError("Δ must contain at least one word");
    }
    Alphabet letters;
    if (sigma != nullptr) {
      letters = *sigma;
    } else {
      std::set<std::string> chars;
      for (auto const& w : words) {
        for (char c : w) {
          chars.insert(std::string(1, c));
        }
      }
      letters = Alphabet(std::vector<std::string>(chars.begin(), chars.end()));
    }
    FoolingConfig      cfg{letters, {}, 0, {}};
    std::vector<Regex> options;
    for (auto const& text : words) {
      Word w = letters.parse(text);
      if (w.empty()) {
        throw InputError("Δ words must be non-empty");
      }
      std::vector<Regex> parts;
      for (Letter a : w) {
        parts.push_back(Regex::sym(letters.symbol(a)));
      }
      options.push_back(Regex::seq(std::move(parts)));
      cfg.l = std::max(cfg.l, w.size());
      cfg.delta.push_back(std::move(w));
    }
    cfg.star = compile(Regex::star(Regex::alt(std::move(options))), letters);
    if (cfg.star.states > 64 || letters.size() > 64) {
      throw ResourceError("Δ* automaton or alphabet too large for mask analysis");
    }
    return cfg;
  }

  std::vector<bool> dangerous_flags(Mask const& m, FoolingConfig const& cfg) {
    std::size_t const n = m.size();
    std::size_t const l = cfg.l;
    std::size_t const reach = 2 * l - 2;
    std::vector<bool> d(n, false);
    for (std::size_t p = 1; p <= n; ++p) {
      if (p <= l || p + l >= n + 1) {
        d[p - 1] = true;
      }
    }
    for (std::size_t q = 1; q <= n; ++q) {
      if (m.is_free(q)) {
        continue;
      }
      std::size_t lo = q > reach ? q - reach : 1;
      std::size_t hi = std::min(n, q + reach);
      for (std::size_t p = lo; p <= hi; ++p) {
        d[p - 1] = true;
      }
    }
    return d;
  }

  std::vector<std::size_t> dangerous_positions(Mask const& m,
                                               FoolingConfig const& cfg) {
    std::vector<std::size_t> out;
    auto                     d = dangerous_flags(m, cfg);
    for (std::size_t p = 1; p <= d.size(); ++p) {
      if (d[p - 1]) {
        out.push_back(p);
      }
    }
    return out;
  }

  // --- reachability over constrained positions ---------------------------

  namespace {

    using Bits = std::uint64_t;

    // Letters allowed at each position.
    std::vector<Bits> allowed_letters(Mask const& m, std::size_t k) {
      Bits const        all = k == 64 ? ~Bits{0} : (Bits{1} << k) - 1;
      std::vector<Bits> out;
      for (Letter c : m.cells) {
        out.push_back(c == kFree ? all : Bits{1} << c);
      }
      return out;
    }

    // Forward and backward state sets of the Δ* automaton (at most 64
    // states) under per-position letter constraints.
    class Reach {
     public:
      Reach(Dfa const& d, std::vector<Bits> const& allowed)
          : d_(d), allowed_(allowed) {
        std::size_t const n = allowed.size();
        fwd_.assign(n + 1, 0);
        bwd_.assign(n + 1, 0);
        fwd_[0] = Bits{1} << d.initial;
        for (std::size_t i = 0; i < n; ++i) {
          fwd_[i + 1] = step(fwd_[i], allowed[i]);
        }
        for (State q = 0; q < d.states; ++q) {
          if (d.accepting[q]) {
            bwd_[n] |= Bits{1} << q;
          }
        }
        for (std::size_t i = n; i > 0; --i) {
          Bits b = 0;
          for (State q = 0; q < d.states; ++q) {
            for (Letter a = 0; a < d.alphabet.size(); ++a) {
              if ((allowed[i - 1] >> a & 1U) && (bwd_[i] >> d.next(q, a) & 1U)) {
                b |= Bits{1} << q;
                break;
              }
            }
          }
          bwd_[i - 1] = b;
        }
      }

      bool compatible() const {
        return (bwd_[0] >> d_.initial) & 1U;
      }

      /// Whether position p (1-based) can be set to a with the rest kept.
      bool can_fix(std::size_t p, Letter a) const {
        if (!(allowed_[p - 1] >> a & 1U)) {
          return false;
        }
        for (State q = 0; q < d_.states; ++q) {
          if ((fwd_[p - 1] >> q & 1U) && (bwd_[p] >> d_.next(q, a) & 1U)) {
            return true;
          }
        }
        return false;
      }

      std::optional<Word> least() const {
        if (!compatible()) {
          return std::nullopt;
        }
        Word  w;
        State q = d_.initial;
        for (std::size_t i = 0; i < allowed_.size(); ++i) {
          for (Letter a = 0; a < d_.alphabet.size(); ++a) {
            if ((allowed_[i] >> a & 1U) && (bwd_[i + 1] >> d_.next(q, a) & 1U)) {
              w.push_back(a);
              q = d_.next(q, a);
              break;
            }
          }
        }
        return w;
      }

     private:
      Bits step(Bits from, Bits letters) const {
        Bits to = 0;
        for (State q = 0; q < d_.states; ++q) {
          if (!(from >> q & 1U)) {
            continue;
          }
          for (Letter a = 0; a < d_.alphabet.size(); ++a) {
            if (letters >> a & 1U) {
              to |= Bits{1} << d_.next(q, a);
            }
          }
        }
        return to;
      }

      Dfa const&               d_;
      std::vector<Bits> const& allowed_;
      std::vector<Bits>        fwd_, bwd_;
    };

    // Least word of the given length accepted by an arbitrary automaton
    // under per-position letter constraints.
    std::optional<Word> least_word(Dfa const& d, std::vector<Bits> const& allowed) {
      std::size_t const              n = allowed.size();
      std::vector<std::vector<bool>> live(n + 1, std::vector<bool>(d.states, false));
      for (State q = 0; q < d.states; ++q) {
        live[n][q] = d.accepting[q];
      }
      for (std::size_t i = n; i > 0; --i) {
        for (State q = 0; q < d.states; ++q) {
          for (Letter a = 0; a < d.alphabet.size() && !live[i - 1][q]; ++a) {
            live[i - 1][q] = (allowed[i - 1] >> a & 1U) && live[i][d.next(q, a)];
          }
        }
      }
      if (!live[0][d.initial]) {
        return std::nullopt;
      }
      Word  w;
      State q = d.initial;
      for (std::size_t i = 0; i < n; ++i) {
        for (Letter a = 0; a < d.alphabet.size(); ++a) {
          if ((allowed[i] >> a & 1U) && live[i + 1][d.next(q, a)]) {
            w.push_back(a);
            q = d.next(q, a);
            break;
          }
        }
      }
      return w;
    }

    void check_mask(Mask const& m, FoolingConfig const& cfg) {
      for (Letter c : m.cells) {
        if (c != kFree && c >= cfg.sigma.size()) {
          throw InputError("mask letter out of range");
        }
      }
    }

    // The mask with every free dangerous position taken from w.
    Mask pin_dangerous(Mask const& m, Word const& w, std::vector<bool> const& danger) {
      Mask out = m;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (danger[i] && out.cells[i] == kFree) {
          out.cells[i] = w[i];
        }
      }
      return out;
    }

  }  // namespace

  bool delta_compatible(Mask const& m, FoolingConfig const& cfg) {
    check_mask(m, cfg);
    auto allowed = allowed_letters(m, cfg.sigma.size());
    return Reach(cfg.star, allowed).compatible();
  }

  std::optional<Word> least_completion(Mask const& m, FoolingConfig const& cfg) {
    check_mask(m, cfg);
    auto allowed = allowed_letters(m, cfg.sigma.size());
    return Reach(cfg.star, allowed).least();
  }

  bool is_safe_completion(Mask const& m, Word const& w, FoolingConfig const& cfg) {
    if (w.size() != m.size()) {
      return false;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= cfg.sigma.size() || (m.cells[i] != kFree && m.cells[i] != w[i])) {
        return false;
      }
    }
    return delta_compatible(pin_dangerous(m, w, dangerous_flags(m, cfg)), cfg);
  }

  void for_each_safe_completion(Mask const& m, FoolingConfig const& cfg,
                                std::function<bool(Word const&)> const& f,
                                Limits const& limits) {
    check_mask(m, cfg);
    auto const               danger = dangerous_flags(m, cfg);
    std::vector<std::size_t> pinned, open;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.cells[i] == kFree) {
        (danger[i] ? pinned : open).push_back(i);
      }
    }
    std::size_t const k     = cfg.sigma.size();
    std::size_t       spent = 0;
    auto              tick  = [&] {
      if (++spent > limits.enumeration_cap) {
        throw ResourceError("safe-completion enumeration exceeds the cap");
      }
      limits.cancel.check();
    };
    Word w(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      w[i] = m.cells[i] == kFree ? 0 : m.cells[i];
    }
    bool go = true;
    for_each_word(k, pinned.size(), [&](Word const& dw) {
      tick();
      Mask pin = m;
      for (std::size_t j = 0; j < pinned.size(); ++j) {
        pin.cells[pinned[j]] = dw[j];
        w[pinned[j]]         = dw[j];
      }
      if (!delta_compatible(pin, cfg)) {
        return true;
      }
      for_each_word(k, open.size(), [&](Word const& ow) {
        tick();
        for (std::size_t j = 0; j < open.size(); ++j) {
          w[open[j]] = ow[j];
        }
        go = f(w);
        return go;
      });
      return go;
    });
  }

  // --- safety of Δ -------------------------------------------------------

  namespace {

    // Checks every safe fix of one mask; fills the report on failure.
    bool mask_is_safe(Mask const& m, FoolingConfig const& cfg, SafetyReport& rep) {
      auto  allowed = allowed_letters(m, cfg.sigma.size());
      Reach r(cfg.star, allowed);
      if (!r.compatible()) {
        return true;
      }
      ++rep.masks_checked;
      auto const danger = dangerous_flags(m, cfg);
      for (std::size_t p = 1; p <= m.size(); ++p) {
        if (danger[p - 1]) {
          continue;
        }
        for (Letter a = 0; a < cfg.sigma.size(); ++a) {
          if (!r.can_fix(p, a)) {
            rep.safe     = false;
            rep.witness  = m;
            rep.position = p;
            rep.letter   = a;
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  SafetyReport check_safe_delta(FoolingConfig const& cfg, std::size_t n_max,
                                std::size_t exhaustive_cap, std::uint64_t seed,
                                std::size_t samples) {
    SafetyReport      rep;
    std::size_t const k = cfg.sigma.size();
    Dfa const&        d = cfg.star;
    // States from which acceptance is still reachable prune dead prefixes.
    Bits live = 0;
    for (State q = 0; q < d.states; ++q) {
      if (d.accepting[q]) {
        live |= Bits{1} << q;
      }
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (State q = 0; q < d.states; ++q) {
        for (Letter a = 0; a < k && !(live >> q & 1U); ++a) {
          if (live >> d.next(q, a) & 1U) {
            live |= Bits{1} << q;
            grew = true;
          }
        }
      }
    }
    std::size_t const full = std::min(n_max, exhaustive_cap);
    for (std::size_t n = 1; n <= full && rep.safe; ++n) {
      Mask m = Mask::free(n);
      std::function<void(std::size_t, Bits)> rec = [&](std::size_t i, Bits states) {
        if (!rep.safe) {
          return;
        }
        if (i == n) {
          mask_is_safe(m, cfg, rep);
          return;
        }
        for (Letter c = 0; c <= k; ++c) {
          Letter cell = c == k ? kFree : c;
          Bits   next = 0;
          for (State q = 0; q < d.states; ++q) {
            if (!(states >> q & 1U)) {
              continue;
            }
            for (Letter a = 0; a < k; ++a) {
              if (cell == kFree || cell == a) {
                next |= Bits{1} << d.next(q, a);
              }
            }
          }
          next &= live;
          if (next != 0) {
            m.cells[i] = cell;
            rec(i + 1, next);
          }
        }
        m.cells[i] = kFree;
      };
      rec(0, Bits{1} << d.initial);
      if (rep.safe) {
        rep.exhaustive_upto = n;
      }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t n = full + 1; n <= n_max && rep.safe; ++n) {
      std::bernoulli_distribution               is_free(0.75);
      std::uniform_int_distribution<Letter>     letter(0, static_cast<Letter>(k - 1));
      for (std::size_t s = 0; s < samples && rep.safe; ++s) {
        Mask m = Mask::free(n);
        for (auto& c : m.cells) {
          c = is_free(rng) ? kFree : letter(rng);
        }
        mask_is_safe(m, cfg, rep);
      }
      if (rep.safe) {
        rep.sampled_upto = n;
      }
    }
    return rep;
  }

  // --- fixing the output -------------------------------------------------

  namespace {

    class Fixer {
     public:
      Fixer(Program const& p, FoolingConfig const& cfg)
          : p_(p), cfg_(cfg), m_(p.target()), g_(green(m_)),
            guard_(2 * m_.size() * m_.size() + 1) {}

      struct Out {
        Mask        mask;
        Element     t;
        std::size_t depth;
      };

      std::size_t calls = 0;

      Out run(Mask const& lam, std::size_t lo, std::size_t hi, Element u,
              Element v, std::size_t level) {
        ++calls;
        if (level > guard_) {
          throw std::logic_error("fixing recursion exceeded its height bound");
        }
        Element const one     = m_.identity();
        auto const    allowed = allowed_letters(lam, cfg_.sigma.size());
        Reach const   reach(cfg_.star, allowed);
        auto const&   ins = p_.instructions;
        Letter const  k   = static_cast<Letter>(cfg_.sigma.size());

        // Case 1: the first instruction that can drop the R-class of u.
        for (std::size_t i = lo; i < hi; ++i) {
          for (Letter a = 0; a < k; ++a) {
            Element const r = ins[i].map[a];
            if (is_r_bad(m_, g_, u, r) && reach.can_fix(ins[i].position, a)) {
              Out first  = run(lam.with(ins[i].position, a), lo, i, u, one, level + 1);
              Out second = run(first.mask, i + 1, hi, m_(first.t, r), v, level + 1);
              return {second.mask, second.t, 1 + std::max(first.depth, second.depth)};
            }
          }
        }
        // Case 2.
        if (is_r_bad(m_, g_, u, v)) {
          Out inner = run(lam, lo, hi, u, one, level + 1);
          return {inner.mask, m_(inner.t, v), 1 + inner.depth};
        }
        // Case 3: the last instruction that can drop the L-class of v.
        for (std::size_t i = hi; i-- > lo;) {
          for (Letter a = 0; a < k; ++a) {
            Element const r = ins[i].map[a];
            if (is_l_bad(m_, g_, v, r) && reach.can_fix(ins[i].position, a)) {
              Out last  = run(lam.with(ins[i].position, a), i + 1, hi, one, v, level + 1);
              Out front = run(last.mask, lo, i, u, m_(r, last.t), level + 1);
              return {front.mask, front.t, 1 + std::max(last.depth, front.depth)};
            }
          }
        }
        // Case 4.
        if (is_l_bad(m_, g_, v, u)) {
          Out inner = run(lam, lo, hi, one, v, level + 1);
          return {inner.mask, m_(u, inner.t), 1 + inner.depth};
        }
        // Case 5. A range whose instructions ignore their letter has a
        // constant output, so nothing needs pinning.
        bool const constant = std::all_of(ins.begin() + lo, ins.begin() + hi, [](auto const& in) {
          return std::adjacent_find(in.map.begin(), in.map.end(), std::not_equal_to<>()) == in.map.end();
        });
        if (constant) {
          Element t = u;
          for (std::size_t i = lo; i < hi; ++i) {
            t = m_(t, ins[i].map[0]);
          }
          return {lam, m_(t, v), 0};
        }
        Word const w0 = *reach.least();
        Element    t  = u;
        for (std::size_t i = lo; i < hi; ++i) {
          t = m_(t, ins[i].map[w0[ins[i].position - 1]]);
        }
        return {pin_dangerous(lam, w0, dangerous_flags(lam, cfg_)), m_(t, v), 0};
      }

     private:
      Program const&       p_;
      FoolingConfig const& cfg_;
      FiniteMonoid const&  m_;
      GreenData            g_;
      std::size_t          guard_;
    };

    bool within_fix_bound(std::size_t depth, std::size_t l, std::size_t before,
                          std::size_t after) {
      if (depth >= 8) {
        return true;  // the bound exceeds 2^2048, far beyond any mask length
      }
      using boost::multiprecision::cpp_int;
      cpp_int base  = cpp_int(1) << depth;
      base         *= 6 * l;
      cpp_int bound = boost::multiprecision::pow(base, 1U << depth)
                      * std::max<std::size_t>(before, 1);
      return cpp_int(after) <= bound;
    }

  }  // namespace

  FixResult fix_output(Mask const& lambda, Program const& p, Element u, Element v,
                       FoolingConfig const& cfg) {
    if (!(p.alphabet == cfg.sigma)) {
      throw InputError("program alphabet differs from the alphabet of Δ");
    }
    if (lambda.size() != p.range) {
      throw InputError("mask length differs from the program range");
    }
    if (u >= p.target().size() || v >= p.target().size()) {
      throw InputError("element out of range");
    }
    if (!satisfies_variety(p.target(), VarietyId::DA)) {
      throw InputError("fixing needs a monoid in DA");
    }
    if (!delta_compatible(lambda, cfg)) {
      throw InputError("mask is not Δ-compatible");
    }
    Fixer      fixer(p, cfg);
    auto       out = fixer.run(lambda, 0, p.length(), u, v, 0);
    FixResult  r;
    r.mask         = std::move(out.mask);
    r.t            = out.t;
    r.depth        = out.depth;
    r.calls        = fixer.calls;
    r.fixed_before = lambda.fixed_count();
    r.fixed_after  = r.mask.fixed_count();
    r.within_bound = within_fix_bound(r.depth, cfg.l, r.fixed_before, r.fixed_after);
    return r;
  }

  FoolingPair fooling_pair(Program const& p, std::vector<Element> const& accept,
                           FoolingConfig const& cfg, Dfa const& target) {
    Dfa const lang = target.alphabet == cfg.sigma ? target : with_alphabet(target, cfg.sigma);
    FoolingPair out;
    Element const one = p.target().identity();
    out.fix = fix_output(Mask::free(p.range), p, one, one, cfg);

    Mask const& lam    = out.fix.mask;
    auto const  danger = dangerous_flags(lam, cfg);
    Word const  base   = *least_completion(lam, cfg);
    Bits const  all    = cfg.sigma.size() == 64 ? ~Bits{0} : (Bits{1} << cfg.sigma.size()) - 1;
    std::vector<Bits> allowed;
    std::size_t       open = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      allowed.push_back(danger[i] ? Bits{1} << base[i] : all);
      open += danger[i] ? 0 : 1;
    }
    if (open == 0) {
      out.note = "no safe position left after fixing";
      return out;
    }

    std::optional<Word> w0 = lang.accepts(base) ? std::optional<Word>(base)
                                                : least_word(lang, allowed);
    if (!w0) {
      out.note = "no safe completion lies in the target language";
      return out;
    }
    std::optional<Word> w1;
    for (std::size_t i = 0; i < w0->size() && !w1; ++i) {
      if (danger[i]) {
        continue;
      }
      for (Letter a = 0; a < cfg.sigma.size(); ++a) {
        Word e = *w0;
        e[i]   = a;
        if (!lang.accepts(e)) {
          w1 = e;
          break;
        }
      }
    }
    if (!w1) {
      w1 = least_word(complement(lang), allowed);
    }
    if (!w1) {
      out.note = "every safe completion lies in the target language";
      return out;
    }

    std::vector<Element> acc = accept;
    std::sort(acc.begin(), acc.end());
    out.w0      = *w0;
    out.w1      = *w1;
    out.out0    = eval(p, out.w0);
    out.out1    = eval(p, out.w1);
    out.in0     = lang.accepts(out.w0);
    out.in1     = lang.accepts(out.w1);
    out.accept0 = std::binary_search(acc.begin(), acc.end(), out.out0);
    out.accept1 = std::binary_search(acc.begin(), acc.end(), out.out1);
    if (!is_safe_completion(lam, out.w0, cfg) || !is_safe_completion(lam, out.w1, cfg)) {
      throw CertificateError("fooling words are not safe completions",
                             cfg.sigma.format(out.w0) + " / " + cfg.sigma.format(out.w1));
    }
    if (out.out0 != out.fix.t || out.out1 != out.fix.t) {
      throw CertificateError("fixed output not reproduced by the fooling words",
                             cfg.sigma.format(out.w0) + " / " + cfg.sigma.format(out.w1));
    }
    out.status = FoolingPair::Status::Found;
    return out;
  }

}  // namespace progmon
