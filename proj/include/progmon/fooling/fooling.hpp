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
 * Masks and the fixing procedure that forces a program over a DA monoid to a
 * constant output on all "safe" completions of a mask.
 *
 * A mask is a word over Σ ∪ {⊥}; ⊥ marks a free position. Given a finite
 * set Δ of non-empty words with maximal length l, a position is dangerous
 * when it lies within distance 2l-2 of a fixed position, or when p <= l or
 * p >= n-l+1. Fixed positions are therefore always dangerous. A completion
 * is safe when it agrees with some Δ*-completion of the mask on every
 * dangerous position.
 */

#ifndef PROGMON_FOOLING_FOOLING_HPP
#define PROGMON_FOOLING_FOOLING_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "progmon/programs/program.hpp"
#include "progmon/reglang/dfa.hpp"

namespace progmon {

  inline constexpr Letter kFree = std::numeric_limits<Letter>::max();

  struct Mask {
    std::vector<Letter> cells;  // kFree for ⊥

    static Mask free(std::size_t n) {
      return {std::vector<Letter>(n, kFree)};
    }
    std::size_t size() const {
      return cells.size();
    }
    bool is_free(std::size_t p) const {  // 1-based
      return cells.at(p - 1) == kFree;
    }
    std::size_t fixed_count() const;
    /// Copy with position p (1-based) set to a.
    Mask with(std::size_t p, Letter a) const;
    bool operator==(Mask const& o) const {
      return cells == o.cells;
    }
  };

  /// λ' is a submask of λ when it agrees with λ on every fixed position of λ.
  bool is_submask(Mask const& sub, Mask const& of);

  /// '_' (or '⊥') for free cells; otherwise the alphabet's word syntax.
  Mask        parse_mask(std::string_view text, Alphabet const& sigma);
  std::string format_mask(Mask const& m, Alphabet const& sigma);

  struct FoolingConfig {
    Alphabet          sigma;  // letters used by Δ, sorted
    std::vector<Word> delta;
    std::size_t       l = 0;
    Dfa               star;  // minimal automaton of Δ*
  };

  /// Builds Δ from its words; the alphabet is the set of letters occurring
  /// in them unless one is given. Throws InputError for an empty set or an
  /// empty word, and ResourceError when Δ* needs more than 64 states.
  FoolingConfig make_fooling_config(std::vector<std::string> const& words,
                                    Alphabet const* sigma = nullptr);

  /// 1-based dangerous positions, sorted.
  std::vector<std::size_t> dangerous_positions(Mask const& m,
                                               FoolingConfig const& cfg);
  std::vector<bool> dangerous_flags(Mask const& m, FoolingConfig const& cfg);

  bool delta_compatible(Mask const& m, FoolingConfig const& cfg);
  /// Lexicographically least completion in Δ*.
  std::optional<Word> least_completion(Mask const& m, FoolingConfig const& cfg);
  bool is_safe_completion(Mask const& m, Word const& w, FoolingConfig const& cfg);

  /// Visits every safe completion; stops early when `f` returns false.
  /// Throws ResourceError past the enumeration cap.
  void for_each_safe_completion(Mask const& m, FoolingConfig const& cfg,
                                std::function<bool(Word const&)> const& f,
                                Limits const& limits = default_limits());

  struct SafetyReport {
    bool        safe = true;
    std::size_t exhaustive_upto = 0;  // every mask of length <= this checked
    std::size_t sampled_upto    = 0;  // random masks checked above that
    std::size_t masks_checked   = 0;
    // Counterexample: a compatible mask, a safe position and a letter whose
    // fixing breaks compatibility.
    std::optional<Mask> witness;
    std::size_t         position = 0;
    Letter              letter   = 0;
  };

  /// Bounded check of the safety property of Δ: exhaustive over masks up to
  /// min(n_max, exhaustive_cap), random masks (`samples` per length) beyond.
  SafetyReport check_safe_delta(FoolingConfig const& cfg, std::size_t n_max,
                                std::size_t exhaustive_cap = 12,
                                std::uint64_t seed = 1, std::size_t samples = 2000);

  struct FixResult {
    Mask        mask;
    Element     t = 0;
    std::size_t depth = 0;        // longest chain of nested recursive calls
    std::size_t calls = 0;
    std::size_t fixed_before = 0;
    std::size_t fixed_after  = 0;
    /// fixed_after <= (2^depth * 6l)^(2^depth) * max(fixed_before, 1).
    bool within_bound = true;
  };

  /// Fixes a Δ-compatible submask λ' of λ and an element t with
  /// u P(w) v = t for every safe completion w of λ'. The target monoid must
  /// be in DA, and Δ is assumed safe.
  ///
  /// With R-bad meaning u <_R u r and L-bad meaning v <_L r v:
  ///  1. some instruction (x, f) and letter a keep λ compatible with x set to
  ///     a and f(a) is R-bad for u: take the first such instruction i and fix
  ///     the prefix before i with (u, 1), then the suffix after i starting
  ///     from t1 f(a);
  ///  2. otherwise, if v is R-bad for u: fix with (u, 1) and append v;
  ///  3. mirror of 1 using L-bad elements for v and the last instruction;
  ///  4. mirror of 2;
  ///  5. fix every free dangerous position from a Δ*-completion w0 and
  ///     return t = u P(w0) v.
  FixResult fix_output(Mask const& lambda, Program const& p, Element u,
                       Element v, FoolingConfig const& cfg);

  struct FoolingPair {
    enum class Status { Found, InsufficientRange };
    Status      status = Status::InsufficientRange;
    FixResult   fix;
    Word        w0, w1;  // w0 in the target, w1 not; both safe completions
    Element     out0 = 0, out1 = 0;
    bool        in0 = false, in1 = false;
    bool        accept0 = false, accept1 = false;  // under the given F
    std::string note;
  };

  /// Runs fix_output on the all-free mask with u = v = 1 and looks for safe
  /// completions on both sides of `target`. The returned pair is verified:
  /// equal outputs and split membership. Finding none is reported through
  /// the status, not thrown.
  FoolingPair fooling_pair(Program const& p, std::vector<Element> const& accept,
                           FoolingConfig const& cfg, Dfa const& target);

}  // namespace progmon

#endif  // PROGMON_FOOLING_FOOLING_HPP
