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
 * Regular expressions over string-labelled letters.
 *
 * Text syntax: `+` is union, juxtaposition is concatenation, postfix `*` is
 * Kleene star and postfix `~` is Kleene plus. A letter is one alphanumeric
 * character or a bracketed name such as `[T1]`. `#` or `∅` denotes the empty
 * language and `_` or `ε` the empty word.
 */

#ifndef PROGMON_REGLANG_REGEX_HPP
#define PROGMON_REGLANG_REGEX_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace progmon {

  struct Regex {
    enum class Kind { Empty, Epsilon, Letter, Union, Concat, Star, Plus };
    Kind               kind = Kind::Empty;
    std::string        letter;
    std::vector<Regex> children;

    static Regex empty();
    static Regex epsilon();
    static Regex sym(std::string name);
    static Regex alt(std::vector<Regex> options);
    static Regex seq(std::vector<Regex> parts);
    static Regex star(Regex r);
    static Regex plus(Regex r);
    /// Union of single letters, or the empty language for an empty list.
    static Regex any_of(std::vector<std::string> const& letters);
  };

  /// Throws InputError naming the offending byte offset.
  Regex parse_regex(std::string_view text);

  /// Prints in the accepted syntax; parse_regex(to_string(r)) denotes the
  /// same language.
  std::string to_string(Regex const& r);

  std::set<std::string> letters(Regex const& r);

}  // namespace progmon

#endif  // PROGMON_REGLANG_REGEX_HPP
