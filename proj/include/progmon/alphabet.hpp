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

#ifndef PROGMON_ALPHABET_HPP
#define PROGMON_ALPHABET_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace progmon {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  /// Finite ordered alphabet. Letters are indices into the symbol list; the
  /// symbols themselves are arbitrary non-empty strings.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);
    Alphabet(std::initializer_list<std::string> symbols);

    /// One letter per character of `chars`.
    static Alphabet from_chars(std::string_view chars);

    std::size_t size() const noexcept {
      return symbols_.size();
    }
    bool empty() const noexcept {
      return symbols_.empty();
    }
    std::string const& symbol(Letter a) const;
    std::vector<std::string> const& symbols() const noexcept {
      return symbols_;
    }
    bool contains(std::string_view symbol) const;
    /// Throws InputError for an unknown symbol.
    Letter letter(std::string_view symbol) const;

    /// True when every symbol is a single character, so words print without
    /// separators.
    bool single_char() const noexcept;

    /// Parses a word. Single-character alphabets read one letter per
    /// character; otherwise symbols are separated by whitespace or '.'.
    Word parse(std::string_view text) const;
    std::string format(Word const& w) const;

    bool operator==(Alphabet const& other) const {
      return symbols_ == other.symbols_;
    }

   private:
    std::vector<std::string>                     symbols_;
    std::unordered_map<std::string, Letter>      index_;
  };

  /// Calls `f` on every word of length `n` in lexicographic order. Stops
  /// early when `f` returns false.
  void for_each_word(std::size_t                             alphabet_size,
                     std::size_t                             n,
                     std::function<bool(Word const&)> const& f);

  /// alphabet_size^n, saturating at SIZE_MAX.
  std::size_t word_count(std::size_t alphabet_size, std::size_t n);

  Word concat(Word const& u, Word const& v);

}  // namespace progmon

#endif  // PROGMON_ALPHABET_HPP
