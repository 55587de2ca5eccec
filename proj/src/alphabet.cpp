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

#include "progmon/alphabet.hpp"

#include <cctype>
#include <limits>

#include "progmon/error.hpp"

namespace progmon {

  Alphabet::Alphabet(std::vector<std::string> symbols)
      : symbols_(std::move(symbols)) {
    for (Letter a = 0; a < symbols_.size(); ++a) {
      if (symbols_[a].empty()) {
        throw InputError("alphabet symbols must be non-empty");
      }
      if (!index_.emplace(symbols_[a], a).second) {
        throw InputError("duplicate alphabet symbol '" + symbols_[a] + "'");
      }
    }
  }

  Alphabet::Alphabet(std::initializer_list<std::string> symbols)
      : Alphabet(std::vector<std::string>(symbols)) {}

  Alphabet Alphabet::from_chars(std::string_view chars) {
    std::vector<std::string> symbols;
    for (char c : chars) {
      symbols.emplace_back(1, c);
    }
    return Alphabet(std::move(symbols));
  }

  std::string const& Alphabet::symbol(Letter a) const {
    if (a >= symbols_.size()) {
      throw InputError("letter index " + std::to_string(a)
                       + " out of range for alphabet of size "
                       + std::to_string(symbols_.size()));
    }
    return symbols_[a];
  }

  bool Alphabet::contains(std::string_view symbol) const {
    return index_.count(std::string(symbol)) != 0;
  }

  Letter Alphabet::letter(std::string_view symbol) const {
    auto it = index_.find(std::string(symbol));
    if (it == index_.end()) {
      throw InputError("unknown letter '" + std::string(symbol) + "'");
    }
    return it->second;
  }

  bool Alphabet::single_char() const noexcept {
    for (auto const& s : symbols_) {
      if (s.size() != 1) {
        return false;
      }
    }
    return true;
  }

  Word Alphabet::parse(std::string_view text) const {
    Word w;
    if (single_char()) {
      for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          continue;
        }
        w.push_back(letter(std::string_view(&c, 1)));
      }
      return w;
    }
    std::string token;
    auto        flush = [&] {
      if (!token.empty()) {
        w.push_back(letter(token));
        token.clear();
      }
    };
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '.') {
        flush();
      } else {
        token.push_back(c);
      }
    }
    flush();
    return w;
  }

  std::string Alphabet::format(Word const& w) const {
    std::string out;
    bool const  compact = single_char();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!compact && i > 0) {
        out.push_back('.');
      }
      out += symbol(w[i]);
    }
    return out;
  }

  void for_each_word(std::size_t                             alphabet_size,
                     std::size_t                             n,
                     std::function<bool(Word const&)> const& f) {
    Word w(n, 0);
    if (n > 0 && alphabet_size == 0) {
      return;
    }
    while (true) {
      if (!f(w)) {
        return;
      }
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++w[i] < alphabet_size) {
          break;
        }
        w[i] = 0;
        if (i == 0) {
          return;
        }
      }
      if (n == 0) {
        return;
      }
    }
  }

  std::size_t word_count(std::size_t alphabet_size, std::size_t n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (alphabet_size != 0
          && total > std::numeric_limits<std::size_t>::max() / alphabet_size) {
        return std::numeric_limits<std::size_t>::max();
      }
      total *= alphabet_size;
    }
    return total;
  }

  Word concat(Word const& u, Word const& v) {
    Word w(u);
    w.insert(w.end(), v.begin(), v.end());
    return w;
  }

}  // namespace progmon
