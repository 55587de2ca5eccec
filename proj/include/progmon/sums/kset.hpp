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
 * k-sets over n and the languages K_{n,S} they select: binary words of
 * length n whose first k occurrences of 1 sit at an ordered tuple of S.
 * Positions are 1-based.
 */

#ifndef PROGMON_SUMS_KSET_HPP
#define PROGMON_SUMS_KSET_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <set>
#include <vector>

#include "progmon/alphabet.hpp"
#include "progmon/reglang/dfa.hpp"

namespace progmon {

  struct KSet {
    std::size_t                         n = 0;
    std::size_t                         k = 0;
    std::set<std::vector<std::size_t>> tuples;

    /// Throws InputError unless every tuple has k distinct entries in [1, n].
    void validate() const;

    /// The (k-1)-set of tails of the tuples that start with j.
    KSet restrict(std::size_t j) const;
    /// True when j is the first entry of some tuple.
    bool starts_with(std::size_t j) const;
  };

  /// The alphabet {0, 1}.
  Alphabet const& binary_alphabet();

  /// Direct membership test for K_{n,S}.
  bool in_k_language(KSet const& s, Word const& w);
  /// Minimal automaton for K_{n,S}.
  Dfa k_language(KSet const& s);

  /// Each ordered k-tuple of distinct positions is included independently
  /// with probability `density`.
  KSet random_kset(std::mt19937_64& rng, std::size_t n, std::size_t k,
                   double density);

  /// i^(i^2) * 2^i * (n * i^2)^l.
  boost::multiprecision::cpp_int count_bound(std::size_t i, std::size_t n,
                                             std::size_t l);

}  // namespace progmon

#endif  // PROGMON_SUMS_KSET_HPP
