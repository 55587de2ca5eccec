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
 * Reports: the structured results printed by the command line front end.
 * Each item carries either a certificate (words, identities, masks) or a
 * note saying how the verdict was reached, e.g. "exhaustive n<=8".
 */

#ifndef PROGMON_REPORT_REPORT_HPP
#define PROGMON_REPORT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "progmon/algebra/variety.hpp"
#include "progmon/io/json.hpp"

namespace progmon {

  struct ReportItem {
    std::string name;
    bool        pass = true;
    std::string evidence;  // certificate or verification note
    Json        data = Json::object();
  };

  struct Report {
    std::string             title;
    std::vector<ReportItem> items;

    bool        pass() const;
    Json        to_json() const;
    std::string to_text() const;
    /// Throws InputError on a malformed document.
    static Report from_json(Json const& j);
  };

  /// Syntactic stamp, variety memberships, stability index, stable monoid,
  /// quasi-V, essentially-V and QEV verdicts of a regular language. Items
  /// are facts; they fail only when an internal cross-check disagrees.
  Report cmd_analyze(std::string const& regex, std::vector<VarietyId> const& varieties,
                     Limits const& limits = default_limits());

  /// Programs over a J monoid recognize (a+b)*ac+ at every length, while
  /// the stable stamp of that language is not essentially-J.
  Report cmd_nontameness_j(Limits const& limits = default_limits());

  /// P_k correctness and length, compression over M_k, and fooling pairs for
  /// (c+ab)*, (b+ab)* and the words with an even number of a.
  Report cmd_da_experiments(std::size_t k_max, std::size_t n, std::uint64_t seed,
                            Limits const& limits = default_limits());

}  // namespace progmon

#endif  // PROGMON_REPORT_REPORT_HPP
