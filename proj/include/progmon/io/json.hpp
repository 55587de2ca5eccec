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
 * JSON forms of the objects the CLI reads and writes.
 *
 * Monoid:  {"size": n, "identity": e, "table": [[...], ...], "names": [...]}
 * Stamp:   {"alphabet": [...], "monoid": <monoid>, "images": {"a": e, ...}}
 * Program: {"range": n, "alphabet": [...], "monoid": <monoid or path>,
 *           "instructions": [[p, {"a": e, ...}], ...], "accept": [e, ...]}
 * k-set:   {"n": n, "k": k, "tuples": [[...], ...]}
 *
 * An element reference e is either its index or its name. Positions are
 * 1-based. A monoid given as a string is read from that path, relative to
 * `base_dir` when it is not absolute.
 */

#ifndef PROGMON_IO_JSON_HPP
#define PROGMON_IO_JSON_HPP

#include <json.hpp>
#include <string>

#include "progmon/algebra/monoid.hpp"
#include "progmon/programs/program.hpp"
#include "progmon/reglang/stamp.hpp"
#include "progmon/sums/kset.hpp"

namespace progmon {

  using Json = nlohmann::ordered_json;

  Json         monoid_to_json(FiniteMonoid const& m);
  /// Throws InputError for malformed input or a table violating the laws.
  FiniteMonoid monoid_from_json(Json const& j);

  Json  stamp_to_json(Stamp const& phi);
  Stamp stamp_from_json(Json const& j);

  Json       program_to_json(Recognizer const& r);
  Recognizer program_from_json(Json const& j, std::string const& base_dir = ".");

  Json kset_to_json(KSet const& s);
  KSet kset_from_json(Json const& j);

  /// Reads and parses a file; throws InputError when it is unreadable.
  Json read_json_file(std::string const& path);

}  // namespace progmon

#endif  // PROGMON_IO_JSON_HPP
