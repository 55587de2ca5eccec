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

#include "progmon/io/json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace progmon {

  namespace {

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing JSON field \"") + key + "\"");
      }
      return j.at(key);
    }

    Element element_ref(Json const& j, FiniteMonoid const& m) {
      if (j.is_number_unsigned()) {
        auto e = j.get<std::uint64_t>();
        if (e >= m.size()) {
          throw InputError("element index out of range: " + std::to_string(e));
        }
        return static_cast<Element>(e);
      }
      if (j.is_string()) {
        auto const& names = m.names();
        auto        it    = std::find(names.begin(), names.end(), j.get<std::string>());
        if (it == names.end()) {
          throw InputError("unknown element name: " + j.get<std::string>());
        }
        return static_cast<Element>(it - names.begin());
      }
      throw InputError("element reference must be an index or a name");
    }

    template <class F>
    auto guarded(F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (Json::exception const& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
      }
    }

  }  // namespace

  Json monoid_to_json(FiniteMonoid const& m) {
    Json table = Json::array();
    for (Element a = 0; a < m.size(); ++a) {
      Json row = Json::array();
      for (Element b = 0; b < m.size(); ++b) {
        row.push_back(m(a, b));
      }
      table.push_back(std::move(row));
    }
    return Json{{"size", m.size()}, {"identity", m.identity()}, {"names", m.names()}, {"table", table}};
  }

  FiniteMonoid monoid_from_json(Json const& j) {
    return guarded([&] {
      auto table    = field(j, "table").get<std::vector<std::vector<Element>>>();
      auto identity = field(j, "identity").get<Element>();
      std::vector<std::string> names;
      if (j.contains("names")) {
        names = j.at("names").get<std::vector<std::string>>();
      }
      if (j.contains("size") && j.at("size").get<std::size_t>() != table.size()) {
        throw InputError("monoid size differs from the table");
      }
      return FiniteMonoid(std::move(table), identity, std::move(names));
    });
  }

  Json stamp_to_json(Stamp const& phi) {
    Json images = Json::object();
    for (Letter a = 0; a < phi.alphabet.size(); ++a) {
      images[phi.alphabet.symbol(a)] = phi.images[a];
    }
    return Json{{"alphabet", phi.alphabet.symbols()},
                {"monoid", monoid_to_json(phi.target())},
                {"images", images}};
  }

  Stamp stamp_from_json(Json const& j) {
    return guarded([&] {
      Alphabet const       sigma(field(j, "alphabet").get<std::vector<std::string>>());
      MonoidPtr            m = share(monoid_from_json(field(j, "monoid")));
      std::vector<Element> images(sigma.size(), m->identity());
      std::vector<bool>    seen(sigma.size(), false);
      for (auto const& [symbol, e] : field(j, "images").items()) {
        Letter const a = sigma.letter(symbol);
        images[a]      = element_ref(e, *m);
        seen[a]        = true;
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw InputError("every letter needs an image");
      }
      return Stamp(sigma, std::move(m), std::move(images));
    });
  }

  Json program_to_json(Recognizer const& r) {
    Program const& p = r.program;
    Json           ins = Json::array();
    for (auto const& in : p.instructions) {
      Json map = Json::object();
      for (Letter a = 0; a < p.alphabet.size(); ++a) {
        map[p.alphabet.symbol(a)] = in.map[a];
      }
      ins.push_back(Json::array({in.position, map}));
    }
    return Json{{"range", p.range},
                {"alphabet", p.alphabet.symbols()},
                {"monoid", monoid_to_json(p.target())},
                {"instructions", ins},
                {"accept", r.accept}};
  }

  Recognizer program_from_json(Json const& j, std::string const& base_dir) {
    return guarded([&] {
      auto const     n     = field(j, "range").get<std::size_t>();
      Alphabet const sigma(field(j, "alphabet").get<std::vector<std::string>>());
      Json const&    mj    = field(j, "monoid");
      MonoidPtr      m;
      if (mj.is_string()) {
        std::filesystem::path path = mj.get<std::string>();
        if (path.is_relative()) {
          path = std::filesystem::path(base_dir) / path;
        }
        m = share(monoid_from_json(read_json_file(path.string())));
      } else {
        m = share(monoid_from_json(mj));
      }
      std::vector<Instruction> ins;
      for (auto const& item : field(j, "instructions")) {
        if (!item.is_array() || item.size() != 2) {
          throw InputError("an instruction is a pair [position, {letter: element}]");
        }
        Instruction in{item[0].get<std::size_t>(), std::vector<Element>(sigma.size(), m->identity())};
        for (auto const& [symbol, e] : item[1].items()) {
          in.map[sigma.letter(symbol)] = element_ref(e, *m);
        }
        ins.push_back(std::move(in));
      }
      std::vector<Element> accept;
      for (auto const& e : field(j, "accept")) {
        accept.push_back(element_ref(e, *m));
      }
      std::sort(accept.begin(), accept.end());
      accept.erase(std::unique(accept.begin(), accept.end()), accept.end());
      Program p(n, sigma, std::move(m), std::move(ins));
      p.validate();
      return Recognizer{std::move(p), std::move(accept)};
    });
  }

  Json kset_to_json(KSet const& s) {
    return Json{{"n", s.n}, {"k", s.k}, {"tuples", s.tuples}};
  }

  KSet kset_from_json(Json const& j) {
    return guarded([&] {
      KSet s;
      s.n = field(j, "n").get<std::size_t>();
      s.k = field(j, "k").get<std::size_t>();
      for (auto const& t : field(j, "tuples")) {
        s.tuples.insert(t.get<std::vector<std::size_t>>());
      }
      s.validate();
      return s;
    });
  }

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot read " + path);
    }
    try {
      return Json::parse(in);
    } catch (Json::exception const& e) {
      throw InputError(path + ": " + e.what());
    }
  }

}  // namespace progmon
