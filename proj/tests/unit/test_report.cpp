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

#include "doctest.h"
#include "progmon/io/json.hpp"
#include "progmon/programs/builders.hpp"
#include "progmon/report/report.hpp"
#include "progmon/sums/family.hpp"

using namespace progmon;

namespace {

  ReportItem const* find(Report const& r, std::string const& name) {
    for (auto const& i : r.items) {
      if (i.name == name) return &i;
    }
    return nullptr;
  }

}  // namespace

TEST_CASE("monoid, program and k-set JSON round trips") {
  FiniteMonoid const m = mk_stamp(2).syntactic.stamp.target();
  CHECK(monoid_from_json(monoid_to_json(m)) == m);
  CHECK(monoid_from_json(monoid_to_json(m)).names() == m.names());

  auto const r    = build_j_trick(5).recognizer;
  auto const back = program_from_json(program_to_json(r));
  CHECK(back.program.range == 5);
  CHECK(back.program.alphabet == r.program.alphabet);
  CHECK(back.program.instructions == r.program.instructions);
  CHECK(back.program.target() == r.program.target());
  CHECK(back.accept == r.accept);

  Stamp const phi = syntactic_stamp("(c+ab)*").stamp;
  Stamp const st  = stamp_from_json(stamp_to_json(phi));
  CHECK(st.alphabet == phi.alphabet);
  CHECK(st.images == phi.images);
  CHECK(st.target() == phi.target());
  CHECK(monoid_to_json(m)["size"] == m.size());
  auto bad_size = monoid_to_json(m);
  bad_size["size"] = 3;
  CHECK_THROWS_AS(monoid_from_json(bad_size), InputError);

  KSet const s{5, 2, {{1, 3}, {4, 2}}};
  auto const s2 = kset_from_json(kset_to_json(s));
  CHECK(s2.n == 5);
  CHECK(s2.tuples == s.tuples);
}

TEST_CASE("JSON input errors") {
  CHECK_THROWS_AS(monoid_from_json(Json{{"identity", 0}}), InputError);
  CHECK_THROWS_AS(monoid_from_json(Json::parse(R"({"identity":0,"table":[[0,1],[1,2]]})")), InputError);
  auto prog = Json::parse(R"({"range":2,"alphabet":["a","b"],
      "monoid":{"identity":0,"names":["1","z"],"table":[[0,1],[1,1]]},
      "instructions":[[1,{"a":"z"}],[2,{"b":1}]],"accept":["z"]})");
  auto r = program_from_json(prog);
  CHECK(r.program.instructions[0].map == std::vector<Element>{1, 0});
  CHECK(r.accepts(Alphabet::from_chars("ab").parse("ab")));
  CHECK_FALSE(r.accepts(Alphabet::from_chars("ab").parse("ba")));
  prog["instructions"][0][1]["a"] = "nope";
  CHECK_THROWS_AS(program_from_json(prog), InputError);
  prog["instructions"][0] = Json::array({3, Json::object()});
  CHECK_THROWS_AS(program_from_json(prog), InputError);
  CHECK_THROWS_AS(kset_from_json(Json::parse(R"({"n":3,"k":2,"tuples":[[1,1]]})")), InputError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("analyze reports") {
  auto const a = cmd_analyze("a(a+b)*", {VarietyId::Trivial, VarietyId::J});
  CHECK(a.pass());
  REQUIRE(find(a, "stability index") != nullptr);
  CHECK(find(a, "stability index")->data["s"] == 1);
  CHECK(find(a, "essentially-I")->data["value"] == true);
  CHECK(find(a, "monoid in I")->data["value"] == false);

  auto const c = cmd_analyze("(c+ab)*", {VarietyId::DA});
  CHECK(find(c, "monoid in DA")->data["value"] == false);
  REQUIRE(find(c, "DA obstruction") != nullptr);
  CHECK(find(c, "DA obstruction")->data["isomorphic_to_B2"] == true);

  auto const t = cmd_analyze("(a+b)*ac~", {VarietyId::J});
  auto const* qej = find(t, "quasi-essentially-J");
  REQUIRE(qej != nullptr);
  CHECK(qej->data["value"] == false);
  CHECK(qej->evidence.find("context") != std::string::npos);
}

TEST_CASE("canned reports") {
  auto const j = cmd_nontameness_j();
  CHECK(j.pass());
  CHECK(find(j, "program of range 5 recognizes (a+b)*ac+")->pass);
  auto const* v = find(j, "stable stamp of (a+b)*ac+ is not essentially-J");
  REQUIRE(v != nullptr);
  CHECK(v->data["qe_j"] == false);

  auto const back = Report::from_json(j.to_json());
  CHECK(back.to_json() == j.to_json());
  CHECK(back.to_text() == j.to_text());
  CHECK_THROWS_AS(Report::from_json(Json::object()), InputError);

  auto const da = cmd_da_experiments(2, 6, 0);
  CHECK(da.pass());
  auto const* p1 = find(da, "P_1 at n=6");
  REQUIRE(p1 != nullptr);
  CHECK(p1->data["length"].get<std::size_t>() <= 24);
  CHECK(find(da, "compression of a padded program over M_1")->pass);
  CHECK(find(da, "fooling (c+ab)* against the scan of (a+b+c)*a")->pass);
  CHECK_THROWS_AS(cmd_da_experiments(0, 6, 0), InputError);
}
