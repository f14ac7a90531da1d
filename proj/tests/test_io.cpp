#include "brauer/io.hpp"
#include "doctest.h"

using namespace brauer;

TEST_CASE("matrix json round trip") {
  IntMatrix m{{1, -2, 0}, {3, 4, 5}};
  m(0, 2) = mpz_class("123456789012345678901234567890");
  json j = to_json(m);
  CHECK(j["entries"][0][2].is_string());
  CHECK(j["entries"][1][0].is_number_integer());
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(json::parse(R"({"rows":0,"cols":3,"entries":[]})")).cols() == 3);

  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[[1]]})")), DataError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["1.5"]]})")), DataError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[[1.5]]})")), DataError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":-1,"cols":1,"entries":[]})")), DataError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"cols":1,"entries":[]})")), DataError);
}

TEST_CASE("group json") {
  CHECK(group_from_json(json::parse(R"({"preset":"D4"})"))->order() == 8);
  auto s3 = group_from_json(json::parse(R"({"degree":3,"generators":[[1,0,2],[1,2,0]]})"));
  CHECK(s3->order() == 6);
  CHECK(!s3->is_abelian());
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"preset":"C99"})")), DataError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"degree":3,"generators":[[0,0,1]]})")), DataError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"degree":3,"generators":[[0,1]]})")), DataError);
  CHECK_THROWS_AS(group_from_json(json::parse("[1,2]")), DataError);
}

TEST_CASE("relation json") {
  auto lat = make_lattice(preset_group("V4"));
  auto r = relation_from_json(json::parse(
      R"({"group":{"preset":"V4"},"terms":[{"subgroup_class":0,"coeff":1},{"subgroup_class":1,"coeff":-1},
          {"subgroup_class":2,"coeff":-1},{"subgroup_class":3,"coeff":-1},{"subgroup_class":4,"coeff":2}]})"));
  CHECK(is_relation(r));
  CHECK(r.coefficients() == std::vector<std::int64_t>{1, -1, -1, -1, 2});
  auto again = relation_from_json(to_json(r), lat);
  CHECK(again == r);
  // repeated classes add up
  auto sum = relation_from_json(json::parse(R"({"terms":[{"subgroup_class":1,"coeff":2},{"subgroup_class":1,"coeff":-5}]})"), lat);
  CHECK(sum.coefficient(1) == -3);
  CHECK_THROWS_AS(relation_from_json(json::parse(R"({"terms":[{"subgroup_class":5,"coeff":1}]})"), lat), DataError);
  CHECK_THROWS_AS(relation_from_json(json::parse(R"({"terms":[]})")), DataError);
  CHECK_THROWS_AS(relation_from_json(json::parse(R"({"group":"S3","terms":[]})"), lat), DataError);
}

TEST_CASE("module json") {
  auto c2 = preset_group("C2");
  auto sign = module_from_json(json::parse(R"({"group":"C2","rank":1,"action":{"1":{"rows":1,"cols":1,"entries":[[-1]]}}})"));
  CHECK(sign.action(1) == IntMatrix{{-1}});
  CHECK(sign.is_torsion_free());

  // Z/4 with the generator acting by -1
  auto tors = module_from_json(json::parse(
      R"({"rank":1,"rels":{"rows":1,"cols":1,"entries":[[4]]},"action":{"1":{"rows":1,"cols":1,"entries":[[-1]]}}})"), c2);
  CHECK(tors.torsion_order() == 4);

  auto v4 = preset_group("V4");
  GModule reg = regular_module(v4);
  GModule back = module_from_json(to_json(reg), v4);
  for (int g = 0; g < 4; ++g) CHECK(back.action(g) == reg.action(g));

  // omitted elements are derived from the given ones
  json partial = to_json(reg);
  partial["action"].erase("3");
  CHECK(module_from_json(partial, v4).action(3) == reg.action(3));

  CHECK_THROWS_AS(module_from_json(json::parse(R"({"group":"C2","rank":1,"action":{"1":{"rows":1,"cols":1,"entries":[[2]]}}})")),
                  DataError);
  CHECK_THROWS_AS(module_from_json(json::parse(R"({"group":"C2","rank":1,"action":{"x":{"rows":1,"cols":1,"entries":[[1]]}}})")),
                  DataError);
  CHECK_THROWS_AS(module_from_json(json::parse(R"({"group":"C2","rank":2,"action":{"1":{"rows":1,"cols":1,"entries":[[1]]}}})")),
                  DataError);
  CHECK_THROWS_AS(module_from_json(json::parse(R"({"rank":1,"action":{}})")), DataError);
}

TEST_CASE("local datum json") {
  auto lat = make_lattice(preset_group("V4"));
  auto d = local_datum_from_json(json::parse(R"({"group":"V4","inertia_subgroup_class":1,"frobenius_element":2})"));
  CHECK(d.inertia.order() == 2);
  CHECK_THROWS_AS(local_datum_from_json(json::parse(R"({"inertia_subgroup_class":0,"frobenius_element":1})"), lat),
                  DataError);
  CHECK_THROWS_AS(local_datum_from_json(json::parse(R"({"inertia_subgroup_class":1,"frobenius_element":9})"), lat),
                  DataError);
}

TEST_CASE("json arguments") {
  CHECK(json_argument(R"({"a":1})")["a"] == 1);
  CHECK_THROWS_AS(json_argument("{broken"), DataError);
  CHECK_THROWS_AS(json_argument("/nonexistent/file.json"), DataError);
}
