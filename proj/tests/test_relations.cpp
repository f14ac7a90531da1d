#include "brauer/relations.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

// |(G/H)^C| straight from the definition: cosets gH with g^{-1} C g inside H.
std::size_t brute_fixed(const Subgroup& c, const Subgroup& h) {
  const auto& g = *h.parent;
  std::size_t count = 0;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    bool ok = true;
    for (int y : c.elements)
      if (!h.contains(g.mul(g.mul(g.inverse(x), y), x))) ok = false;
    if (ok) ++count;
  }
  return count / h.order();
}

bool brute_is_relation(const BrauerRelation& r) {
  const auto& lat = *r.lattice();
  const auto& g = *r.group();
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    Subgroup c = generated_subgroup(r.group(), {x});
    long total = 0;
    for (std::size_t cls = 0; cls < lat.class_count(); ++cls)
      total += r.coefficient(cls) * static_cast<long>(brute_fixed(c, lat.representative(cls)));
    if (total != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fixed point counts match the definition") {
  for (const char* name : {"S3", "D4", "A4", "Q8"}) {
    auto lat = make_lattice(preset_group(name));
    for (const auto& c : lat->subgroups())
      for (const auto& h : lat->subgroups()) CHECK(fixed_point_count(c, h) == brute_fixed(c, h));
  }
}

TEST_CASE("relation lattice rank and validity") {
  for (const auto& name : FiniteGroup::preset_names()) {
    CAPTURE(name);
    auto lat = make_lattice(preset_group(name));
    auto basis = relation_lattice(lat);
    CHECK(basis.size() == lat->class_count() - cyclic_classes(*lat).size());
    for (const auto& r : basis) {
      CHECK(is_relation(r));
      CHECK(brute_is_relation(r));
      CHECK_FALSE(r.is_zero());
    }
  }
}

TEST_CASE("known relations") {
  auto v4 = make_lattice(preset_group("V4"));
  BrauerRelation theta(v4, {1, -1, -1, -1, 2});
  CHECK(is_relation(theta));
  auto basis = relation_lattice(v4);
  REQUIRE(basis.size() == 1);
  CHECK((basis[0] == theta || basis[0] == BrauerRelation(v4, {-1, 1, 1, 1, -2})));

  auto s3 = make_lattice(preset_group("S3"));
  BrauerRelation rho(s3, {1, -2, -1, 2});
  CHECK(is_relation(rho));
  CHECK_FALSE(is_relation(BrauerRelation(s3, {1, -2, -1, 1})));
  CHECK_THROWS(BrauerRelation(s3, {1, 2}));
}

TEST_CASE("restriction, induction and inflation preserve relations") {
  auto d4 = make_lattice(preset_group("D4"));
  for (const auto& r : relation_lattice(d4)) {
    for (const auto& y : d4->subgroups()) {
      auto res = restrict_to(r, y);
      CHECK(res.subgroup.group->order() == y.order());
      CHECK(is_relation(res.relation));
    }
  }
  // Restriction of the V4 relation to a cyclic subgroup vanishes.
  auto v4 = make_lattice(preset_group("V4"));
  BrauerRelation theta(v4, {1, -1, -1, -1, 2});
  auto res = restrict_to(theta, v4->subgroups()[1]);
  CHECK(res.relation.is_zero());
  // Restriction to the whole group is the identity up to relabelling.
  CHECK(restrict_to(theta, whole_group(v4->group())).relation.coefficients() == theta.coefficients());

  // Induce the V4 relation into D4 through a Klein four subgroup.
  for (const auto& y : d4->subgroups()) {
    if (y.order() != 4 || is_cyclic(y)) continue;
    auto sg = as_group(y);
    auto lat_y = make_lattice(sg.group);
    for (const auto& r : relation_lattice(lat_y)) {
      auto ind = induce(r, d4, sg.embedding);
      CHECK(is_relation(ind));
      CHECK_FALSE(ind.is_zero());
    }
  }

  // Inflate from a quotient of C2xC2xC2.
  auto e8 = make_lattice(preset_group("C2xC2xC2"));
  for (const auto& n : e8->subgroups()) {
    if (n.order() != 2) continue;
    auto q = quotient(n);
    auto lat_q = make_lattice(q.group);
    for (const auto& r : relation_lattice(lat_q)) {
      auto inf = inflate(r, e8, q.projection);
      CHECK(is_relation(inf));
      CHECK(brute_is_relation(inf));
    }
  }
}
