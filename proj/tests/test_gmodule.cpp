#include "brauer/gmodule.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

// Counts fixed points of H on (Z/m)^n by enumeration; the module must be a lattice reduced mod m.
std::size_t brute_fixed_count(const GModule& lattice_module, const Subgroup& h, long m) {
  const std::size_t n = lattice_module.rank();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(m);
  std::size_t count = 0;
  std::vector<long> v(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<long>(c % static_cast<std::size_t>(m));
      c /= static_cast<std::size_t>(m);
    }
    bool fixed = true;
    for (int x : h.elements) {
      const IntMatrix& a = lattice_module.action(x);
      for (std::size_t r = 0; r < n && fixed; ++r) {
        mpz_class s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a(r, k) * v[k];
        s -= v[r];
        if (s % m != 0) fixed = false;
      }
    }
    if (fixed) ++count;
  }
  return count;
}

mpz_class fixed_order(const GModule& m, const Subgroup& h) {
  auto o = fixed_submodule(m, h).presentation.order();
  REQUIRE(o);
  return *o;
}

}  // namespace

TEST_CASE("fixed submodules of finite modules match enumeration") {
  struct Case {
    GModule lattice;
    long m;
  };
  auto v4 = preset_group("V4");
  auto s3 = preset_group("S3");
  auto lat_s3 = make_lattice(s3);
  std::vector<Case> cases = {
      {regular_module(v4), 3},
      {regular_module(v4), 2},
      {permutation_module(lat_s3->subgroups()[1]), 3},
      {augmentation_ideal(s3).module, 2},
      {augmentation_ideal(v4).module, 4},
  };
  for (const auto& c : cases) {
    GModule finite = reduce_mod(c.lattice, c.m);
    auto lat = make_lattice(c.lattice.group());
    for (const auto& h : lat->subgroups())
      CHECK(fixed_order(finite, h) == brute_fixed_count(c.lattice, h, c.m));
  }
}

TEST_CASE("fixed lattice of a permutation module has rank equal to the number of orbits") {
  auto d4 = preset_group("D4");
  auto lat = make_lattice(d4);
  for (const auto& k : lat->subgroups()) {
    GModule p = permutation_module(k);
    for (const auto& h : lat->subgroups()) {
      auto fs = fixed_submodule(p, h);
      CHECK(fs.presentation.free_rank() == double_cosets(h, k).size());
      CHECK(fs.presentation.torsion_order() == 1);
    }
  }
}

TEST_CASE("augmentation sequence is exact") {
  for (const char* name : {"C3", "V4", "S3", "Q8"}) {
    auto g = preset_group(name);
    auto aug = augmentation_ideal(g);
    auto report = check_short_exact(aug.inclusion, augmentation_map(g));
    CHECK(report.exact());
  }
  auto g = preset_group("C4");
  auto report = check_short_exact(identity_map(regular_module(g)), augmentation_map(g));
  CHECK_FALSE(report.exact());
  CHECK(report.injective);
  CHECK_FALSE(report.composite_zero);
}

TEST_CASE("invalid modules and maps are rejected") {
  auto c2 = preset_group("C2");
  CHECK_THROWS(GModule::lattice(c2, {IntMatrix{{1}}, IntMatrix{{2}}}));
  CHECK_THROWS(GModule::lattice(c2, {IntMatrix{{1}}, IntMatrix{{1, 0}}}));
  CHECK_NOTHROW(GModule(c2, IntMatrix{{3}}, {IntMatrix{{1}}, IntMatrix{{2}}}));
  CHECK_THROWS(GModule(c2, IntMatrix{{5}}, {IntMatrix{{1}}, IntMatrix{{2}}}));
  GModule sign = sign_module(trivial_subgroup(c2), 0);
  CHECK_THROWS(GMap(trivial_module(c2), sign, IntMatrix{{1}}));
  CHECK_NOTHROW(GMap(trivial_module(c2), reduce_mod(sign, 2), IntMatrix{{1}}));
  CHECK_THROWS(sign_module(trivial_subgroup(preset_group("C4")), 0));
  CHECK_THROWS(dual_lattice(reduce_mod(trivial_module(c2), 2)));
}

TEST_CASE("induction, restriction and duals") {
  auto s3 = preset_group("S3");
  auto lat = make_lattice(s3);
  for (const auto& y : lat->subgroups()) {
    auto sg = as_group(y);
    GModule ind = induced_module(trivial_module(sg.group), y);
    GModule perm = permutation_module(y);
    CHECK(ind.rank() == perm.rank());
    for (const auto& h : lat->subgroups())
      CHECK(fixed_submodule(ind, h).presentation.invariants() == fixed_submodule(perm, h).presentation.invariants());
    GModule res = restricted_module(regular_module(s3), sg.group, sg.embedding);
    CHECK(res.rank() == 6);
    CHECK(fixed_submodule(res, whole_group(sg.group)).presentation.free_rank() == 6 / y.order());
  }
  GModule aug = augmentation_ideal(s3).module;
  GModule dual = dual_lattice(aug);
  GModule ddual = dual_lattice(dual);
  for (int g = 0; g < 6; ++g) CHECK(ddual.action(g) == aug.action(g));
}

TEST_CASE("torsion split and kernels") {
  auto c2 = preset_group("C2");
  GModule m = direct_sum(reduce_mod(trivial_module(c2), 4), regular_module(c2));
  CHECK(m.torsion_order() == 4);
  CHECK(m.free_rank() == 2);
  auto split = torsion_and_free(m);
  CHECK(split.torsion.torsion_order() == 4);
  CHECK(split.free.is_torsion_free());
  CHECK(split.free.rank() == 2);

  auto kc = kernel_and_cokernel(augmentation_map(c2));
  CHECK(kc.kernel.rank() == 1);
  CHECK(kc.kernel.action(1) == IntMatrix{{-1}});
  REQUIRE(kc.cokernel_order);
  CHECK(*kc.cokernel_order == 1);
}
