// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "brauer/inertial.hpp"
#include "brauer/regconst.hpp"
#include "brauer/verify.hpp"

using namespace brauer;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

const std::vector<std::string> kNoncyclic = {"V4", "S3", "D4", "Q8", "C2xC2xC2", "C2xC4", "A4"};

std::vector<std::string> catalog() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
  names.insert(names.end(), kNoncyclic.begin(), kNoncyclic.end());
  return names;
}

std::string coeffs(const BrauerRelation& r) {
  std::string s;
  for (auto n : r.coefficients()) s += (s.empty() ? "" : " ") + std::to_string(n);
  return "[" + s + "]";
}

Outcome relation_existence() {
  Outcome o;
  for (const auto& name : catalog()) {
    auto g = preset_group(name);
    bool empty = relation_lattice(make_lattice(g)).empty();
    o.require(empty == g->is_cyclic(), name + (empty ? " has no relation" : " has a relation"));
  }
  o.detail = o.pass ? "C1..C12 empty; V4 S3 D4 Q8 C2^3 C2xC4 A4 nonempty" : o.detail;
  return o;
}

Outcome free_triviality() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& name : catalog()) {
    auto g = preset_group(name);
    GModule free = regular_module(g);
    for (const auto& theta : relation_lattice(make_lattice(g))) {
      o.require(regulator_constant(theta, free) == 1, name + " pairing path " + coeffs(theta));
      o.require(regulator_constant_homological(theta, free, build_phi(theta, 1)) == 1,
                name + " homological path " + coeffs(theta));
      ++count;
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " relations, both paths give 1";
  return o;
}

std::vector<std::pair<std::string, GModule>> module_catalog(const LatticePtr& lat) {
  const auto& g = lat->group();
  std::vector<std::pair<std::string, GModule>> mods;
  GModule z = trivial_module(g);
  GModule aug = augmentation_ideal(g).module;
  mods.emplace_back("Z", z);
  mods.emplace_back("IG", aug);
  mods.emplace_back("IG*", dual_lattice(aug));
  for (std::size_t c = 0; c < lat->class_count(); ++c) {
    GModule p = permutation_module(lat->representative(c));
    mods.emplace_back("Z[G/H" + std::to_string(c) + "]", p);
    mods.emplace_back("Z[G/H" + std::to_string(c) + "]*", dual_lattice(p));
  }
  for (long m : {2L, 3L, 4L}) {
    mods.emplace_back("Z/" + std::to_string(m), reduce_mod(z, m));
    for (const auto& k : lat->subgroups())
      if (2 * k.order() == g->order()) mods.emplace_back("Z/" + std::to_string(m) + " twist", sign_module(k, m));
  }
  for (const auto& d : valid_local_data(g)) mods.emplace_back("W*", dual_inertial(inertial_lattice(d)));
  return mods;
}

Outcome path_agreement() {
  Outcome o;
  std::size_t count = 0;
  for (const char* name : {"V4", "S3", "D4", "Q8"}) {
    auto lat = make_lattice(preset_group(name));
    auto mods = module_catalog(lat);
    for (const auto& theta : relation_lattice(lat)) {
      std::vector<PhiDatum> phis;
      for (std::uint64_t seed : {1u, 2u, 3u}) phis.push_back(build_phi(theta, seed));
      for (const auto& [label, m] : mods) {
        mpq_class pairing = regulator_constant(theta, m);
        for (const auto& phi : phis) {
          o.require(regulator_constant_homological(theta, m, phi) == pairing,
                    std::string(name) + " " + label + " seed " + std::to_string(phi.seed) + " " + coeffs(theta));
          ++count;
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " (relation, module, seed) triples agree";
  return o;
}

Outcome multiplicativity() {
  Outcome o;
  for (const char* name : {"V4", "S3"}) {
    auto g = preset_group(name);
    auto aug = augmentation_ideal(g);
    GModule z = trivial_module(g);
    for (const auto& theta : relation_lattice(make_lattice(g))) {
      o.require(check_multiplicativity(theta, aug.inclusion, augmentation_map(g)).holds,
                std::string(name) + " augmentation sequence");
      for (long m : {2L, 3L}) {
        GMap times(z, z, IntMatrix{{m}});
        GMap reduce(z, reduce_mod(z, m), IntMatrix{{1}});
        o.require(check_multiplicativity(theta, times, reduce).holds, std::string(name) + " Z -> Z -> Z/" + std::to_string(m));
      }
      for (const auto& b : {reduce_mod(z, 2), z, regular_module(g)}) {
        GModule a = aug.module;
        GModule s = direct_sum(a, b);
        IntMatrix inc(s.rank(), a.rank()), proj(b.rank(), s.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) inc(i, i) = 1;
        for (std::size_t i = 0; i < b.rank(); ++i) proj(i, a.rank() + i) = 1;
        auto r = check_multiplicativity(theta, GMap(a, s, inc), GMap(s, b, proj));
        o.require(r.holds && r.psi == 1, std::string(name) + " split sequence");
      }
    }
  }
  if (o.pass) o.detail = "C(M) = C(M')C(M'')psi^2 on V4 and S3; split psi = 1";
  return o;
}

Outcome cohomological_triviality() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& name : kNoncyclic) {
    auto g = preset_group(name);
    for (const auto& theta : relation_lattice(make_lattice(g)))
      for (long m : {2L, 3L, 6L}) {
        auto r = check_cohomologically_trivial(theta, reduce_mod(regular_module(g), m));
        o.require(r.holds, name + " Z[G]/" + std::to_string(m) + " gives " + to_string(r.value));
        ++count;
      }
  }
  // Z[V4]^2 / Z[V4]v is cohomologically trivial with torsion of order 8; here the exponent of the
  // torsion term matters
  auto v4 = preset_group("V4");
  GModule free2 = direct_sum(regular_module(v4), regular_module(v4));
  IntMatrix v(8, 1), rels(8, 4);
  const long entries[8] = {0, -1, 2, -1, 2, 1, 1, -2};
  for (std::size_t i = 0; i < 8; ++i) v(i, 0) = entries[i];
  for (int g = 0; g < 4; ++g) rels.set_block(0, static_cast<std::size_t>(g), free2.action(g) * v);
  GModule mixed(v4, rels, free2.actions());
  BrauerRelation theta(make_lattice(v4), {1, -1, -1, -1, 2});
  auto r = check_cohomologically_trivial(theta, mixed);
  mpq_class exponent_one = 1;
  for (const auto& f : regulator_constant_detailed(theta, mixed).factors)
    exponent_one *= rational_power(f.determinant / mpq_class(f.torsion), f.coefficient);
  o.require(r.holds, "mixed V4 module gives " + to_string(r.value));
  o.require(exponent_one != 1, "exponent 1 would also give 1 on the mixed module");
  if (o.pass)
    o.detail = std::to_string(count) + " (relation, m) pairs give 1; mixed V4 module gives 1 (exponent 1 would give " +
               to_string(exponent_one) + ")";
  return o;
}

Outcome functoriality() {
  Outcome o;
  auto v4 = make_lattice(preset_group("V4"));
  auto d4 = make_lattice(preset_group("D4"));
  BrauerRelation theta(v4, {1, -1, -1, -1, 2});
  o.require(is_relation(theta), "V4 relation");

  // (i) V4 relations induced to D4
  for (const auto& h : d4->subgroups()) {
    if (h.order() != 4 || is_cyclic(h)) continue;
    auto inner = as_group(h);
    auto lat = make_lattice(inner.group);
    for (const auto& t : relation_lattice(lat))
      for (const auto& n : {regular_module(d4->group()), trivial_module(d4->group()), augmentation_ideal(d4->group()).module})
        o.require(check_induction(t, d4, inner.embedding, n).holds(), "(i) induction V4 -> D4");
  }
  // (ii) restriction of the D4 relations and of the V4 relation
  for (const auto& t : relation_lattice(d4))
    for (const auto& y : d4->subgroups()) {
      auto sg = as_group(y);
      for (const auto& n : {trivial_module(sg.group), regular_module(sg.group)})
        o.require(check_restriction(t, y, n).holds(), "(ii) restriction in D4");
    }
  for (std::size_t c = 1; c < 4; ++c) {
    const Subgroup& y = v4->representative(c);
    auto sg = as_group(y);
    o.require(check_restriction(theta, y, sign_module(trivial_subgroup(sg.group), 0)).holds(), "(ii) restriction in V4");
  }
  // (iii) inflation D4 -> D4/N
  for (const auto& n : d4->subgroups()) {
    if (n.order() != 2 || !is_normal(n)) continue;
    auto q = quotient(n);
    auto lat = make_lattice(q.group);
    for (const auto& t : relation_lattice(lat))
      for (const auto& m : {trivial_module(q.group), augmentation_ideal(q.group).module, regular_module(q.group)})
        o.require(check_inflation(t, d4, q.projection, m).holds(), "(iii) inflation D4 -> V4");
  }
  if (o.pass) o.detail = "induction, restriction and inflation on V4 and D4";
  return o;
}

Outcome inertial_lemma() {
  Outcome o;
  std::size_t data = 0;
  for (const char* name : {"V4", "D4", "Q8", "C2xC4"}) {
    auto g = preset_group(name);
    auto rels = relation_lattice(make_lattice(g));
    for (const auto& d : valid_local_data(g)) {
      ++data;
      auto lat = inertial_lattice(d);
      for (const auto& row : dual_cohomology_table(lat))
        o.require(row.h1_dual == row.h2_w, std::string(name) + " h1(H, W*) != h2(H, W)");
      for (const auto& theta : rels) {
        auto r = check_w_dual_trivial(d, theta);
        o.require(r.holds(), std::string(name) + " C(W*) = " + to_string(r.pairing) + " / " + to_string(r.homological));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(data) + " local data, C(W*) = 1 on both paths";
  return o;
}

Outcome ws_aggregate() {
  Outcome o;
  auto d4 = make_lattice(preset_group("D4"));
  auto rels = relation_lattice(d4);
  std::size_t count = 0;
  for (const auto& gp : d4->subgroups()) {
    if (gp.order() != 4 || is_cyclic(gp)) continue;
    auto sub = as_group(gp);
    for (const auto& datum : valid_local_data(sub.group))
      for (const auto& theta : rels) {
        auto r = ws_regulator_constant(theta, {{gp, datum}});
        o.require(r.holds(), "C(W_S) = " + to_string(r.direct));
        ++count;
      }
  }
  if (o.pass) o.detail = std::to_string(count) + " (G_P, datum, relation) instances give 1";
  return o;
}

Outcome zeta8(const std::string& dir) {
  Outcome o;
  FieldFixture f = load_fixture(dir + "/zeta8.json");
  BrauerRelation theta(f.lattice, {1, -1, -1, -1, 2});
  auto r = verify(f, theta, 1e-9);
  for (const auto& c : r.checks) o.require(c.pass, c.name + " rel. error " + to_decimal(c.rel_error, 3));
  o.require(r.consistent, "consistency");
  o.require(abs(r.c_units - Real("0.5")) <= Real("0.5e-9"), "C_units = " + to_decimal(r.c_units));
  o.require(r.c_z == mpq_class(1, 2), "C(Z) = " + to_string(r.c_z));
  o.require(r.c_zs == 1, "C(Z[S]) = " + to_string(r.c_zs));
  if (o.pass) o.detail = "C_units = " + to_decimal(r.c_units, 12) + ", C(Z) = 1/2, C(Z[S]) = 1";
  return o;
}

Outcome relation_sanity() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& name : catalog()) {
    auto lat = make_lattice(preset_group(name));
    for (const auto& theta : relation_lattice(lat)) {
      std::int64_t sum = 0, weighted = 0;
      for (std::size_t c = 0; c < lat->class_count(); ++c) {
        sum += theta.coefficient(c);
        weighted += theta.coefficient(c) * static_cast<std::int64_t>(lat->group()->order() / lat->representative(c).order());
      }
      o.require(sum == 0 && weighted == 0, name + " " + coeffs(theta));
      ++count;
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " relations";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string fixtures = argc > 1 ? argv[1] : FIXTURE_DIR;
  std::vector<Criterion> criteria = {
      {"relation existence", 5, relation_existence},
      {"free triviality", 10, free_triviality},
      {"path agreement", 120, path_agreement},
      {"multiplicativity", 30, multiplicativity},
      {"cohomological triviality", 30, cohomological_triviality},
      {"functoriality", 30, functoriality},
      {"inertial lemma", 120, inertial_lemma},
      {"W_S aggregate", 30, ws_aggregate},
      {"zeta8 end-to-end", 5, [&] { return zeta8(fixtures); }},
      {"relation sanity", 5, relation_sanity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    failed += !o.pass;
    std::printf("%s  %-26s %7.2f s / %3.0f s  %s\n", o.pass ? "PASS" : "FAIL", c.name.c_str(), secs, c.limit_seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
