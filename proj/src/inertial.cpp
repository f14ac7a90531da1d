#include "brauer/inertial.hpp"

#include <set>
#include <stdexcept>

namespace brauer {

void LocalGaloisDatum::validate() const {
  if (!d || !same_group(d, inertia.parent)) throw std::invalid_argument("LocalGaloisDatum: inertia is not a subgroup of D");
  if (!is_normal(inertia)) throw std::invalid_argument("LocalGaloisDatum: inertia subgroup is not normal");
  if (frobenius < 0 || static_cast<std::size_t>(frobenius) >= d->order())
    throw std::invalid_argument("LocalGaloisDatum: frobenius is not an element of D");
  Quotient q = quotient(inertia);
  if (generated_subgroup(q.group, {q.projection[static_cast<std::size_t>(frobenius)]}).order() != q.group->order())
    throw std::invalid_argument("LocalGaloisDatum: frobenius does not generate D/I");
}

std::vector<LocalGaloisDatum> valid_local_data(const GroupPtr& d) {
  std::vector<LocalGaloisDatum> out;
  SubgroupLattice lat(d);
  for (const auto& i : lat.subgroups()) {
    if (!is_normal(i)) continue;
    Quotient q = quotient(i);
    std::set<int> seen;
    for (int x = 0; x < static_cast<int>(d->order()); ++x) {
      int image = q.projection[static_cast<std::size_t>(x)];
      if (seen.count(image)) continue;
      if (generated_subgroup(q.group, {image}).order() != q.group->order()) continue;
      seen.insert(image);
      out.push_back({d, i, x});
    }
  }
  return out;
}

InertialLattice inertial_lattice(const LocalGaloisDatum& datum) {
  datum.validate();
  const auto& d = datum.d;
  Quotient q = quotient(datum.inertia);
  const std::size_t n = d->order();
  const std::size_t nb = q.group->order();

  GModule zd = regular_module(d);
  GModule zdbar = inflated_module(regular_module(q.group), d, q.projection);
  GModule ambient = direct_sum(zd, zdbar);

  // (x, y) ↦ (aug x, x̄ - (φ̄ - 1) y)
  IntMatrix cond(1 + nb, n + nb);
  for (std::size_t g = 0; g < n; ++g) {
    cond(0, g) = 1;
    cond(1 + static_cast<std::size_t>(q.projection[g]), g) = 1;
  }
  const IntMatrix frob = regular_module(q.group).action(q.projection[static_cast<std::size_t>(datum.frobenius)]);
  cond.set_block(1, n, IntMatrix::identity(nb) - frob);

  IntMatrix basis = kernel_basis(cond);
  if (basis.cols() != n) throw std::logic_error("inertial_lattice: rank differs from |D|");
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < n; ++g) {
    auto a = solve_integer(basis, ambient.action(static_cast<int>(g)) * basis);
    if (!a) throw std::logic_error("inertial_lattice: W is not D-stable");
    action.push_back(std::move(*a));
  }
  GModule w = GModule::lattice(d, std::move(action));
  return {datum, std::move(q), std::move(ambient), std::move(w), std::move(basis)};
}

BottomRow check_bottom_row(const InertialLattice& lat) {
  const auto& d = lat.datum.d;
  const std::size_t n = d->order();
  const std::size_t nb = lat.quotient.group->order();
  IntMatrix norm(n + nb, 1);
  for (std::size_t i = 0; i < nb; ++i) norm(n + i, 0) = 1;
  auto coords = solve_integer(lat.embedding, norm);
  if (!coords) throw std::logic_error("check_bottom_row: norm element outside W");
  GMap iota(trivial_module(d), lat.w, *coords);

  // x = Σ_{g≠e} x_g (g - e) when aug x = 0
  IntMatrix first(n - 1, n + nb);
  for (std::size_t g = 1; g < n; ++g) first(g - 1, g) = 1;
  GMap proj(lat.w, augmentation_ideal(d).module, first * lat.embedding);
  ExactnessReport rep = check_short_exact(iota, proj);
  return {std::move(iota), std::move(proj), rep};
}

GModule dual_inertial(const InertialLattice& lat) { return dual_lattice(lat.w); }

std::vector<DualCohomologyRow> dual_cohomology_table(const InertialLattice& lat, const CohomologyConfig& config) {
  GModule dual = dual_inertial(lat);
  std::vector<DualCohomologyRow> rows;
  auto sublat = make_lattice(lat.datum.d);
  const auto& subs = sublat->subgroups();
  for (std::size_t i = 0; i < subs.size(); ++i)
    rows.push_back({i, cohomology_order(subs[i], dual, 1, config), cohomology_order(subs[i], lat.w, 2, config)});
  return rows;
}

WDualReport check_w_dual_trivial(const LocalGaloisDatum& datum, const BrauerRelation& theta, std::uint64_t seed) {
  if (!same_group(datum.d, theta.group())) throw std::invalid_argument("check_w_dual_trivial: relation is not over D");
  GModule dual = dual_inertial(inertial_lattice(datum));
  WDualReport r;
  r.pairing = regulator_constant(theta, dual);
  r.homological = theta.is_zero() ? mpq_class(1) : regulator_constant_homological(theta, dual, build_phi(theta, seed));
  return r;
}

WsReport ws_regulator_constant(const BrauerRelation& theta, const std::vector<LocalBlock>& blocks) {
  const auto& g = theta.group();
  std::vector<IntMatrix> empty(g->order(), IntMatrix(0, 0));
  GModule total = GModule::lattice(g, empty);
  WsReport r{1, 1};
  for (const auto& b : blocks) {
    if (!same_group(b.decomposition.parent, g)) throw std::invalid_argument("ws_regulator_constant: G_P is not a subgroup of G");
    auto sub = as_group(b.decomposition);
    if (!same_group(sub.group, b.datum.d)) throw std::invalid_argument("ws_regulator_constant: local datum is not over G_P");
    GModule dual = dual_inertial(inertial_lattice(b.datum));
    total = direct_sum(total, induced_module(dual, b.decomposition));
    r.restricted *= regulator_constant(restrict_to(theta, b.decomposition).relation, dual);
  }
  r.direct = regulator_constant(theta, total);
  return r;
}

}  // namespace brauer
