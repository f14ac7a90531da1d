#pragma once

#include <vector>

#include "brauer/cohomology.hpp"
#include "brauer/gmodule.hpp"
#include "brauer/regconst.hpp"
#include "brauer/relations.hpp"

namespace brauer {

/// Decomposition group D, normal inertia subgroup I and an element whose image generates D/I.
struct LocalGaloisDatum {
  GroupPtr d;
  Subgroup inertia;
  int frobenius = 0;

  /// Throws std::invalid_argument unless I is normal and the image of frobenius generates D/I.
  void validate() const;
};

/// Every (I, φ) with I normal and D/I cyclic; φ runs over the smallest preimage of each generator of D/I.
std::vector<LocalGaloisDatum> valid_local_data(const GroupPtr& d);

/// W = {(x, y) ∈ ΔD ⊕ Z[D̄] : x̄ = (φ̄ - 1) y}, realized inside Z[D] ⊕ Z[D̄].
struct InertialLattice {
  LocalGaloisDatum datum;
  Quotient quotient;
  /// Z[D] ⊕ Z[D̄] with D acting on the second summand through D̄.
  GModule ambient;
  GModule w;
  /// Columns: basis of W in ambient coordinates (|D| + |D̄| rows).
  IntMatrix embedding;
};

InertialLattice inertial_lattice(const LocalGaloisDatum& datum);

/// Z -> W, 1 ↦ (0, N_D̄), and W -> ΔD, the first projection.
struct BottomRow {
  GMap norm;
  GMap projection;
  ExactnessReport exactness;
};
BottomRow check_bottom_row(const InertialLattice& lat);

GModule dual_inertial(const InertialLattice& lat);

struct DualCohomologyRow {
  std::size_t subgroup = 0;  // index into the lattice of D
  mpz_class h1_dual;         // h^1(H, W*)
  mpz_class h2_w;            // h^2(H, W)
};
/// h^1(H, W*) against h^2(H, W) for every subgroup H of D.
std::vector<DualCohomologyRow> dual_cohomology_table(const InertialLattice& lat, const CohomologyConfig& config = {});

struct WDualReport {
  mpq_class pairing;
  mpq_class homological;
  bool holds() const { return pairing == 1 && homological == 1; }
};
WDualReport check_w_dual_trivial(const LocalGaloisDatum& datum, const BrauerRelation& theta, std::uint64_t seed = 1);

/// One ramified orbit: decomposition subgroup G_P of G and local data on G_P.
struct LocalBlock {
  Subgroup decomposition;
  LocalGaloisDatum datum;
};

struct WsReport {
  /// C_Θ(⊕ Ind_{G_P}^G W*_P)
  mpq_class direct;
  /// Π C_{Res_{G_P} Θ}(W*_P)
  mpq_class restricted;
  bool holds() const { return direct == 1 && restricted == 1; }
};
WsReport ws_regulator_constant(const BrauerRelation& theta, const std::vector<LocalBlock>& blocks);

}  // namespace brauer
