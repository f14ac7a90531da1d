#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "brauer/cohomology.hpp"
#include "brauer/gmodule.hpp"
#include "brauer/relations.hpp"

namespace brauer {

/// Bilinear form on M~ = M / tors M, in the coordinates of ModuleStructure::free_projection.
struct PairingGram {
  GModule module;
  RationalMatrix gram;

  /// Throws std::invalid_argument unless gram is symmetric, G-invariant and nondegenerate.
  void validate() const;
};

/// Σ_g ρ̃(g)ᵀ ρ̃(g): the dot product averaged over G.
PairingGram invariant_pairing(const GModule& m);
/// Σ_g ρ̃(g)ᵀ seed ρ̃(g) for a symmetric positive definite seed.
PairingGram averaged_pairing(const GModule& m, const RationalMatrix& seed);

struct RegulatorFactor {
  std::size_t subgroup_class = 0;
  std::int64_t coefficient = 0;
  mpz_class torsion;
  mpq_class determinant;
  /// |tors(M^H)|^{-2} · det, before raising to the coefficient
  mpq_class factor;
};

struct RegulatorConstant {
  mpq_class value;
  std::vector<RegulatorFactor> factors;
};

RegulatorConstant regulator_constant_detailed(const BrauerRelation& theta, const GModule& m,
                                              const std::optional<PairingGram>& pairing = std::nullopt);
mpq_class regulator_constant(const BrauerRelation& theta, const GModule& m,
                             const std::optional<PairingGram>& pairing = std::nullopt);

/// P1 = ⊕_{n_H>0} Z[G/H]^{n_H}, P2 = ⊕_{n_H<0} Z[G/H]^{-n_H} and an injective φ: P1 -> P2 with finite cokernel.
struct PhiDatum {
  GModule p1;
  GModule p2;
  /// Subgroup class of each Z[G/H] summand, in block order.
  std::vector<std::size_t> p1_classes;
  std::vector<std::size_t> p2_classes;
  GMap phi;
  GMap phi_tr;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
};

inline constexpr std::size_t kDefaultPhiAttempts = 200;

/// Random integer combination (coefficients in [-2, 2]) of the double-coset basis of Hom_G(P1, P2).
/// Throws std::invalid_argument for the zero relation and std::runtime_error when attempts run out.
PhiDatum build_phi(const BrauerRelation& theta, std::uint64_t seed = 1, std::size_t max_attempts = kDefaultPhiAttempts);

struct HomologicalConstant {
  mpz_class ker_phi, coker_phi, ker_phi_tr, coker_phi_tr;
  mpq_class value;
};

/// (|Coker(φ^Tr,M)| / |Ker(φ^Tr,M)|) / (|Coker(φ,M)| / |Ker(φ,M)|), with Hom_G(Z[G/H], M) = M^H.
/// Throws std::runtime_error if one of the four groups is infinite.
HomologicalConstant regulator_constant_homological_detailed(const BrauerRelation& theta, const GModule& m,
                                                            const std::optional<PhiDatum>& phi = std::nullopt);
mpq_class regulator_constant_homological(const BrauerRelation& theta, const GModule& m,
                                         const std::optional<PhiDatum>& phi = std::nullopt);

struct MultiplicativityReport {
  mpq_class c_middle;  // C(M)
  mpq_class c_sub;     // C(M')
  mpq_class c_quotient;  // C(M'')
  mpq_class psi;
  bool holds = false;
};
/// C(M) = C(M') C(M'') ψ(f)² for 0 -> M' -f-> M -g-> M'' -> 0. Throws std::invalid_argument if not exact.
MultiplicativityReport check_multiplicativity(const BrauerRelation& theta, const GMap& f, const GMap& g,
                                              const CohomologyConfig& config = {});

struct TrivialityReport {
  mpq_class value;
  bool holds = false;
};
/// Requires h^1 = h^2 = 1 on every subgroup (std::invalid_argument otherwise) and tests C_Θ(M) = 1.
TrivialityReport check_cohomologically_trivial(const BrauerRelation& theta, const GModule& m,
                                               const CohomologyConfig& config = {});

struct FunctorialityReport {
  mpq_class lhs;
  mpq_class rhs;
  bool holds() const { return lhs == rhs; }
};
/// (i) C_{Ind Θ}(N) = C_Θ(Res N) for G embedded in X; n is a module over X.
FunctorialityReport check_induction(const BrauerRelation& theta, const LatticePtr& x, const std::vector<int>& embedding,
                                    const GModule& n);
/// (ii) C_{Res_Y Θ}(N) = C_Θ(Ind_Y N); n is a module over as_group(y).group.
FunctorialityReport check_restriction(const BrauerRelation& theta, const Subgroup& y, const GModule& n);
/// (iii) C_{Inf Θ}(Inf M) = C_Θ(M) along a surjection Z -> G.
FunctorialityReport check_inflation(const BrauerRelation& theta, const LatticePtr& z, const std::vector<int>& projection,
                                    const GModule& m);

}  // namespace brauer
