#pragma once

#include <memory>
#include <vector>

#include "brauer/gmodule.hpp"
#include "brauer/relations.hpp"

namespace brauer {

struct CohomologyConfig {
  /// Highest degree that may be requested.
  std::size_t max_degree = 3;
  /// Share resolutions across calls through a process-wide, mutex-guarded table.
  bool use_cache = true;
};

/// Free resolution ... -> F_1 -> F_0 = Z[H] -> Z -> 0 of the trivial module over Z[H].
///
/// Each F_i is Z[H]^{k_i}. Its Z-basis is indexed by (generator j, element h) -> j*|H| + h,
/// standing for h·e_j. Generators of F_{i+1} are chosen greedily from a Z-basis of
/// ker(F_i -> F_{i-1}) until their H-orbits span that kernel.
class FreeResolution {
 public:
  FreeResolution(GroupPtr h, std::size_t length);

  const GroupPtr& group() const { return group_; }
  std::size_t length() const { return generators_.size(); }
  /// k_i
  std::size_t rank(std::size_t i) const { return i == 0 ? 1 : generators_[i - 1].cols(); }
  /// Images of the generators of F_i (i >= 1) as columns in the Z-basis of F_{i-1}.
  const IntMatrix& boundary_generators(std::size_t i) const { return generators_.at(i - 1); }
  /// Z-matrix of F_i -> F_{i-1} for i >= 1, and of the augmentation F_0 -> Z for i == 0.
  IntMatrix boundary_matrix(std::size_t i) const;

 private:
  GroupPtr group_;
  std::vector<IntMatrix> generators_;
};

std::shared_ptr<const FreeResolution> resolution_for(const GroupPtr& h, std::size_t length, bool use_cache = true);
void clear_resolution_cache();

/// Hom_H(F_•, M) for a subgroup H of M's group: C^i = M^{k_i}.
struct CochainComplex {
  Subgroup subgroup;
  GModule module;
  std::size_t degrees = 0;
  /// differentials[i]: C^i -> C^{i+1}, for i = 0..degrees
  std::vector<IntMatrix> differentials;
  /// rels[i]: relations of C^i, for i = 0..degrees+1
  std::vector<IntMatrix> rels;

  /// d^{i+1} d^i maps into the relations for every i.
  bool is_complex() const;
};

CochainComplex cochain_complex(const Subgroup& h, const GModule& m, std::size_t degrees,
                               const CohomologyConfig& config = {});

struct CohomologyGroup {
  std::size_t degree = 0;
  AbelianGroup group;
  /// Basis of the cocycle lattice in cochain coordinates; the group is this lattice modulo coboundaries.
  IntMatrix cocycles;
};

CohomologyGroup cohomology_group(const CochainComplex& complex, std::size_t degree);

/// Invariant factors of H^i(H, M). Degree 0 gives the invariants of M^H.
/// Throws std::out_of_range if degree exceeds config.max_degree.
std::vector<mpz_class> cohomology(const Subgroup& h, const GModule& m, std::size_t degree,
                                  const CohomologyConfig& config = {});

/// h^i(H, M) = |H^i(H, M)| for i >= 1.
mpz_class cohomology_order(const Subgroup& h, const GModule& m, std::size_t degree, const CohomologyConfig& config = {});

/// H^i(H, f) as a homomorphism of presented groups.
AbelianHom induced_map(const GMap& f, const Subgroup& h, std::size_t degree, const CohomologyConfig& config = {});

/// |Ker(H^1(H, f))|
mpz_class h1_kernel_order(const GMap& f, const Subgroup& h, const CohomologyConfig& config = {});

/// ∏_H |Ker H^1(H, f)|^{n_H}, evaluated on every member of each class (conjugate factors must agree).
mpq_class kani_defect(const BrauerRelation& theta, const GMap& f, const CohomologyConfig& config = {});

}  // namespace brauer
