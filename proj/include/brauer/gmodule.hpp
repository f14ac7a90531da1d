#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "brauer/groups.hpp"
#include "brauer/linalg.hpp"
#include "brauer/presentation.hpp"

namespace brauer {

/// Coordinates adapted to Z^n / im(rels): y = u x splits the module as ⊕ Z/d_i ⊕ Z^f.
struct ModuleStructure {
  IntMatrix u;
  IntMatrix u_inv;
  /// One entry per coordinate of y: the invariant factor d_i (1 = trivial, 0 = free).
  std::vector<mpz_class> diag;
  std::vector<std::size_t> torsion_coords;
  std::vector<std::size_t> free_coords;

  explicit ModuleStructure(const IntMatrix& rels);

  bool in_relations(const std::vector<mpz_class>& x) const;
  bool columns_in_relations(const IntMatrix& x) const;
  /// M -> M/tors M = Z^f
  IntMatrix free_projection() const { return u.select_rows(free_coords); }
  /// Z^f -> Z^n, a section of free_projection
  IntMatrix free_section() const { return u_inv.select_columns(free_coords); }
  mpz_class torsion_order() const;
};

/// Finitely presented Z[G]-module Z^n / im(rels) with an integer matrix for every group element.
class GModule {
 public:
  /// Checks that the action is well defined and multiplicative modulo the relations.
  GModule(GroupPtr group, IntMatrix rels, std::vector<IntMatrix> action);

  /// Actions of the remaining elements are derived through the Cayley table.
  static GModule from_generator_action(GroupPtr group, IntMatrix rels, const std::map<int, IntMatrix>& given);
  /// Torsion-free module Z^n with no relations.
  static GModule lattice(GroupPtr group, std::vector<IntMatrix> action);

  const GroupPtr& group() const { return group_; }
  std::size_t rank() const { return rels_.rows(); }
  const IntMatrix& rels() const { return rels_; }
  const IntMatrix& action(int g) const { return action_[static_cast<std::size_t>(g)]; }
  const std::vector<IntMatrix>& actions() const { return action_; }
  const ModuleStructure& structure() const { return *structure_; }
  AbelianGroup underlying() const { return AbelianGroup(rank(), rels_); }

  std::size_t free_rank() const { return structure_->free_coords.size(); }
  mpz_class torsion_order() const { return structure_->torsion_order(); }
  bool is_torsion_free() const { return structure_->torsion_coords.empty(); }
  /// Action on M/tors M in the coordinates of ModuleStructure::free_projection.
  IntMatrix free_action(int g) const;

 private:
  GroupPtr group_;
  IntMatrix rels_;
  std::vector<IntMatrix> action_;
  std::shared_ptr<const ModuleStructure> structure_;
};

/// G-equivariant homomorphism given on generators (target coordinates = matrix * source coordinates).
struct GMap {
  GModule source;
  GModule target;
  IntMatrix matrix;

  /// Checks well-definedness on relations and equivariance modulo the target relations.
  GMap(GModule src, GModule tgt, IntMatrix m);

  AbelianHom underlying() const { return {source.underlying(), target.underlying(), matrix}; }
};

GMap identity_map(const GModule& m);
GMap compose(const GMap& second, const GMap& first);

GModule trivial_module(const GroupPtr& g);
GModule regular_module(const GroupPtr& g);
/// Z[G/H] on the left cosets of H, ordered as in left_cosets().
GModule permutation_module(const Subgroup& h);

struct AugmentationIdeal {
  GModule module;
  /// Inclusion into Z[G]; basis g - e for g != e.
  GMap inclusion;
};
AugmentationIdeal augmentation_ideal(const GroupPtr& g);

/// Augmentation Z[G] -> Z.
GMap augmentation_map(const GroupPtr& g);

/// Rank-one module Z/modulus (Z when modulus == 0) on which G acts by +1 on kernel and -1 elsewhere.
/// kernel must have index 1 or 2.
GModule sign_module(const Subgroup& kernel, long modulus);

/// M / mM
GModule reduce_mod(const GModule& m, long modulus);

GModule direct_sum(const GModule& a, const GModule& b);

/// Dual lattice with the contragredient action. Throws std::invalid_argument if torsion is present.
GModule dual_lattice(const GModule& m);

/// Induction from a subgroup; n must be a module over as_group(y).group.
GModule induced_module(const GModule& n, const Subgroup& y);
/// Restriction along an embedding of groups (embedding indexed by elements of the new group).
GModule restricted_module(const GModule& m, const GroupPtr& sub, const std::vector<int>& embedding);
/// Inflation along a surjection Z -> G (projection indexed by elements of Z).
GModule inflated_module(const GModule& m, const GroupPtr& z, const std::vector<int>& projection);

/// M^H with its inclusion into M (columns are generators of M^H in M-coordinates).
/// Also realizes Hom_G(Z[G/H], M) by evaluation at the coset H.
struct FixedSubmodule {
  AbelianGroup presentation;
  IntMatrix inclusion;
};
FixedSubmodule fixed_submodule(const GModule& m, const Subgroup& h);
FixedSubmodule hom_fixed(const Subgroup& h, const GModule& m);

struct TorsionSplit {
  GModule torsion;
  GModule free;
  IntMatrix torsion_inclusion;
  GMap projection;
};
TorsionSplit torsion_and_free(const GModule& m);

struct KernelCokernel {
  GModule kernel;
  IntMatrix kernel_inclusion;
  GModule cokernel;
  std::optional<mpz_class> kernel_order;
  std::optional<mpz_class> cokernel_order;
};
KernelCokernel kernel_and_cokernel(const GMap& f);

struct ExactnessReport {
  bool injective = false;
  bool surjective = false;
  bool composite_zero = false;
  bool kernel_in_image = false;
  bool exact() const { return injective && surjective && composite_zero && kernel_in_image; }
};
/// Exactness of 0 -> M' -f-> M -g-> M'' -> 0.
ExactnessReport check_short_exact(const GMap& f, const GMap& g);

}  // namespace brauer
