#pragma once

#include <optional>
#include <vector>

#include "brauer/linalg.hpp"

namespace brauer {

/// Finitely presented abelian group Z^gens / im(rels).
struct AbelianGroup {
  std::size_t gens = 0;
  IntMatrix rels{0, 0};

  AbelianGroup() = default;
  AbelianGroup(std::size_t g, IntMatrix r);

  std::vector<mpz_class> invariants() const { return cokernel_invariants(rels); }
  std::size_t free_rank() const;
  /// Order when finite.
  std::optional<mpz_class> order() const;
  /// Order of the torsion subgroup (product of the nonzero invariant factors).
  mpz_class torsion_order() const;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Homomorphism of presented groups given on generators: target coordinates = matrix * source coordinates.
struct AbelianHom {
  AbelianGroup source;
  AbelianGroup target;
  IntMatrix matrix;

  /// Throws std::invalid_argument unless relations of the source map into im(target rels).
  void validate() const;
};

struct KernelData {
  AbelianGroup group;
  /// Columns: generators of the kernel as source-coordinate vectors.
  IntMatrix inclusion;
};

KernelData kernel(const AbelianHom& f);
AbelianGroup cokernel(const AbelianHom& f);

/// Lattice {x : f x ∈ im(target rels)} as a column basis in Hermite form.
IntMatrix preimage_of_relations(const IntMatrix& f, const IntMatrix& target_rels);

}  // namespace brauer
