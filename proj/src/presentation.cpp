#include "brauer/presentation.hpp"

#include <stdexcept>

namespace brauer {

AbelianGroup::AbelianGroup(std::size_t g, IntMatrix r) : gens(g), rels(std::move(r)) {
  if (rels.rows() != gens) throw std::invalid_argument("AbelianGroup: relation matrix has wrong row count");
}

std::size_t AbelianGroup::free_rank() const { return gens - rank(rels); }

std::optional<mpz_class> AbelianGroup::order() const {
  if (free_rank() != 0) return std::nullopt;
  return torsion_order();
}

mpz_class AbelianGroup::torsion_order() const {
  mpz_class n = 1;
  for (const auto& d : smith_diagonal(rels))
    if (d != 0) n *= d;
  return n;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  return AbelianGroup(a.gens + b.gens, block_diagonal({a.rels, b.rels}));
}

void AbelianHom::validate() const {
  if (matrix.rows() != target.gens || matrix.cols() != source.gens)
    throw std::invalid_argument("AbelianHom: matrix shape does not match presentations");
  ImageLattice target_rels(target.rels);
  if (!target_rels.contains_columns(matrix * source.rels))
    throw std::invalid_argument("AbelianHom: not well defined on relations");
}

IntMatrix preimage_of_relations(const IntMatrix& f, const IntMatrix& target_rels) {
  const std::size_t n = f.cols();
  IntMatrix k = kernel_basis(hstack(f, target_rels));
  return column_hnf(k.rows_range(0, n));
}

KernelData kernel(const AbelianHom& f) {
  IntMatrix basis = preimage_of_relations(f.matrix, f.target.rels);
  auto rels = solve_integer(basis, f.source.rels);
  if (!rels) throw std::logic_error("kernel: source relations escape the preimage lattice");
  return {AbelianGroup(basis.cols(), std::move(*rels)), std::move(basis)};
}

AbelianGroup cokernel(const AbelianHom& f) {
  return AbelianGroup(f.target.gens, hstack(f.target.rels, f.matrix));
}

}  // namespace brauer
