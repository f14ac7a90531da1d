#pragma once

#include <cstdint>
#include <vector>

#include "brauer/groups.hpp"
#include "brauer/linalg.hpp"

namespace brauer {

/// Integer combination of conjugacy classes of subgroups (one coefficient per class representative).
class BrauerRelation {
 public:
  explicit BrauerRelation(LatticePtr lattice);
  BrauerRelation(LatticePtr lattice, std::vector<std::int64_t> coeffs);

  const LatticePtr& lattice() const { return lattice_; }
  const GroupPtr& group() const { return lattice_->group(); }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(std::size_t cls) const { return coeffs_[cls]; }
  void add(std::size_t cls, std::int64_t n) { coeffs_[cls] += n; }
  bool is_zero() const;

  /// Classes with nonzero coefficient, ascending.
  std::vector<std::size_t> support() const;

  friend bool operator==(const BrauerRelation& a, const BrauerRelation& b) {
    return same_group(a.group(), b.group()) && a.coeffs_ == b.coeffs_;
  }

 private:
  LatticePtr lattice_;
  std::vector<std::int64_t> coeffs_;
};

/// #{gH : c g H = g H for all c in C}. Throws std::invalid_argument on parent mismatch.
std::size_t fixed_point_count(const Subgroup& c, const Subgroup& h);

/// Rows: cyclic subgroup classes; columns: all subgroup classes.
IntMatrix marks_matrix(const SubgroupLattice& lattice);
/// Indices of the cyclic classes, in row order of marks_matrix.
std::vector<std::size_t> cyclic_classes(const SubgroupLattice& lattice);

/// Basis of the relation lattice, canonicalized by Hermite form.
std::vector<BrauerRelation> relation_lattice(const LatticePtr& lattice);

/// True iff the permutation character vanishes on every cyclic subgroup.
bool is_relation(const BrauerRelation& r);

/// Transport along an injective homomorphism G -> X (embedding indexed by elements of G).
BrauerRelation induce(const BrauerRelation& r, const LatticePtr& target, const std::vector<int>& embedding);

struct RestrictedRelation {
  SubgroupAsGroup subgroup;
  BrauerRelation relation;
};
/// Mackey restriction to Y, collected over the conjugacy classes of Y.
RestrictedRelation restrict_to(const BrauerRelation& r, const Subgroup& y);

/// Pull back along a surjective homomorphism Z -> G (projection indexed by elements of Z).
BrauerRelation inflate(const BrauerRelation& r, const LatticePtr& source, const std::vector<int>& projection);

}  // namespace brauer
