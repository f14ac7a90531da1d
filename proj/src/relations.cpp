#include "brauer/relations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace brauer {

BrauerRelation::BrauerRelation(LatticePtr lattice)
    : lattice_(std::move(lattice)), coeffs_(lattice_->class_count(), 0) {}

BrauerRelation::BrauerRelation(LatticePtr lattice, std::vector<std::int64_t> coeffs)
    : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != lattice_->class_count())
    throw std::invalid_argument("BrauerRelation: one coefficient per subgroup class expected");
}

bool BrauerRelation::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t n) { return n == 0; });
}

std::vector<std::size_t> BrauerRelation::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) s.push_back(i);
  return s;
}

std::size_t fixed_point_count(const Subgroup& c, const Subgroup& h) {
  if (!same_group(c.parent, h.parent)) throw std::invalid_argument("fixed_point_count: parent mismatch");
  const auto& g = *h.parent;
  std::size_t count = 0;
  for (int rep : left_cosets(h).representatives) {
    const int inv = g.inverse(rep);
    bool fixed = true;
    for (int x : c.elements)
      if (!h.contains(g.mul(g.mul(inv, x), rep))) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

std::vector<std::size_t> cyclic_classes(const SubgroupLattice& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.class_count(); ++i)
    if (lattice.classes()[i].cyclic) out.push_back(i);
  return out;
}

IntMatrix marks_matrix(const SubgroupLattice& lattice) {
  const auto cyc = cyclic_classes(lattice);
  IntMatrix m(cyc.size(), lattice.class_count());
  for (std::size_t r = 0; r < cyc.size(); ++r)
    for (std::size_t c = 0; c < lattice.class_count(); ++c)
      m(r, c) = static_cast<unsigned long>(fixed_point_count(lattice.representative(cyc[r]), lattice.representative(c)));
  return m;
}

std::vector<BrauerRelation> relation_lattice(const LatticePtr& lattice) {
  IntMatrix k = kernel_basis(marks_matrix(*lattice));
  std::vector<BrauerRelation> basis;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    std::vector<std::int64_t> coeffs(k.rows());
    for (std::size_t i = 0; i < k.rows(); ++i) {
      if (!k(i, j).fits_slong_p()) throw std::overflow_error("relation_lattice: coefficient too large");
      coeffs[i] = k(i, j).get_si();
    }
    BrauerRelation r(lattice, std::move(coeffs));
    if (!is_relation(r)) throw std::logic_error("relation_lattice: kernel vector is not a relation");
    basis.push_back(std::move(r));
  }
  return basis;
}

bool is_relation(const BrauerRelation& r) {
  const auto& lat = *r.lattice();
  for (std::size_t c : cyclic_classes(lat)) {
    std::int64_t sum = 0;
    for (std::size_t h : r.support())
      sum += r.coefficient(h) *
             static_cast<std::int64_t>(fixed_point_count(lat.representative(c), lat.representative(h)));
    if (sum != 0) return false;
  }
  return true;
}

BrauerRelation induce(const BrauerRelation& r, const LatticePtr& target, const std::vector<int>& embedding) {
  const auto& source = *r.group();
  if (!is_homomorphism(source, *target->group(), embedding))
    throw std::invalid_argument("induce: map is not a homomorphism");
  if (std::set<int>(embedding.begin(), embedding.end()).size() != embedding.size())
    throw std::invalid_argument("induce: map is not injective");
  BrauerRelation out(target);
  for (std::size_t cls : r.support()) {
    std::vector<int> image;
    for (int x : r.lattice()->representative(cls).elements) image.push_back(embedding[static_cast<std::size_t>(x)]);
    std::sort(image.begin(), image.end());
    out.add(target->class_of(image), r.coefficient(cls));
  }
  return out;
}

RestrictedRelation restrict_to(const BrauerRelation& r, const Subgroup& y) {
  if (!same_group(r.group(), y.parent)) throw std::invalid_argument("restrict_to: subgroup of another group");
  auto sub = as_group(y);
  auto ylat = make_lattice(sub.group);
  std::map<int, int> position;
  for (std::size_t i = 0; i < sub.embedding.size(); ++i) position[sub.embedding[i]] = static_cast<int>(i);

  const auto& g = *r.group();
  BrauerRelation out(ylat);
  for (std::size_t cls : r.support()) {
    const Subgroup& h = r.lattice()->representative(cls);
    for (int rep : double_cosets(h, y)) {
      // Y ∩ g^{-1} H g
      Subgroup piece = intersect(y, conjugate_subgroup(h, g.inverse(rep)));
      std::vector<int> local;
      for (int x : piece.elements) local.push_back(position.at(x));
      std::sort(local.begin(), local.end());
      out.add(ylat->class_of(local), r.coefficient(cls));
    }
  }
  return {std::move(sub), std::move(out)};
}

BrauerRelation inflate(const BrauerRelation& r, const LatticePtr& source, const std::vector<int>& projection) {
  const auto& z = *source->group();
  const auto& g = *r.group();
  if (!is_homomorphism(z, g, projection)) throw std::invalid_argument("inflate: map is not a homomorphism");
  if (std::set<int>(projection.begin(), projection.end()).size() != g.order())
    throw std::invalid_argument("inflate: map is not surjective");
  BrauerRelation out(source);
  for (std::size_t cls : r.support()) {
    const Subgroup& h = r.lattice()->representative(cls);
    std::vector<int> preimage;
    for (std::size_t x = 0; x < z.order(); ++x)
      if (h.contains(projection[x])) preimage.push_back(static_cast<int>(x));
    out.add(source->class_of(preimage), r.coefficient(cls));
  }
  return out;
}

}  // namespace brauer
