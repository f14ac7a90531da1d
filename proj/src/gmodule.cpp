#include "brauer/gmodule.hpp"

#include <set>
#include <stdexcept>

namespace brauer {

ModuleStructure::ModuleStructure(const IntMatrix& rels) {
  const std::size_t n = rels.rows();
  auto d = smith(rels);
  u = std::move(d.u);
  auto inv = solve_integer(u, IntMatrix::identity(n));
  if (!inv) throw std::logic_error("ModuleStructure: Smith transform is not unimodular");
  u_inv = std::move(*inv);
  diag.assign(n, 0);
  for (std::size_t i = 0; i < std::min(n, rels.cols()); ++i) diag[i] = d.s(i, i);
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] == 0) free_coords.push_back(i);
    else if (diag[i] != 1) torsion_coords.push_back(i);
  }
}

bool ModuleStructure::in_relations(const std::vector<mpz_class>& x) const {
  mpz_class y;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    y = 0;
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (x[j] != 0 && u(i, j) != 0) mpz_addmul(y.get_mpz_t(), u(i, j).get_mpz_t(), x[j].get_mpz_t());
    if (diag[i] == 0) {
      if (y != 0) return false;
    } else if (!mpz_divisible_p(y.get_mpz_t(), diag[i].get_mpz_t())) {
      return false;
    }
  }
  return true;
}

bool ModuleStructure::columns_in_relations(const IntMatrix& x) const {
  for (std::size_t c = 0; c < x.cols(); ++c)
    if (!in_relations(x.column_vector(c))) return false;
  return true;
}

mpz_class ModuleStructure::torsion_order() const {
  mpz_class n = 1;
  for (std::size_t i : torsion_coords) n *= diag[i];
  return n;
}

// ---------------------------------------------------------------------------

GModule::GModule(GroupPtr group, IntMatrix rels, std::vector<IntMatrix> action)
    : group_(std::move(group)), rels_(std::move(rels)), action_(std::move(action)) {
  if (!group_) throw std::invalid_argument("GModule: null group");
  const std::size_t n = rels_.rows();
  const std::size_t order = group_->order();
  if (action_.size() != order) throw std::invalid_argument("GModule: one action matrix per group element expected");
  for (const auto& a : action_)
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("GModule: action matrix has wrong shape");
  structure_ = std::make_shared<const ModuleStructure>(rels_);
  const auto& s = *structure_;
  if (!s.columns_in_relations(action_[0] - IntMatrix::identity(n)))
    throw std::invalid_argument("GModule: identity does not act trivially");
  for (std::size_t g = 0; g < order; ++g)
    if (!s.columns_in_relations(action_[g] * rels_))
      throw std::invalid_argument("GModule: action does not preserve the relations");
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) {
      const auto gh = static_cast<std::size_t>(group_->mul(static_cast<int>(g), static_cast<int>(h)));
      if (!s.columns_in_relations(action_[g] * action_[h] - action_[gh]))
        throw std::invalid_argument("GModule: action is not multiplicative");
    }
}

GModule GModule::from_generator_action(GroupPtr group, IntMatrix rels, const std::map<int, IntMatrix>& given) {
  const std::size_t order = group->order();
  const std::size_t n = rels.rows();
  std::vector<std::optional<IntMatrix>> act(order);
  act[0] = IntMatrix::identity(n);
  for (const auto& [g, m] : given) {
    if (g < 0 || static_cast<std::size_t>(g) >= order) throw std::invalid_argument("GModule: element index out of range");
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("GModule: action matrix has wrong shape");
  }
  std::vector<int> known{0};
  for (std::size_t i = 0; i < known.size(); ++i)
    for (const auto& [s, m] : given) {
      const auto p = static_cast<std::size_t>(group->mul(known[i], s));
      if (act[p]) continue;
      act[p] = *act[static_cast<std::size_t>(known[i])] * m;
      known.push_back(static_cast<int>(p));
    }
  for (const auto& [g, m] : given) act[static_cast<std::size_t>(g)] = m;
  std::vector<IntMatrix> action;
  for (auto& a : act) {
    if (!a) throw std::invalid_argument("GModule: given elements do not generate the group");
    action.push_back(std::move(*a));
  }
  return GModule(std::move(group), std::move(rels), std::move(action));
}

GModule GModule::lattice(GroupPtr group, std::vector<IntMatrix> action) {
  const std::size_t n = action.empty() ? 0 : action.front().rows();
  return GModule(std::move(group), IntMatrix(n, 0), std::move(action));
}

IntMatrix GModule::free_action(int g) const {
  return structure_->free_projection() * action(g) * structure_->free_section();
}

// ---------------------------------------------------------------------------

GMap::GMap(GModule src, GModule tgt, IntMatrix m) : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (!same_group(source.group(), target.group())) throw std::invalid_argument("GMap: modules over different groups");
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    throw std::invalid_argument("GMap: matrix shape does not match the modules");
  const auto& s = target.structure();
  if (!s.columns_in_relations(matrix * source.rels())) throw std::invalid_argument("GMap: not well defined");
  for (std::size_t g = 0; g < source.group()->order(); ++g) {
    const int e = static_cast<int>(g);
    if (!s.columns_in_relations(matrix * source.action(e) - target.action(e) * matrix))
      throw std::invalid_argument("GMap: not G-equivariant");
  }
}

GMap identity_map(const GModule& m) { return GMap(m, m, IntMatrix::identity(m.rank())); }

GMap compose(const GMap& second, const GMap& first) {
  if (first.target.rank() != second.source.rank()) throw std::invalid_argument("compose: modules do not match");
  return GMap(first.source, second.target, second.matrix * first.matrix);
}

GModule permutation_module(const Subgroup& h) {
  const auto& g = *h.parent;
  auto cosets = left_cosets(h);
  const std::size_t n = cosets.cosets.size();
  std::vector<IntMatrix> action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    IntMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      p(cosets.coset_of[static_cast<std::size_t>(g.mul(static_cast<int>(x), cosets.representatives[i]))], i) = 1;
    action.push_back(std::move(p));
  }
  return GModule::lattice(h.parent, std::move(action));
}

GModule trivial_module(const GroupPtr& g) { return permutation_module(whole_group(g)); }

GModule regular_module(const GroupPtr& g) { return permutation_module(trivial_subgroup(g)); }

AugmentationIdeal augmentation_ideal(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<IntMatrix> action;
  for (std::size_t h = 0; h < n; ++h) {
    IntMatrix a(n - 1, n - 1);
    for (std::size_t x = 1; x < n; ++x) {
      // h (x - e) = (hx - e) - (h - e)
      const auto hx = static_cast<std::size_t>(g->mul(static_cast<int>(h), static_cast<int>(x)));
      if (hx != 0) a(hx - 1, x - 1) += 1;
      if (h != 0) a(h - 1, x - 1) -= 1;
    }
    action.push_back(std::move(a));
  }
  GModule delta = GModule::lattice(g, std::move(action));
  IntMatrix incl(n, n - 1);
  for (std::size_t x = 1; x < n; ++x) {
    incl(x, x - 1) = 1;
    incl(0, x - 1) = -1;
  }
  GMap inclusion(delta, regular_module(g), std::move(incl));
  return {std::move(delta), std::move(inclusion)};
}

GMap augmentation_map(const GroupPtr& g) {
  IntMatrix m(1, g->order());
  for (std::size_t x = 0; x < g->order(); ++x) m(0, x) = 1;
  return GMap(regular_module(g), trivial_module(g), std::move(m));
}

GModule sign_module(const Subgroup& kernel, long modulus) {
  const auto& g = kernel.parent;
  const std::size_t index = g->order() / kernel.order();
  if (index > 2 || !is_normal(kernel)) throw std::invalid_argument("sign_module: kernel must have index 1 or 2");
  if (modulus < 0) throw std::invalid_argument("sign_module: negative modulus");
  std::vector<IntMatrix> action;
  for (std::size_t x = 0; x < g->order(); ++x) action.push_back(IntMatrix{{kernel.contains(static_cast<int>(x)) ? 1L : -1L}});
  IntMatrix rels = modulus > 0 ? IntMatrix{{modulus}} : IntMatrix(1, 0);
  return GModule(g, std::move(rels), std::move(action));
}

GModule reduce_mod(const GModule& m, long modulus) {
  if (modulus <= 0) throw std::invalid_argument("reduce_mod: modulus must be positive");
  IntMatrix scaled = mpz_class(modulus) * IntMatrix::identity(m.rank());
  return GModule(m.group(), hstack(m.rels(), scaled), m.actions());
}

GModule direct_sum(const GModule& a, const GModule& b) {
  if (!same_group(a.group(), b.group())) throw std::invalid_argument("direct_sum: modules over different groups");
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < a.group()->order(); ++g)
    action.push_back(block_diagonal({a.action(static_cast<int>(g)), b.action(static_cast<int>(g))}));
  return GModule(a.group(), block_diagonal({a.rels(), b.rels()}), std::move(action));
}

GModule dual_lattice(const GModule& m) {
  if (!m.is_torsion_free()) throw std::invalid_argument("dual_lattice: module has torsion");
  if (m.rels().cols() != 0) return dual_lattice(torsion_and_free(m).free);
  const auto& g = *m.group();
  std::vector<IntMatrix> action;
  for (std::size_t x = 0; x < g.order(); ++x) action.push_back(m.action(g.inverse(static_cast<int>(x))).transpose());
  return GModule::lattice(m.group(), std::move(action));
}

GModule induced_module(const GModule& n, const Subgroup& y) {
  auto sub = as_group(y);
  if (!same_group(n.group(), sub.group)) throw std::invalid_argument("induced_module: module is not over the subgroup");
  const auto& g = *y.parent;
  auto cosets = left_cosets(y);
  const std::size_t k = cosets.cosets.size();
  const std::size_t r = n.rank();
  std::map<int, int> position;
  for (std::size_t i = 0; i < y.elements.size(); ++i) position[y.elements[i]] = static_cast<int>(i);

  std::vector<IntMatrix> action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    IntMatrix a(k * r, k * r);
    for (std::size_t i = 0; i < k; ++i) {
      const int gt = g.mul(static_cast<int>(x), cosets.representatives[i]);
      const std::size_t j = cosets.coset_of[static_cast<std::size_t>(gt)];
      // x t_i = t_j y  with  y = t_j^{-1} x t_i
      const int inner = g.mul(g.inverse(cosets.representatives[j]), gt);
      a.set_block(j * r, i * r, n.action(position.at(inner)));
    }
    action.push_back(std::move(a));
  }
  std::vector<IntMatrix> rels(k, n.rels());
  return GModule(y.parent, block_diagonal(rels), std::move(action));
}

GModule restricted_module(const GModule& m, const GroupPtr& sub, const std::vector<int>& embedding) {
  if (!is_homomorphism(*sub, *m.group(), embedding)) throw std::invalid_argument("restricted_module: not a homomorphism");
  std::vector<IntMatrix> action;
  for (int x : embedding) action.push_back(m.action(x));
  return GModule(sub, m.rels(), std::move(action));
}

GModule inflated_module(const GModule& m, const GroupPtr& z, const std::vector<int>& projection) {
  if (!is_homomorphism(*z, *m.group(), projection)) throw std::invalid_argument("inflated_module: not a homomorphism");
  if (std::set<int>(projection.begin(), projection.end()).size() != m.group()->order())
    throw std::invalid_argument("inflated_module: map is not surjective");
  std::vector<IntMatrix> action;
  for (int x : projection) action.push_back(m.action(x));
  return GModule(z, m.rels(), std::move(action));
}

// ---------------------------------------------------------------------------

FixedSubmodule fixed_submodule(const GModule& m, const Subgroup& h) {
  if (!same_group(m.group(), h.parent)) throw std::invalid_argument("fixed_submodule: subgroup of another group");
  const std::size_t n = m.rank();
  const std::size_t rel_count = m.rels().cols();
  const auto gens = generators_of(h);
  if (gens.empty()) return {m.underlying(), IntMatrix::identity(n)};

  // (rho(h) - I) x = R y_h for every generator h
  IntMatrix big(gens.size() * n, n + gens.size() * rel_count);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    big.set_block(i * n, 0, m.action(gens[i]) - IntMatrix::identity(n));
    big.set_block(i * n, n + i * rel_count, mpz_class(-1) * m.rels());
  }
  IntMatrix basis = column_hnf(kernel_basis(big).rows_range(0, n));
  auto rels = solve_integer(basis, m.rels());
  if (!rels) throw std::logic_error("fixed_submodule: relations escape the fixed lattice");
  return {AbelianGroup(basis.cols(), std::move(*rels)), std::move(basis)};
}

FixedSubmodule hom_fixed(const Subgroup& h, const GModule& m) { return fixed_submodule(m, h); }

TorsionSplit torsion_and_free(const GModule& m) {
  const auto& s = m.structure();
  const auto& g = *m.group();
  IntMatrix tors_rels = IntMatrix::diagonal([&] {
    std::vector<mpz_class> d;
    for (std::size_t i : s.torsion_coords) d.push_back(s.diag[i]);
    return d;
  }());
  std::vector<IntMatrix> tors_action, free_action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    IntMatrix conj = s.u * m.action(static_cast<int>(x)) * s.u_inv;
    IntMatrix t = conj.select_rows(s.torsion_coords).select_columns(s.torsion_coords);
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j) {
        const mpz_class& d = s.diag[s.torsion_coords[i]];
        mpz_fdiv_r(t(i, j).get_mpz_t(), t(i, j).get_mpz_t(), d.get_mpz_t());
      }
    tors_action.push_back(std::move(t));
    free_action.push_back(conj.select_rows(s.free_coords).select_columns(s.free_coords));
  }
  GModule tors(m.group(), std::move(tors_rels), std::move(tors_action));
  GModule free = GModule::lattice(m.group(), std::move(free_action));
  GMap projection(m, free, s.free_projection());
  return {std::move(tors), std::move(free), s.u_inv.select_columns(s.torsion_coords), std::move(projection)};
}

KernelCokernel kernel_and_cokernel(const GMap& f) {
  const auto& src = f.source;
  const auto& g = *src.group();
  IntMatrix basis = preimage_of_relations(f.matrix, f.target.rels());
  auto rels = solve_integer(basis, src.rels());
  if (!rels) throw std::logic_error("kernel_and_cokernel: source relations escape the kernel lattice");
  std::vector<IntMatrix> kaction;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto a = solve_integer(basis, src.action(static_cast<int>(x)) * basis);
    if (!a) throw std::logic_error("kernel_and_cokernel: kernel lattice is not G-stable");
    kaction.push_back(std::move(*a));
  }
  GModule ker(src.group(), std::move(*rels), std::move(kaction));
  GModule coker(f.target.group(), hstack(f.target.rels(), f.matrix), f.target.actions());
  auto korder = ker.underlying().order();
  auto corder = coker.underlying().order();
  return {std::move(ker), std::move(basis), std::move(coker), std::move(korder), std::move(corder)};
}

ExactnessReport check_short_exact(const GMap& f, const GMap& g) {
  if (f.target.rank() != g.source.rank()) throw std::invalid_argument("check_short_exact: maps are not composable");
  ExactnessReport r;
  const auto kf = kernel_and_cokernel(f);
  r.injective = kf.kernel_order && *kf.kernel_order == 1;
  const auto kg = kernel_and_cokernel(g);
  r.surjective = kg.cokernel_order && *kg.cokernel_order == 1;
  r.composite_zero = g.target.structure().columns_in_relations(g.matrix * f.matrix);
  ImageLattice image(hstack(f.matrix, f.target.rels()));
  r.kernel_in_image = image.contains_columns(kg.kernel_inclusion);
  return r;
}

}  // namespace brauer
