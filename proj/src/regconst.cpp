#include "brauer/regconst.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace brauer {

namespace {

void require_same_group(const BrauerRelation& theta, const GModule& m, const char* where) {
  if (!same_group(theta.group(), m.group())) throw std::invalid_argument(std::string(where) + ": relation and module over different groups");
}

RationalMatrix gram_on(const RationalMatrix& gram, const IntMatrix& basis) {
  RationalMatrix b(basis);
  return b.transpose() * gram * b;
}

struct FixedData {
  IntMatrix basis;    // preimage lattice of M^H in Z^n, columns
  IntMatrix rels;     // relations of M^H in basis coordinates
  mpz_class torsion;  // |tors(M^H)|
};

FixedData fixed_data(const GModule& m, const Subgroup& h) {
  auto fs = fixed_submodule(m, h);
  mpz_class t = fs.presentation.torsion_order();
  return {std::move(fs.inclusion), std::move(fs.presentation.rels), std::move(t)};
}

mpq_class class_factor(const GModule& m, const RationalMatrix& gram, const Subgroup& h, mpz_class* torsion,
                       mpq_class* det) {
  FixedData fd = fixed_data(m, h);
  IntMatrix image = column_hnf(m.structure().free_projection() * fd.basis);
  mpq_class d = rational_det(mpq_class(1, static_cast<unsigned long>(h.order())) * gram_on(gram, image));
  if (d == 0) throw std::invalid_argument("regulator_constant: pairing degenerate on a fixed sublattice");
  if (torsion) *torsion = fd.torsion;
  if (det) *det = d;
  return d / (mpq_class(fd.torsion) * fd.torsion);
}

}  // namespace

void PairingGram::validate() const {
  const std::size_t f = module.free_rank();
  if (gram.rows() != f || gram.cols() != f) throw std::invalid_argument("PairingGram: size differs from the free rank");
  if (!gram.is_symmetric()) throw std::invalid_argument("PairingGram: not symmetric");
  for (std::size_t g = 0; g < module.group()->order(); ++g) {
    RationalMatrix r(module.free_action(static_cast<int>(g)));
    if (!(r.transpose() * gram * r == gram)) throw std::invalid_argument("PairingGram: not G-invariant");
  }
  if (rational_det(gram) == 0) throw std::invalid_argument("PairingGram: degenerate pairing");
}

PairingGram averaged_pairing(const GModule& m, const RationalMatrix& seed) {
  const std::size_t f = m.free_rank();
  if (seed.rows() != f || seed.cols() != f) throw std::invalid_argument("averaged_pairing: seed size differs from the free rank");
  RationalMatrix gram(f, f);
  for (std::size_t g = 0; g < m.group()->order(); ++g) {
    RationalMatrix r(m.free_action(static_cast<int>(g)));
    gram = gram + r.transpose() * seed * r;
  }
  PairingGram p{m, std::move(gram)};
  p.validate();
  return p;
}

PairingGram invariant_pairing(const GModule& m) { return averaged_pairing(m, RationalMatrix::identity(m.free_rank())); }

RegulatorConstant regulator_constant_detailed(const BrauerRelation& theta, const GModule& m,
                                              const std::optional<PairingGram>& pairing) {
  require_same_group(theta, m, "regulator_constant");
  PairingGram p = pairing ? *pairing : invariant_pairing(m);
  if (pairing) p.validate();
  const auto& lat = *theta.lattice();
  RegulatorConstant out{1, {}};
  for (std::size_t cls : theta.support()) {
    RegulatorFactor rf;
    rf.subgroup_class = cls;
    rf.coefficient = theta.coefficient(cls);
    const auto& members = lat.classes()[cls].members;
    rf.factor = class_factor(m, p.gram, lat.subgroups()[members.front()], &rf.torsion, &rf.determinant);
    for (std::size_t i = 1; i < members.size(); ++i)
      if (class_factor(m, p.gram, lat.subgroups()[members[i]], nullptr, nullptr) != rf.factor)
        throw std::logic_error("regulator_constant: conjugate subgroups give different factors");
    out.value *= rational_power(rf.factor, rf.coefficient);
    out.factors.push_back(std::move(rf));
  }
  return out;
}

mpq_class regulator_constant(const BrauerRelation& theta, const GModule& m, const std::optional<PairingGram>& pairing) {
  return regulator_constant_detailed(theta, m, pairing).value;
}

// ---------------------------------------------------------------------------

PhiDatum build_phi(const BrauerRelation& theta, std::uint64_t seed, std::size_t max_attempts) {
  if (theta.is_zero()) throw std::invalid_argument("build_phi: zero relation");
  const auto& lat = *theta.lattice();
  std::vector<std::size_t> c1, c2;
  for (std::size_t cls : theta.support()) {
    auto n = theta.coefficient(cls);
    auto& side = n > 0 ? c1 : c2;
    for (std::int64_t k = 0; k < (n > 0 ? n : -n); ++k) side.push_back(cls);
  }
  auto modules = [&](const std::vector<std::size_t>& cls) {
    std::vector<GModule> parts;
    for (std::size_t c : cls) parts.push_back(permutation_module(lat.representative(c)));
    return parts;
  };
  auto sum = [&](const std::vector<GModule>& parts) {
    GModule acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
    return acc;
  };
  auto parts1 = modules(c1), parts2 = modules(c2);
  GModule p1 = sum(parts1), p2 = sum(parts2);
  if (p1.rank() != p2.rank()) throw std::invalid_argument("build_phi: not a Brauer relation (ranks differ)");

  // Hom_G(Z[G/H], Z[G/K]) basis: eH -> Σ_{xK ⊆ HgK} xK, one map per double coset.
  struct BasisMap {
    std::size_t i, j;
    IntMatrix column;  // image of the coset H in Z[G/K]
  };
  std::vector<BasisMap> basis;
  for (std::size_t i = 0; i < c1.size(); ++i)
    for (std::size_t j = 0; j < c2.size(); ++j) {
      const Subgroup& h = lat.representative(c1[i]);
      const Subgroup& k = lat.representative(c2[j]);
      auto kc = left_cosets(k);
      for (int rep : double_cosets(h, k)) {
        IntMatrix col(kc.cosets.size(), 1);
        for (int x : double_coset(h, rep, k)) col(kc.coset_of[static_cast<std::size_t>(x)], 0) = 1;
        basis.push_back({i, j, std::move(col)});
      }
    }

  std::vector<std::size_t> off1{0}, off2{0};
  for (const auto& p : parts1) off1.push_back(off1.back() + p.rank());
  for (const auto& p : parts2) off2.push_back(off2.back() + p.rank());

  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    IntMatrix gen(p2.rank(), c1.size());  // images of the generators eH_i
    for (const auto& b : basis) {
      long coeff = static_cast<long>(rng() % 5) - 2;
      if (coeff == 0) continue;
      for (std::size_t r = 0; r < b.column.rows(); ++r)
        if (b.column(r, 0) != 0) gen(off2[b.j] + r, b.i) += coeff * b.column(r, 0);
    }
    IntMatrix phi(p2.rank(), p1.rank());
    for (std::size_t i = 0; i < c1.size(); ++i) {
      auto hc = left_cosets(lat.representative(c1[i]));
      IntMatrix v = gen.columns(i, i + 1);
      for (std::size_t c = 0; c < hc.cosets.size(); ++c)
        phi.set_block(0, off1[i] + c, p2.action(hc.representatives[c]) * v);
    }
    if (determinant(phi) == 0) continue;
    GMap f(p1, p2, phi);
    GMap ft(p2, p1, phi.transpose());
    return {std::move(p1), std::move(p2), std::move(c1), std::move(c2), std::move(f), std::move(ft), seed, attempt};
  }
  throw std::runtime_error("build_phi: no injective map found after " + std::to_string(max_attempts) +
                           " attempts with seed " + std::to_string(seed));
}

namespace {

struct HomSpace {
  AbelianGroup group;
  std::vector<std::size_t> offsets;  // block offsets in group coordinates
  std::vector<FixedData> blocks;
};

HomSpace hom_space(const GModule& m, const SubgroupLattice& lat, const std::vector<std::size_t>& classes) {
  HomSpace hs;
  std::vector<IntMatrix> rels;
  hs.offsets.push_back(0);
  for (std::size_t c : classes) {
    hs.blocks.push_back(fixed_data(m, lat.representative(c)));
    rels.push_back(hs.blocks.back().rels);
    hs.offsets.push_back(hs.offsets.back() + hs.blocks.back().basis.cols());
  }
  hs.group = AbelianGroup(hs.offsets.back(), block_diagonal(rels));
  return hs;
}

// (f, M): Hom(target P, M) -> Hom(source P, M), ψ -> ψ∘f, where f_mat maps source P into target P.
AbelianHom pull_back(const GModule& m, const SubgroupLattice& lat, const IntMatrix& f_mat,
                     const std::vector<std::size_t>& src_classes, const HomSpace& src, const std::vector<std::size_t>& tgt_classes,
                     const HomSpace& tgt) {
  IntMatrix out(src.group.gens, tgt.group.gens);
  std::vector<std::size_t> tgt_perm_off{0};
  std::vector<CosetDecomposition> tgt_cosets;
  for (std::size_t c : tgt_classes) {
    tgt_cosets.push_back(left_cosets(lat.representative(c)));
    tgt_perm_off.push_back(tgt_perm_off.back() + tgt_cosets.back().cosets.size());
  }
  std::size_t src_perm = 0;
  for (std::size_t i = 0; i < src_classes.size(); ++i) {
    const std::size_t col = src_perm;  // column of the generator coset H_i
    for (std::size_t j = 0; j < tgt_classes.size(); ++j) {
      IntMatrix a(m.rank(), m.rank());
      for (std::size_t c = 0; c < tgt_cosets[j].cosets.size(); ++c) {
        const mpz_class& k = f_mat(tgt_perm_off[j] + c, col);
        if (k != 0) a.add_block(0, 0, k * m.action(tgt_cosets[j].representatives[c]));
      }
      auto block = solve_integer(src.blocks[i].basis, a * tgt.blocks[j].basis);
      if (!block) throw std::logic_error("regulator_constant_homological: image not H-fixed");
      out.set_block(src.offsets[i], tgt.offsets[j], *block);
    }
    src_perm += left_cosets(lat.representative(src_classes[i])).cosets.size();
  }
  AbelianHom map{tgt.group, src.group, std::move(out)};
  map.validate();
  return map;
}

mpz_class finite_order(const AbelianGroup& a, const char* what) {
  auto o = a.order();
  if (!o) throw std::runtime_error(std::string("regulator_constant_homological: infinite ") + what);
  return *o;
}

}  // namespace

HomologicalConstant regulator_constant_homological_detailed(const BrauerRelation& theta, const GModule& m,
                                                            const std::optional<PhiDatum>& phi) {
  require_same_group(theta, m, "regulator_constant_homological");
  if (theta.is_zero()) return {1, 1, 1, 1, 1};
  PhiDatum datum = phi ? *phi : build_phi(theta);
  const auto& lat = *theta.lattice();
  HomSpace h1 = hom_space(m, lat, datum.p1_classes);
  HomSpace h2 = hom_space(m, lat, datum.p2_classes);
  AbelianHom phi_m = pull_back(m, lat, datum.phi.matrix, datum.p1_classes, h1, datum.p2_classes, h2);
  AbelianHom tr_m = pull_back(m, lat, datum.phi_tr.matrix, datum.p2_classes, h2, datum.p1_classes, h1);
  HomologicalConstant out;
  out.ker_phi = finite_order(kernel(phi_m).group, "kernel of (phi, M)");
  out.coker_phi = finite_order(cokernel(phi_m), "cokernel of (phi, M)");
  out.ker_phi_tr = finite_order(kernel(tr_m).group, "kernel of (phi^Tr, M)");
  out.coker_phi_tr = finite_order(cokernel(tr_m), "cokernel of (phi^Tr, M)");
  out.value = (mpq_class(out.coker_phi_tr) / out.ker_phi_tr) / (mpq_class(out.coker_phi) / out.ker_phi);
  return out;
}

mpq_class regulator_constant_homological(const BrauerRelation& theta, const GModule& m, const std::optional<PhiDatum>& phi) {
  return regulator_constant_homological_detailed(theta, m, phi).value;
}

// ---------------------------------------------------------------------------

MultiplicativityReport check_multiplicativity(const BrauerRelation& theta, const GMap& f, const GMap& g,
                                              const CohomologyConfig& config) {
  if (!check_short_exact(f, g).exact()) throw std::invalid_argument("check_multiplicativity: sequence is not short exact");
  MultiplicativityReport r;
  r.c_middle = regulator_constant(theta, f.target);
  r.c_sub = regulator_constant(theta, f.source);
  r.c_quotient = regulator_constant(theta, g.target);
  r.psi = kani_defect(theta, f, config);
  r.holds = r.c_middle == r.c_sub * r.c_quotient * r.psi * r.psi;
  return r;
}

TrivialityReport check_cohomologically_trivial(const BrauerRelation& theta, const GModule& m, const CohomologyConfig& config) {
  require_same_group(theta, m, "check_cohomologically_trivial");
  for (const auto& h : theta.lattice()->subgroups())
    for (std::size_t i = 1; i <= 2; ++i)
      if (cohomology_order(h, m, i, config) != 1)
        throw std::invalid_argument("check_cohomologically_trivial: module has nonvanishing H^" + std::to_string(i));
  TrivialityReport r;
  r.value = regulator_constant(theta, m);
  r.holds = r.value == 1;
  return r;
}

FunctorialityReport check_induction(const BrauerRelation& theta, const LatticePtr& x, const std::vector<int>& embedding,
                                    const GModule& n) {
  if (!same_group(x->group(), n.group())) throw std::invalid_argument("check_induction: module is not over the larger group");
  BrauerRelation ind = induce(theta, x, embedding);
  GModule res = restricted_module(n, theta.group(), embedding);
  return {regulator_constant(ind, n), regulator_constant(theta, res)};
}

FunctorialityReport check_restriction(const BrauerRelation& theta, const Subgroup& y, const GModule& n) {
  RestrictedRelation res = restrict_to(theta, y);
  if (!same_group(res.subgroup.group, n.group())) throw std::invalid_argument("check_restriction: module is not over the subgroup");
  GModule ind = induced_module(n, y);
  return {regulator_constant(res.relation, n), regulator_constant(theta, ind)};
}

FunctorialityReport check_inflation(const BrauerRelation& theta, const LatticePtr& z, const std::vector<int>& projection,
                                    const GModule& m) {
  BrauerRelation inf = inflate(theta, z, projection);
  GModule big = inflated_module(m, z->group(), projection);
  return {regulator_constant(inf, big), regulator_constant(theta, m)};
}

}  // namespace brauer
