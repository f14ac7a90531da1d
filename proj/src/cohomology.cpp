#include "brauer/cohomology.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace brauer {

namespace {

// h · v for v in the Z-basis of Z[H]^k
IntMatrix left_translate(const FiniteGroup& g, int h, const IntMatrix& v) {
  const std::size_t n = g.order();
  IntMatrix out(v.rows(), 1);
  for (std::size_t j = 0; j < v.rows() / n; ++j)
    for (std::size_t x = 0; x < n; ++x)
      out(j * n + static_cast<std::size_t>(g.mul(h, static_cast<int>(x))), 0) = v(j * n + x, 0);
  return out;
}

IntMatrix orbit_columns(const FiniteGroup& g, const IntMatrix& gens) {
  const std::size_t n = g.order();
  IntMatrix out(gens.rows(), gens.cols() * n);
  for (std::size_t l = 0; l < gens.cols(); ++l) {
    IntMatrix v = gens.columns(l, l + 1);
    for (std::size_t x = 0; x < n; ++x) out.set_block(0, l * n + x, left_translate(g, static_cast<int>(x), v));
  }
  return out;
}

std::size_t nonzeros(const IntMatrix& a, std::size_t c) {
  std::size_t k = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a(r, c) != 0) ++k;
  return k;
}

IntMatrix augmentation_row(std::size_t n) {
  IntMatrix a(1, n);
  for (std::size_t i = 0; i < n; ++i) a(0, i) = 1;
  return a;
}

struct CacheKey {
  std::vector<int> table;
  bool operator<(const CacheKey& o) const { return table < o.table; }
};

std::mutex cache_mutex;
std::map<CacheKey, std::shared_ptr<const FreeResolution>> cache;

}  // namespace

FreeResolution::FreeResolution(GroupPtr h, std::size_t length) : group_(std::move(h)) {
  const FiniteGroup& g = *group_;
  const std::size_t n = g.order();
  IntMatrix previous = augmentation_row(n);
  for (std::size_t i = 1; i <= length; ++i) {
    IntMatrix target = kernel_basis(previous);
    IntMatrix chosen(previous.cols(), 0);
    IntMatrix span(previous.cols(), 0);
    if (target.cols() > 0) {
      std::vector<std::size_t> order(target.cols());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return nonzeros(target, a) < nonzeros(target, b); });
      for (std::size_t c : order) {
        IntMatrix v = target.columns(c, c + 1);
        if (span.cols() > 0 && solve_integer(span, v)) continue;
        chosen = hstack(chosen, v);
        span = column_hnf(hstack(span, orbit_columns(g, v)));
        if (span == target) break;
      }
      if (!(span == target)) throw std::logic_error("FreeResolution: orbit span misses the kernel");
    }
    generators_.push_back(chosen);
    previous = orbit_columns(g, chosen);
  }
}

IntMatrix FreeResolution::boundary_matrix(std::size_t i) const {
  if (i == 0) return augmentation_row(group_->order());
  return orbit_columns(*group_, boundary_generators(i));
}

std::shared_ptr<const FreeResolution> resolution_for(const GroupPtr& h, std::size_t length, bool use_cache) {
  if (!use_cache) return std::make_shared<const FreeResolution>(h, length);
  CacheKey key{h->table()};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->length() >= length) return it->second;
  }
  auto res = std::make_shared<const FreeResolution>(h, length);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = cache[key];
  if (!slot || slot->length() < res->length()) slot = res;
  return slot;
}

void clear_resolution_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.clear();
}

bool CochainComplex::is_complex() const {
  for (std::size_t i = 0; i + 1 < differentials.size(); ++i) {
    IntMatrix dd = differentials[i + 1] * differentials[i];
    if (!ImageLattice(rels[i + 2]).contains_columns(dd)) return false;
  }
  return true;
}

CochainComplex cochain_complex(const Subgroup& h, const GModule& m, std::size_t degrees,
                               const CohomologyConfig& config) {
  if (!same_group(h.parent, m.group())) throw std::invalid_argument("cochain_complex: subgroup of another group");
  SubgroupAsGroup sub = as_group(h);
  auto res = resolution_for(sub.group, degrees + 1, config.use_cache);
  const std::size_t n = h.order();
  const std::size_t r = m.rank();

  CochainComplex cx{h, m, degrees, {}, {}};
  for (std::size_t i = 0; i <= degrees + 1; ++i)
    cx.rels.push_back(block_diagonal(std::vector<IntMatrix>(res->rank(i), m.rels())));
  for (std::size_t i = 0; i <= degrees; ++i) {
    const IntMatrix& gens = res->boundary_generators(i + 1);
    const std::size_t ki = res->rank(i), kn = res->rank(i + 1);
    IntMatrix d(r * kn, r * ki);
    for (std::size_t l = 0; l < kn; ++l)
      for (std::size_t j = 0; j < ki; ++j)
        for (std::size_t x = 0; x < n; ++x) {
          const mpz_class& c = gens(j * n + x, l);
          if (c == 0) continue;
          d.add_block(l * r, j * r, c * m.action(sub.embedding[x]));
        }
    cx.differentials.push_back(std::move(d));
  }
  return cx;
}

CohomologyGroup cohomology_group(const CochainComplex& complex, std::size_t degree) {
  if (degree > complex.degrees) throw std::out_of_range("cohomology_group: degree beyond complex");
  IntMatrix z = preimage_of_relations(complex.differentials[degree], complex.rels[degree + 1]);
  IntMatrix b = complex.rels[degree];
  if (degree > 0) b = hstack(complex.differentials[degree - 1], b);
  IntMatrix coords(z.cols(), 0);
  if (b.cols() > 0) {
    auto sol = solve_integer(z, b);
    if (!sol) throw std::logic_error("cohomology_group: coboundaries outside the cocycles");
    coords = *sol;
  }
  return {degree, AbelianGroup(z.cols(), coords), z};
}

std::vector<mpz_class> cohomology(const Subgroup& h, const GModule& m, std::size_t degree,
                                  const CohomologyConfig& config) {
  if (degree > config.max_degree) throw std::out_of_range("cohomology: degree above configured maximum");
  if (degree == 0) return fixed_submodule(m, h).presentation.invariants();
  CohomologyGroup grp = cohomology_group(cochain_complex(h, m, degree, config), degree);
  auto inv = grp.group.invariants();
  for (const auto& d : inv)
    if (d == 0 || mpz_class(static_cast<unsigned long>(h.order())) % d != 0)
      throw std::logic_error("cohomology: invariant factor not dividing |H|");
  return inv;
}

mpz_class cohomology_order(const Subgroup& h, const GModule& m, std::size_t degree, const CohomologyConfig& config) {
  if (degree == 0) throw std::invalid_argument("cohomology_order: degree must be positive");
  mpz_class o = 1;
  for (const auto& d : cohomology(h, m, degree, config)) o *= d;
  return o;
}

AbelianHom induced_map(const GMap& f, const Subgroup& h, std::size_t degree, const CohomologyConfig& config) {
  if (degree > config.max_degree) throw std::out_of_range("induced_map: degree above configured maximum");
  CochainComplex cs = cochain_complex(h, f.source, degree, config);
  CochainComplex ct = cochain_complex(h, f.target, degree, config);
  CohomologyGroup hs = cohomology_group(cs, degree);
  CohomologyGroup ht = cohomology_group(ct, degree);
  const std::size_t k = resolution_for(as_group(h).group, degree + 1, config.use_cache)->rank(degree);
  IntMatrix big = block_diagonal(std::vector<IntMatrix>(k, f.matrix));
  IntMatrix images = big * hs.cocycles;
  IntMatrix coords(ht.cocycles.cols(), images.cols());
  if (images.cols() > 0) {
    if (ht.cocycles.cols() == 0) {
      if (!images.is_zero()) throw std::logic_error("induced_map: image outside the cocycles");
    } else {
      auto sol = solve_integer(ht.cocycles, images);
      if (!sol) throw std::logic_error("induced_map: image outside the cocycles");
      coords = *sol;
    }
  }
  AbelianHom map{hs.group, ht.group, coords};
  map.validate();
  return map;
}

mpz_class h1_kernel_order(const GMap& f, const Subgroup& h, const CohomologyConfig& config) {
  auto order = kernel(induced_map(f, h, 1, config)).group.order();
  if (!order) throw std::logic_error("h1_kernel_order: infinite kernel");
  return *order;
}

mpq_class kani_defect(const BrauerRelation& theta, const GMap& f, const CohomologyConfig& config) {
  const auto& lat = *theta.lattice();
  mpq_class result = 1;
  for (std::size_t cls : theta.support()) {
    std::optional<mpz_class> value;
    for (std::size_t idx : lat.classes()[cls].members) {
      mpz_class k = h1_kernel_order(f, lat.subgroups()[idx], config);
      if (value && *value != k) throw std::logic_error("kani_defect: conjugate subgroups disagree");
      value = k;
    }
    result *= rational_power(mpq_class(*value), theta.coefficient(cls));
  }
  return result;
}

}  // namespace brauer
