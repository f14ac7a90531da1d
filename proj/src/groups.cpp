#include "brauer/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace brauer {

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation p(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) p[x] = a[static_cast<std::size_t>(b[x])];
  return p;
}

bool is_bijection(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) return false;
  std::vector<bool> seen(degree, false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

Permutation cycle_perm(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  return p;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0) throw std::invalid_argument("FiniteGroup: order must be positive");
  if (table_.size() != order_ * order_) throw std::invalid_argument("FiniteGroup: table has wrong size");
  for (int x : table_)
    if (x < 0 || static_cast<std::size_t>(x) >= order_) throw std::invalid_argument("FiniteGroup: entry out of range");
  for (std::size_t a = 0; a < order_; ++a) {
    if (mul(0, static_cast<int>(a)) != static_cast<int>(a) || mul(static_cast<int>(a), 0) != static_cast<int>(a))
      throw std::invalid_argument("FiniteGroup: element 0 is not the identity");
  }
  // Latin square: every row and column is a permutation, hence inverses are unique.
  for (std::size_t a = 0; a < order_; ++a) {
    std::vector<bool> row(order_, false), col(order_, false);
    for (std::size_t b = 0; b < order_; ++b) {
      row[static_cast<std::size_t>(table_[a * order_ + b])] = true;
      col[static_cast<std::size_t>(table_[b * order_ + a])] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() || std::find(col.begin(), col.end(), false) != col.end())
      throw std::invalid_argument("FiniteGroup: table is not a Latin square");
  }
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      for (std::size_t c = 0; c < order_; ++c) {
        const int ia = static_cast<int>(a), ib = static_cast<int>(b), ic = static_cast<int>(c);
        if (mul(mul(ia, ib), ic) != mul(ia, mul(ib, ic))) throw std::invalid_argument("FiniteGroup: not associative");
      }
  inverse_.assign(order_, -1);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mul(static_cast<int>(a), static_cast<int>(b)) == 0) inverse_[a] = static_cast<int>(b);
}

FiniteGroup FiniteGroup::from_generators(std::size_t degree, const std::vector<Permutation>& perms) {
  if (degree == 0) throw std::invalid_argument("from_generators: degree must be positive");
  for (const auto& p : perms)
    if (!is_bijection(p, degree)) throw std::invalid_argument("from_generators: generator is not a bijection");

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : perms) {
      Permutation p = compose(elements[i], s);
      if (index.emplace(p, static_cast<int>(elements.size())).second) elements.push_back(std::move(p));
    }
  }
  const std::size_t n = elements.size();
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  FiniteGroup g(n, std::move(table));
  g.perms_ = std::move(elements);
  return g;
}

std::pair<std::size_t, std::vector<Permutation>> FiniteGroup::preset_generators(std::string_view name) {
  if (name.size() >= 2 && name[0] == 'C' && name.find('x') == std::string_view::npos) {
    int n = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("unknown group preset: " + std::string(name));
      n = n * 10 + (ch - '0');
    }
    if (n < 1 || n > 12) throw std::invalid_argument("unknown group preset: " + std::string(name));
    const auto deg = static_cast<std::size_t>(n);
    std::vector<int> cyc(deg);
    std::iota(cyc.begin(), cyc.end(), 0);
    return {deg, {cycle_perm(deg, {cyc})}};
  }
  if (name == "V4") return {4, {cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {{0, 2}, {1, 3}})}};
  if (name == "S3") return {3, {cycle_perm(3, {{0, 1}}), cycle_perm(3, {{0, 1, 2}})}};
  if (name == "D4") return {4, {cycle_perm(4, {{0, 1, 2, 3}}), cycle_perm(4, {{1, 3}})}};
  if (name == "Q8") {
    // Left multiplication on {1,-1,i,-i,j,-j,k,-k} by i and by j.
    return {8, {Permutation{2, 3, 1, 0, 6, 7, 5, 4}, Permutation{4, 5, 7, 6, 1, 0, 2, 3}}};
  }
  if (name == "C2xC2xC2")
    return {6, {cycle_perm(6, {{0, 1}}), cycle_perm(6, {{2, 3}}), cycle_perm(6, {{4, 5}})}};
  if (name == "C2xC4") return {6, {cycle_perm(6, {{0, 1}}), cycle_perm(6, {{2, 3, 4, 5}})}};
  if (name == "A4") return {4, {cycle_perm(4, {{0, 1, 2}}), cycle_perm(4, {{0, 1}, {2, 3}})}};
  throw std::invalid_argument("unknown group preset: " + std::string(name));
}

FiniteGroup FiniteGroup::preset(std::string_view name) {
  auto [degree, gens] = preset_generators(name);
  return from_generators(degree, gens);
}

std::vector<std::string> FiniteGroup::preset_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
  for (const char* s : {"V4", "S3", "D4", "Q8", "C2xC2xC2", "C2xC4", "A4"}) names.emplace_back(s);
  return names;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul(static_cast<int>(a), static_cast<int>(b)) != mul(static_cast<int>(b), static_cast<int>(a))) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (std::size_t g = 0; g < order_; ++g)
    if (static_cast<std::size_t>(element_order(static_cast<int>(g))) == order_) return true;
  return false;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (std::size_t g = 0; g < order_; ++g) e = std::lcm(e, element_order(static_cast<int>(g)));
  return e;
}

GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

GroupPtr preset_group(std::string_view name) { return make_group(FiniteGroup::preset(name)); }

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(elements.begin(), elements.end(), other.elements.begin(), other.elements.end());
}

Subgroup trivial_subgroup(const GroupPtr& g) { return {g, {0}}; }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return {g, std::move(all)};
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& gens) {
  std::vector<bool> in(g->order(), false);
  std::vector<int> elems{0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      const int p = g->mul(elems[i], s);
      if (!in[static_cast<std::size_t>(p)]) {
        in[static_cast<std::size_t>(p)] = true;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return {g, std::move(elems)};
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  std::vector<int> elems;
  elems.reserve(h.elements.size());
  for (int x : h.elements) elems.push_back(h.parent->conjugate(g, x));
  std::sort(elems.begin(), elems.end());
  return {h.parent, std::move(elems)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!same_group(a.parent, b.parent)) throw std::invalid_argument("intersect: parent mismatch");
  std::vector<int> out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out));
  return {a.parent, std::move(out)};
}

bool is_normal(const Subgroup& h) {
  for (std::size_t g = 0; g < h.parent->order(); ++g)
    for (int x : h.elements)
      if (!h.contains(h.parent->conjugate(static_cast<int>(g), x))) return false;
  return true;
}

bool is_cyclic(const Subgroup& h) {
  for (int x : h.elements)
    if (static_cast<std::size_t>(h.parent->element_order(x)) == h.order()) return true;
  return false;
}

std::vector<int> generators_of(const Subgroup& h) {
  std::vector<int> gens;
  Subgroup current = trivial_subgroup(h.parent);
  for (int x : h.elements) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = generated_subgroup(h.parent, gens);
    if (current.order() == h.order()) break;
  }
  return gens;
}

CosetDecomposition left_cosets(const Subgroup& h) {
  const auto& g = *h.parent;
  CosetDecomposition d;
  d.coset_of.assign(g.order(), static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (d.coset_of[x] != static_cast<std::size_t>(-1)) continue;
    std::vector<int> coset;
    for (int y : h.elements) coset.push_back(g.mul(static_cast<int>(x), y));
    std::sort(coset.begin(), coset.end());
    for (int y : coset) d.coset_of[static_cast<std::size_t>(y)] = d.cosets.size();
    d.cosets.push_back(std::move(coset));
    d.representatives.push_back(static_cast<int>(x));
  }
  return d;
}

std::vector<int> double_coset(const Subgroup& h, int g, const Subgroup& k) {
  std::set<int> s;
  for (int a : h.elements)
    for (int b : k.elements) s.insert(h.parent->mul(h.parent->mul(a, g), b));
  return {s.begin(), s.end()};
}

std::vector<int> double_cosets(const Subgroup& h, const Subgroup& k) {
  if (!same_group(h.parent, k.parent)) throw std::invalid_argument("double_cosets: parent mismatch");
  std::vector<bool> covered(h.parent->order(), false);
  std::vector<int> reps;
  for (std::size_t x = 0; x < covered.size(); ++x) {
    if (covered[x]) continue;
    reps.push_back(static_cast<int>(x));
    for (int y : double_coset(h, static_cast<int>(x), k)) covered[static_cast<std::size_t>(y)] = true;
  }
  return reps;
}

SubgroupAsGroup as_group(const Subgroup& h) {
  const std::size_t n = h.order();
  std::map<int, int> pos;
  for (std::size_t i = 0; i < n; ++i) pos[h.elements[i]] = static_cast<int>(i);
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = pos.at(h.parent->mul(h.elements[a], h.elements[b]));
  return {make_group(FiniteGroup(n, std::move(table))), h.elements};
}

Quotient quotient(const Subgroup& n) {
  if (!is_normal(n)) throw std::invalid_argument("quotient: subgroup is not normal");
  auto cosets = left_cosets(n);
  const std::size_t q = cosets.cosets.size();
  std::vector<int> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = static_cast<int>(
          cosets.coset_of[static_cast<std::size_t>(n.parent->mul(cosets.representatives[a], cosets.representatives[b]))]);
  std::vector<int> proj(cosets.coset_of.begin(), cosets.coset_of.end());
  return {make_group(FiniteGroup(q, std::move(table))), std::move(proj)};
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const std::vector<int>& map) {
  if (map.size() != source.order()) return false;
  for (int x : map)
    if (x < 0 || static_cast<std::size_t>(x) >= target.order()) return false;
  for (std::size_t a = 0; a < source.order(); ++a)
    for (std::size_t b = 0; b < source.order(); ++b) {
      const int ab = source.mul(static_cast<int>(a), static_cast<int>(b));
      if (map[static_cast<std::size_t>(ab)] != target.mul(map[a], map[b])) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

SubgroupLattice::SubgroupLattice(GroupPtr g) : group_(std::move(g)) {
  const std::size_t n = group_->order();
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> cyclic;
  for (std::size_t x = 0; x < n; ++x) {
    Subgroup c = generated_subgroup(group_, {static_cast<int>(x)});
    if (seen.insert(c.elements).second) cyclic.push_back(std::move(c));
  }
  // Close under joins with cyclic subgroups; every subgroup is such an iterated join.
  std::vector<Subgroup> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cyclic) {
      if (all[i].contains(c)) continue;
      auto gens = generators_of(all[i]);
      gens.push_back(generators_of(c).front());
      Subgroup j = generated_subgroup(group_, gens);
      if (seen.insert(j.elements).second) all.push_back(std::move(j));
    }
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  subgroups_ = std::move(all);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (n % subgroups_[i].order() != 0) throw std::logic_error("SubgroupLattice: Lagrange violated");
    index_[subgroups_[i].elements] = i;
  }

  class_of_.assign(subgroups_.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (class_of_[i] != static_cast<std::size_t>(-1)) continue;
    SubgroupClass cls;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t j = index_.at(conjugate_subgroup(subgroups_[i], static_cast<int>(x)).elements);
      if (class_of_[j] != static_cast<std::size_t>(-1)) continue;
      class_of_[j] = classes_.size();
      cls.members.push_back(j);
      cls.conjugators.push_back(static_cast<int>(x));
    }
    cls.cyclic = is_cyclic(subgroups_[i]);
    cls.normal = cls.members.size() == 1;
    classes_.push_back(std::move(cls));
  }
}

std::size_t SubgroupLattice::index_of(const std::vector<int>& elements) const {
  auto it = index_.find(elements);
  if (it == index_.end()) throw std::out_of_range("SubgroupLattice: not a subgroup");
  return it->second;
}

LatticePtr make_lattice(const GroupPtr& g) { return std::make_shared<const SubgroupLattice>(g); }

}  // namespace brauer
