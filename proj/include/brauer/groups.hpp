#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace brauer {

using Permutation = std::vector<int>;

/// Finite group given by its Cayley table over element indices 0..order-1; index 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the identity law, unique inverses (Latin square) and associativity.
  FiniteGroup(std::size_t order, std::vector<int> table);

  /// Closure of the given permutations, elements ordered by breadth-first search from the identity.
  static FiniteGroup from_generators(std::size_t degree, const std::vector<Permutation>& perms);

  /// Catalog: C1..C12, V4, S3, D4, Q8, C2xC2xC2, C2xC4, A4.
  static FiniteGroup preset(std::string_view name);
  static std::vector<std::string> preset_names();
  /// Generators used by preset(name), as permutations of {0..degree-1}.
  static std::pair<std::size_t, std::vector<Permutation>> preset_generators(std::string_view name);

  std::size_t order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// g h g^{-1}
  int conjugate(int g, int h) const { return mul(mul(g, h), inverse(g)); }
  int element_order(int g) const;
  bool is_abelian() const;
  bool is_cyclic() const;
  int exponent() const;

  const std::vector<int>& table() const { return table_; }
  /// Permutation images of each element, when the group was built from permutations.
  const std::vector<Permutation>& permutations() const { return perms_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::size_t order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(FiniteGroup g);
GroupPtr preset_group(std::string_view name);

/// Subgroup as a sorted element set of its parent group.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(int g) const;
  bool contains(const Subgroup& other) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements == b.elements && *a.parent == *b.parent;
  }
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
/// Smallest subgroup containing the given elements.
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& gens);
/// g H g^{-1}
Subgroup conjugate_subgroup(const Subgroup& h, int g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& h);
bool is_cyclic(const Subgroup& h);
/// A small generating set, chosen greedily in element order.
std::vector<int> generators_of(const Subgroup& h);

/// Left cosets gH, each given by its sorted element list; ordered by minimal element,
/// so the coset H itself comes first. The representative of a coset is its minimal element.
struct CosetDecomposition {
  std::vector<std::vector<int>> cosets;
  std::vector<int> representatives;
  /// element index -> coset index
  std::vector<std::size_t> coset_of;
};
CosetDecomposition left_cosets(const Subgroup& h);

/// One representative (the minimal element) per double coset H g K, in increasing order.
/// Throws std::invalid_argument if the parents differ.
std::vector<int> double_cosets(const Subgroup& h, const Subgroup& k);
/// The double coset H g K as a sorted element list.
std::vector<int> double_coset(const Subgroup& h, int g, const Subgroup& k);

/// A subgroup viewed as a group in its own right; element i corresponds to parent element embedding[i].
struct SubgroupAsGroup {
  GroupPtr group;
  std::vector<int> embedding;
};
SubgroupAsGroup as_group(const Subgroup& h);

struct Quotient {
  GroupPtr group;
  /// parent element -> quotient element
  std::vector<int> projection;
};
/// G/N with cosets ordered by minimal element. Throws std::invalid_argument if N is not normal.
Quotient quotient(const Subgroup& n);

/// True if map (indexed by source elements) is a homomorphism source -> target.
bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const std::vector<int>& map);

struct SubgroupClass {
  /// Indices into SubgroupLattice::subgroups(); the first is the representative.
  std::vector<std::size_t> members;
  /// conjugators[i] * rep * conjugators[i]^{-1} == members[i]
  std::vector<int> conjugators;
  bool cyclic = false;
  bool normal = false;
};

/// All subgroups of a finite group, sorted by (order, element list), partitioned into conjugacy classes.
/// Class representatives are the lexicographically minimal members; classes are ordered by their representatives.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }

  const Subgroup& representative(std::size_t cls) const { return subgroups_[classes_[cls].members.front()]; }
  std::size_t class_of_subgroup(std::size_t subgroup_index) const { return class_of_[subgroup_index]; }
  /// Index of the subgroup with exactly these (sorted) elements; throws std::out_of_range if absent.
  std::size_t index_of(const std::vector<int>& elements) const;
  std::size_t class_of(const std::vector<int>& elements) const { return class_of_[index_of(elements)]; }
  std::size_t class_of(const Subgroup& h) const { return class_of(h.elements); }

 private:
  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::size_t> class_of_;
  std::map<std::vector<int>, std::size_t> index_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

LatticePtr make_lattice(const GroupPtr& g);

}  // namespace brauer
