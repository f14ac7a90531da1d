#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "brauer/gmodule.hpp"
#include "brauer/io.hpp"
#include "brauer/relations.hpp"

namespace brauer {

/// Floating type for the analytic side: 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

inline constexpr double kDefaultTolerance = 1e-9;

/// Invariants of the fixed field K^H for one subgroup class.
struct FieldClassData {
  std::size_t subgroup_class = 0;
  long h = 1;
  long w = 1;
  Real reg = 1;
  /// Pairing of a basis of the free part of the S-units of K^H, taken inside K.
  std::vector<std::vector<Real>> unit_gram;
};

/// Schema violations, one diagnostic per problem found.
class FixtureError : public DataError {
 public:
  explicit FixtureError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

struct FieldFixture {
  std::string label;
  LatticePtr lattice;
  /// Indexed by subgroup class.
  std::vector<std::optional<FieldClassData>> classes;
  /// Decomposition subgroup class, one per G-orbit of S.
  std::vector<std::size_t> s_orbits;

  const FieldClassData& data(std::size_t cls) const;
};

/// Parses and validates schema 1; throws FixtureError listing every problem.
FieldFixture fixture_from_json(const json& j);
FieldFixture load_fixture(const std::string& path);

/// Π (w^{-2} det(gram / |H|))^{n_H}
Real c_units(const FieldFixture& f, const BrauerRelation& theta);
/// Z[S] = ⊕_orbits Z[G/G_P]
GModule s_permutation_module(const FieldFixture& f);
/// C_Θ(Z[S]), exact.
mpq_class c_zs(const FieldFixture& f, const BrauerRelation& theta);
/// Π |H|^{-n_H}
mpq_class c_z(const BrauerRelation& theta);

struct CheckResult {
  std::string name;
  Real left;
  Real right;
  Real abs_error;
  Real rel_error;
  double tolerance = kDefaultTolerance;
  bool pass = false;
};

/// Π h^{n_H} against Π (w / R)^{n_H}.
CheckResult check_bcnf(const FieldFixture& f, const BrauerRelation& theta, double tol = kDefaultTolerance);
/// C_Θ(E) against C(Z[S])^{-1} C(Z) Π h^{-2 n_H}.
CheckResult check_thm_rccln(const FieldFixture& f, const BrauerRelation& theta, double tol = kDefaultTolerance);
/// C_Θ(E) against Π w^{-2 n_H} C(Z[S])^{-1} C(Z) Π R^{2 n_H}.
CheckResult check_thm_rcreg(const FieldFixture& f, const BrauerRelation& theta, double tol = kDefaultTolerance);

struct VerificationReport {
  std::string label;
  std::vector<std::int64_t> relation;
  mpq_class c_z;
  mpq_class c_zs;
  Real c_units;
  std::vector<CheckResult> checks;  // bcnf, rccln, rcreg
  /// |B² · rcreg / rccln - 1| with each ratio taken as left / right; must vanish to tolerance².
  Real consistency_residual;
  bool consistent = false;
  /// 2 h_K / (h_{Q(√d)} h_{Q(√-d)}) for biquadratic fixtures containing Q(i).
  std::optional<Real> implied_q_k;

  bool all_pass() const;
};

VerificationReport verify(const FieldFixture& f, const BrauerRelation& theta, double tol = kDefaultTolerance);

json to_json(const VerificationReport& r);
std::string to_decimal(const Real& x, int digits = 20);

}  // namespace brauer
