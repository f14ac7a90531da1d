#include "brauer/verify.hpp"

#include <iomanip>
#include <regex>
#include <set>
#include <sstream>

#include "brauer/regconst.hpp"

namespace brauer {

namespace {

using Grid = std::vector<std::vector<Real>>;

std::string join(const std::vector<std::string>& issues) {
  std::string out = "invalid fixture";
  for (const auto& s : issues) out += "\n  " + s;
  return out;
}

bool parse_decimal(const json& v, Real& out) {
  static const std::regex decimal(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  if (!v.is_string()) return false;
  const std::string& s = v.get_ref<const std::string&>();
  if (!std::regex_match(s, decimal)) return false;
  out = Real(s);
  return true;
}

Real to_real(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Real(c.get_num().get_str()) / Real(c.get_den().get_str());
}

Real ipow(const Real& x, std::int64_t n) {
  Real base = n < 0 ? Real(1) / x : x;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Real r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Real determinant(Grid a) {
  const std::size_t n = a.size();
  Real det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(a[r][c]) > abs(a[p][c])) p = r;
    if (a[p][c] == 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Real k = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= k * a[c][j];
    }
  }
  return det;
}

bool positive_definite(const Grid& a) {
  const std::size_t n = a.size();
  Grid l(n, std::vector<Real>(n, Real(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Real s = a[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0) return false;
        l[i][i] = sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  return true;
}

void require_relation(const FieldFixture& f, const BrauerRelation& theta) {
  if (!same_group(f.lattice->group(), theta.group())) throw DataError("relation is not over the fixture's group");
  if (!is_relation(theta)) throw DataError("not a Brauer relation");
}

CheckResult compare(std::string name, const Real& left, const Real& right, double tol) {
  CheckResult c;
  c.name = std::move(name);
  c.left = left;
  c.right = right;
  c.abs_error = abs(left - right);
  c.rel_error = c.abs_error / abs(right);
  c.tolerance = tol;
  c.pass = c.rel_error <= Real(tol);
  return c;
}

Real h_product(const FieldFixture& f, const BrauerRelation& theta, std::int64_t scale) {
  Real p = 1;
  for (std::size_t cls : theta.support()) p *= ipow(Real(f.data(cls).h), scale * theta.coefficient(cls));
  return p;
}

}  // namespace

FixtureError::FixtureError(std::vector<std::string> issues) : DataError(join(issues)), issues_(std::move(issues)) {}

const FieldClassData& FieldFixture::data(std::size_t cls) const {
  if (cls >= classes.size() || !classes[cls])
    throw DataError("fixture " + label + ": no data for subgroup class " + std::to_string(cls));
  return *classes[cls];
}

FieldFixture fixture_from_json(const json& j) {
  std::vector<std::string> issues;
  if (!j.is_object()) throw FixtureError({"top level must be an object"});
  if (!j.contains("schema") || j["schema"] != 1) issues.push_back("\"schema\" must be 1");

  FieldFixture f;
  if (j.contains("label") && j["label"].is_string())
    f.label = j["label"].get<std::string>();
  else
    issues.push_back("\"label\" must be a string");

  try {
    if (!j.contains("group")) throw DataError("missing \"group\"");
    f.lattice = make_lattice(group_from_json(j["group"]));
  } catch (const DataError& e) {
    issues.push_back(e.what());
    throw FixtureError(issues);
  }
  const std::size_t nclasses = f.lattice->class_count();
  f.classes.resize(nclasses);

  if (!j.contains("classes") || !j["classes"].is_array()) {
    issues.push_back("\"classes\" must be an array");
  } else {
    for (std::size_t i = 0; i < j["classes"].size(); ++i) {
      const json& c = j["classes"][i];
      const std::string at = "classes[" + std::to_string(i) + "]: ";
      if (!c.is_object()) {
        issues.push_back(at + "expected an object");
        continue;
      }
      FieldClassData d;
      bool ok = true;
      auto positive_int = [&](const char* key, long& out) {
        if (!c.contains(key) || !c[key].is_number_integer() || c[key].get<long long>() < 1) {
          issues.push_back(at + "\"" + key + "\" must be a positive integer");
          ok = false;
        } else {
          out = static_cast<long>(c[key].get<long long>());
        }
      };
      if (!c.contains("subgroup_class") || !c["subgroup_class"].is_number_integer() ||
          c["subgroup_class"].get<long long>() < 0 ||
          static_cast<std::size_t>(c["subgroup_class"].get<long long>()) >= nclasses) {
        issues.push_back(at + "\"subgroup_class\" must index one of " + std::to_string(nclasses) + " classes");
        ok = false;
      } else {
        d.subgroup_class = static_cast<std::size_t>(c["subgroup_class"].get<long long>());
        if (f.classes[d.subgroup_class]) {
          issues.push_back(at + "duplicate entry for subgroup class " + std::to_string(d.subgroup_class));
          ok = false;
        }
      }
      positive_int("h", d.h);
      positive_int("w", d.w);
      if (!c.contains("reg") || !parse_decimal(c["reg"], d.reg) || d.reg <= 0) {
        issues.push_back(at + "\"reg\" must be a positive decimal string");
        ok = false;
      }
      if (!c.contains("unit_gram") || !c["unit_gram"].is_array()) {
        issues.push_back(at + "\"unit_gram\" must be an array of rows");
        ok = false;
      } else {
        const json& g = c["unit_gram"];
        const std::size_t n = g.size();
        bool shape = true;
        for (std::size_t r = 0; r < n && shape; ++r) {
          if (!g[r].is_array() || g[r].size() != n) {
            issues.push_back(at + "\"unit_gram\" is not square");
            shape = false;
            break;
          }
          d.unit_gram.emplace_back(n);
          for (std::size_t s = 0; s < n; ++s)
            if (!parse_decimal(g[r][s], d.unit_gram[r][s])) {
              issues.push_back(at + "unit_gram[" + std::to_string(r) + "][" + std::to_string(s) +
                               "] is not a decimal string");
              shape = false;
            }
        }
        if (shape) {
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < r; ++s) {
              const Real& a = d.unit_gram[r][s];
              const Real& b = d.unit_gram[s][r];
              if (abs(a - b) > Real("1e-15") * std::max(abs(a), abs(b)))
                issues.push_back(at + "unit_gram is not symmetric at (" + std::to_string(r) + ", " + std::to_string(s) + ")");
            }
          if (n > 0 && !positive_definite(d.unit_gram)) issues.push_back(at + "unit_gram is not positive definite");
        } else {
          ok = false;
        }
      }
      if (ok) f.classes[d.subgroup_class] = std::move(d);
    }
  }

  if (!j.contains("s_orbits") || !j["s_orbits"].is_array()) {
    issues.push_back("\"s_orbits\" must be an array of subgroup classes");
  } else {
    for (const auto& s : j["s_orbits"]) {
      if (!s.is_number_integer() || s.get<long long>() < 0 || static_cast<std::size_t>(s.get<long long>()) >= nclasses)
        issues.push_back("s_orbits: " + s.dump() + " is not a subgroup class");
      else
        f.s_orbits.push_back(static_cast<std::size_t>(s.get<long long>()));
    }
  }
  if (!issues.empty()) throw FixtureError(issues);
  return f;
}

FieldFixture load_fixture(const std::string& path) {
  json j;
  try {
    j = read_json_file(path);
  } catch (const DataError& e) {
    throw FixtureError({e.what()});
  }
  return fixture_from_json(j);
}

Real c_units(const FieldFixture& f, const BrauerRelation& theta) {
  Real c = 1;
  for (std::size_t cls : theta.support()) {
    const auto& d = f.data(cls);
    const Real order(f.lattice->representative(cls).order());
    Grid scaled = d.unit_gram;
    for (auto& row : scaled)
      for (auto& x : row) x /= order;
    Real factor = (scaled.empty() ? Real(1) : determinant(scaled)) / (Real(d.w) * Real(d.w));
    c *= ipow(factor, theta.coefficient(cls));
  }
  return c;
}

GModule s_permutation_module(const FieldFixture& f) {
  const auto& g = f.lattice->group();
  GModule total = GModule::lattice(g, std::vector<IntMatrix>(g->order(), IntMatrix(0, 0)));
  for (std::size_t cls : f.s_orbits) total = direct_sum(total, permutation_module(f.lattice->representative(cls)));
  return total;
}

mpq_class c_zs(const FieldFixture& f, const BrauerRelation& theta) { return regulator_constant(theta, s_permutation_module(f)); }

mpq_class c_z(const BrauerRelation& theta) {
  mpq_class c = 1;
  for (std::size_t cls : theta.support())
    c *= rational_power(mpq_class(static_cast<unsigned long>(theta.lattice()->representative(cls).order())),
                        -static_cast<long>(theta.coefficient(cls)));
  return c;
}

CheckResult check_bcnf(const FieldFixture& f, const BrauerRelation& theta, double tol) {
  require_relation(f, theta);
  Real right = 1;
  for (std::size_t cls : theta.support()) {
    const auto& d = f.data(cls);
    right *= ipow(Real(d.w) / d.reg, theta.coefficient(cls));
  }
  return compare("bcnf", h_product(f, theta, 1), right, tol);
}

CheckResult check_thm_rccln(const FieldFixture& f, const BrauerRelation& theta, double tol) {
  require_relation(f, theta);
  Real right = to_real(c_z(theta) / c_zs(f, theta)) * h_product(f, theta, -2);
  return compare("rccln", c_units(f, theta), right, tol);
}

CheckResult check_thm_rcreg(const FieldFixture& f, const BrauerRelation& theta, double tol) {
  require_relation(f, theta);
  Real right = to_real(c_z(theta) / c_zs(f, theta));
  for (std::size_t cls : theta.support()) {
    const auto& d = f.data(cls);
    const std::int64_t n = theta.coefficient(cls);
    right *= ipow(Real(d.w), -2 * n) * ipow(d.reg, 2 * n);
  }
  return compare("rcreg", c_units(f, theta), right, tol);
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return consistent;
}

namespace {

std::optional<Real> implied_q_k(const FieldFixture& f) {
  const auto& lat = *f.lattice;
  if (lat.group()->order() != 4 || lat.group()->is_cyclic()) return std::nullopt;
  std::vector<std::size_t> real, imaginary;
  for (std::size_t cls = 0; cls < lat.class_count(); ++cls) {
    if (lat.representative(cls).order() != 2) continue;
    if (cls >= f.classes.size() || !f.classes[cls]) return std::nullopt;
    (f.classes[cls]->unit_gram.empty() ? imaginary : real).push_back(cls);
  }
  if (real.size() != 1 || imaginary.size() != 2 || !f.classes[0]) return std::nullopt;
  // Q(i) is the imaginary quadratic subfield with four roots of unity
  const bool first_is_i = f.classes[imaginary[0]]->w == 4;
  const bool second_is_i = f.classes[imaginary[1]]->w == 4;
  if (first_is_i == second_is_i) return std::nullopt;
  const auto& minus_d = *f.classes[first_is_i ? imaginary[1] : imaginary[0]];
  return Real(2 * f.classes[0]->h) / (Real(f.classes[real[0]]->h) * Real(minus_d.h));
}

}  // namespace

VerificationReport verify(const FieldFixture& f, const BrauerRelation& theta, double tol) {
  require_relation(f, theta);
  VerificationReport r;
  r.label = f.label;
  r.relation = theta.coefficients();
  r.c_z = c_z(theta);
  r.c_zs = c_zs(f, theta);
  r.c_units = c_units(f, theta);
  r.checks = {check_bcnf(f, theta, tol), check_thm_rccln(f, theta, tol), check_thm_rcreg(f, theta, tol)};
  auto ratio = [](const CheckResult& c) { return c.left / c.right; };
  Real b = ratio(r.checks[0]);
  r.consistency_residual = abs(b * b * ratio(r.checks[2]) / ratio(r.checks[1]) - 1);
  r.consistent = r.consistency_residual <= Real(tol) * Real(tol);
  r.implied_q_k = implied_q_k(f);
  return r;
}

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << x;
  return out.str();
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"left", to_decimal(c.left)},
                      {"right", to_decimal(c.right)},
                      {"abs_error", to_decimal(c.abs_error, 6)},
                      {"rel_error", to_decimal(c.rel_error, 6)},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  json out = {{"label", r.label},
              {"relation", r.relation},
              {"c_z", to_string(r.c_z)},
              {"c_zs", to_string(r.c_zs)},
              {"c_units", to_decimal(r.c_units)},
              {"checks", std::move(checks)},
              {"consistency", {{"residual", to_decimal(r.consistency_residual, 6)}, {"holds", r.consistent}}},
              {"pass", r.all_pass()}};
  if (r.implied_q_k) out["implied_q_k"] = to_decimal(*r.implied_q_k, 12);
  return out;
}

}  // namespace brauer
