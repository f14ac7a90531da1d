#include "brauer/io.hpp"

#include <fstream>
#include <sstream>

namespace brauer {

namespace {

const mpz_class kSafeInteger = mpz_class(1) << 53;

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw DataError(what + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw DataError(what + ": missing \"" + key + "\"");
  return *it;
}

long long integer_field(const json& j, const char* key, const std::string& what) {
  const json& v = field(j, key, what);
  if (!v.is_number_integer()) throw DataError(what + ": \"" + key + "\" must be an integer");
  return v.get<long long>();
}

mpz_class integer_entry(const json& v) {
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw DataError("matrix: entry \"" + s + "\" is not a decimal integer");
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
  }
  throw DataError("matrix: entries must be integers or decimal strings");
}

std::size_t index_in(long long v, std::size_t bound, const std::string& what) {
  if (v < 0 || static_cast<unsigned long long>(v) >= bound)
    throw DataError(what + " " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

GroupPtr resolve_group(const json& j, GroupPtr given, const std::string& what) {
  if (j.is_object() && j.contains("group")) {
    GroupPtr g = group_from_json(j["group"]);
    if (given && !same_group(g, given)) throw DataError(what + ": group differs from the one given");
    return given ? given : g;
  }
  if (!given) throw DataError(what + ": missing \"group\"");
  return given;
}

}  // namespace

IntMatrix matrix_from_json(const json& j) {
  const long long r0 = integer_field(j, "rows", "matrix");
  const long long c0 = integer_field(j, "cols", "matrix");
  if (r0 < 0 || c0 < 0) throw DataError("matrix: negative shape");
  const auto rows = static_cast<std::size_t>(r0);
  const auto cols = static_cast<std::size_t>(c0);
  const json& e = field(j, "entries", "matrix");
  if (!e.is_array() || e.size() != rows) throw DataError("matrix: \"entries\" must have one array per row");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!e[r].is_array() || e[r].size() != cols) throw DataError("matrix: row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_entry(e[r][c]);
  }
  return m;
}

json to_json(const IntMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpz_class& x = m(r, c);
      if (abs(x) < kSafeInteger)
        row.push_back(x.get_si());
      else
        row.push_back(x.get_str());
    }
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

GroupPtr group_from_json(const json& j) {
  if (j.is_string()) return group_from_json(json{{"preset", j}});
  if (!j.is_object()) throw DataError("group: expected an object");
  try {
    if (j.contains("preset")) {
      if (!j["preset"].is_string()) throw DataError("group: \"preset\" must be a string");
      return preset_group(j["preset"].get<std::string>());
    }
    const long long degree0 = integer_field(j, "degree", "group");
    if (degree0 < 1) throw DataError("group: degree must be positive");
    const auto degree = static_cast<std::size_t>(degree0);
    const json& gens = field(j, "generators", "group");
    if (!gens.is_array()) throw DataError("group: \"generators\" must be an array");
    std::vector<Permutation> perms;
    for (const auto& p : gens) {
      if (!p.is_array() || p.size() != degree) throw DataError("group: generator length differs from degree");
      Permutation perm;
      for (const auto& x : p) {
        if (!x.is_number_integer()) throw DataError("group: permutation entries must be integers");
        perm.push_back(static_cast<int>(x.get<long long>()));
      }
      perms.push_back(std::move(perm));
    }
    return make_group(FiniteGroup::from_generators(degree, perms));
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("group: ") + e.what());
  }
}

BrauerRelation relation_from_json(const json& j, LatticePtr lattice) {
  GroupPtr g = resolve_group(j, lattice ? lattice->group() : nullptr, "relation");
  if (!lattice) lattice = make_lattice(g);
  BrauerRelation r(lattice);
  const json& terms = field(j, "terms", "relation");
  if (!terms.is_array()) throw DataError("relation: \"terms\" must be an array");
  for (const auto& t : terms) {
    std::size_t cls = index_in(integer_field(t, "subgroup_class", "relation term"), lattice->class_count(),
                               "relation: subgroup class");
    r.add(cls, integer_field(t, "coeff", "relation term"));
  }
  return r;
}

json to_json(const BrauerRelation& r) {
  json terms = json::array();
  for (std::size_t cls : r.support()) terms.push_back({{"subgroup_class", cls}, {"coeff", r.coefficient(cls)}});
  return {{"terms", std::move(terms)}};
}

GModule module_from_json(const json& j, GroupPtr group) {
  group = resolve_group(j, group, "module");
  const long long rank0 = integer_field(j, "rank", "module");
  if (rank0 < 0) throw DataError("module: negative rank");
  const auto rank = static_cast<std::size_t>(rank0);
  IntMatrix rels(rank, 0);
  if (j.contains("rels")) {
    rels = matrix_from_json(j["rels"]);
    if (rels.rows() != rank) throw DataError("module: \"rels\" must have rank rows");
  }
  std::map<int, IntMatrix> given;
  const json& action = field(j, "action", "module");
  if (!action.is_object()) throw DataError("module: \"action\" must map element indices to matrices");
  for (const auto& [key, value] : action.items()) {
    long long idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw DataError("module: action key \"" + key + "\" is not an element index");
    }
    IntMatrix a = matrix_from_json(value);
    if (a.rows() != rank || a.cols() != rank) throw DataError("module: action matrix for " + key + " is not rank x rank");
    given[static_cast<int>(index_in(idx, group->order(), "module: element"))] = std::move(a);
  }
  try {
    return GModule::from_generator_action(group, rels, given);
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("module: ") + e.what());
  }
}

json to_json(const GModule& m) {
  json action = json::object();
  for (std::size_t g = 0; g < m.group()->order(); ++g) action[std::to_string(g)] = to_json(m.action(static_cast<int>(g)));
  return {{"rank", m.rank()}, {"rels", to_json(m.rels())}, {"action", std::move(action)}};
}

LocalGaloisDatum local_datum_from_json(const json& j, LatticePtr lattice) {
  GroupPtr g = resolve_group(j, lattice ? lattice->group() : nullptr, "local datum");
  if (!lattice) lattice = make_lattice(g);
  std::size_t cls = index_in(integer_field(j, "inertia_subgroup_class", "local datum"), lattice->class_count(),
                             "local datum: subgroup class");
  std::size_t frob = index_in(integer_field(j, "frobenius_element", "local datum"), g->order(), "local datum: element");
  LocalGaloisDatum d{g, lattice->representative(cls), static_cast<int>(frob)};
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  return d;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

json json_argument(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[' || text[first] == '"')) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw DataError(std::string("malformed JSON argument: ") + e.what());
    }
  }
  return read_json_file(text);
}

}  // namespace brauer
