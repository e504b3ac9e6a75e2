#include "gnepdeg/fjsys.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gnepdeg/errors.hpp"

namespace gnepdeg {

GnepInstance::GnepInstance(GnepShape shape, std::vector<IntPolynomial> objectives,
                           std::vector<std::vector<IntPolynomial>> constraints)
    : shape_(std::move(shape)),
      objectives_(std::move(objectives)),
      constraints_(std::move(constraints)) {
  const std::size_t N = shape_.num_players();
  ring_dims_ = shape_.nu().entries();
  if (objectives_.size() != N || constraints_.size() != N)
    throw SpecError("GnepInstance: one objective and one constraint list per player required");
  for (std::size_t i = 0; i < N; ++i) {
    if (objectives_[i].dims() != ring_dims_)
      throw SpecError("GnepInstance: objective of player " + std::to_string(i + 1) +
                      " lives in the wrong ring");
    if (multidegree(objectives_[i]) != shape_.player(i).objective)
      throw SpecError("GnepInstance: objective of player " + std::to_string(i + 1) +
                      " does not match its declared multi-degree");
    if (constraints_[i].size() != shape_.player(i).constraints.size())
      throw SpecError("GnepInstance: constraint count mismatch for player " +
                      std::to_string(i + 1));
    for (std::size_t j = 0; j < constraints_[i].size(); ++j) {
      if (constraints_[i][j].dims() != ring_dims_)
        throw SpecError("GnepInstance: constraint g" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + " lives in the wrong ring");
      if (multidegree(constraints_[i][j]) != shape_.player(i).constraints[j].degree)
        throw SpecError("GnepInstance: constraint g" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + " does not match its declared multi-degree");
    }
  }
}

GradientDegrees instance_gradient_degrees(const GnepInstance& instance) {
  GradientDegrees g;
  const std::size_t N = instance.shape().num_players();
  for (std::size_t i = 0; i < N; ++i) {
    g.objective.push_back(gradient_multidegree(instance.objective(i), i));
    std::vector<MultiDegree> row;
    for (std::size_t j = 0; j < instance.shape().player(i).constraints.size(); ++j)
      row.push_back(gradient_multidegree(instance.constraint(i, static_cast<int>(j)), i));
    g.constraint.push_back(std::move(row));
  }
  return g;
}

namespace {

void check_active_indices(const GnepShape& shape, const ActiveTuple& active) {
  if (active.num_players() != shape.num_players())
    throw PreconditionError("active tuple: expected one index set per player");
  for (std::size_t i = 0; i < shape.num_players(); ++i)
    for (int j : active.set(i))
      if (j < 0 || j >= static_cast<int>(shape.player(i).constraints.size()))
        throw PreconditionError("active tuple: player " + std::to_string(i + 1) +
                                " has no constraint with index " + std::to_string(j + 1));
}

IntPolynomial determinant(const std::vector<std::vector<IntPolynomial>>& m,
                          const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  IntPolynomial det(m[rows[0]][cols[0]].dims());
  // Expand along the first listed column.
  std::vector<int> sub_cols(cols.begin() + 1, cols.end());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const IntPolynomial& pivot = m[rows[r]][cols[0]];
    if (pivot.is_zero()) continue;
    std::vector<int> sub_rows;
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != r) sub_rows.push_back(rows[q]);
    IntPolynomial cofactor = pivot * determinant(m, sub_rows, sub_cols);
    det = (r % 2 == 0) ? det + cofactor : det - cofactor;
  }
  return det;
}

void combinations_rec(int n, int k, int start, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
    cur.push_back(v);
    combinations_rec(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

// Size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  combinations_rec(n, k, 0, cur, out);
  return out;
}

IntPolynomial lift(const IntPolynomial& p, const std::vector<int>& ring_dims,
                   std::size_t total_vars) {
  IntPolynomial out(ring_dims);
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> e2 = e;
    e2.resize(total_vars, 0);
    out.add_term(e2, c);
  }
  return out;
}

int nonzero_draw(std::uint64_t seed, std::uint64_t counter) {
  int c = static_cast<int>(splitmix64(splitmix64(seed) ^ splitmix64(counter + 1)) % 18) - 9;
  return c >= 0 ? c + 1 : c;
}

}  // namespace

std::vector<std::vector<IntPolynomial>> fj_jacobian(const GnepInstance& instance,
                                                    std::size_t player,
                                                    const std::vector<int>& active_set) {
  const GnepShape& shape = instance.shape();
  if (player >= shape.num_players())
    throw std::invalid_argument("fj_jacobian: player out of range");
  std::vector<int> sorted = active_set;
  std::sort(sorted.begin(), sorted.end());
  for (int j : sorted)
    if (j < 0 || j >= static_cast<int>(shape.player(player).constraints.size()))
      throw PreconditionError("fj_jacobian: constraint index out of range");

  const int ni = shape.player(player).dim;
  std::vector<std::vector<IntPolynomial>> matrix(ni);
  for (int k = 0; k < ni; ++k) {
    matrix[k].push_back(partial(instance.objective(player), BlockVar{static_cast<int>(player), k}));
    for (int j : sorted)
      matrix[k].push_back(partial(instance.constraint(player, j), BlockVar{static_cast<int>(player), k}));
  }
  return matrix;
}

FritzJohnSystem build_fritz_john(const GnepInstance& instance, const ActiveTuple& active,
                                 const BuildOptions& options) {
  const GnepShape& shape = instance.shape();
  check_active_indices(shape, active);
  const std::size_t N = shape.num_players();

  FritzJohnSystem sys;
  sys.formulation = options.formulation;
  sys.active = active;
  sys.player_dims = shape.nu().entries();

  if (options.formulation == Formulation::Minors) {
    for (std::size_t i = 0; i < N; ++i)
      if (static_cast<int>(active.set(i).size()) > shape.player(i).dim)
        throw PreconditionError("minors formulation: player " + std::to_string(i + 1) +
                                " has more active constraints than variables");
    sys.ring_dims = sys.player_dims;
    sys.variables = default_var_names(sys.ring_dims);
    for (std::size_t i = 0; i < N; ++i)
      for (int j : active.set(i)) sys.generators.push_back(instance.constraint(i, j));
    for (std::size_t i = 0; i < N; ++i) {
      const int ni = shape.player(i).dim;
      const int mi = static_cast<int>(active.set(i).size());
      if (mi + 1 > ni) continue;  // rank condition vacuous when m_i = n_i
      auto jac = fj_jacobian(instance, i, active.set(i));
      std::vector<int> all_cols(mi + 1);
      for (int c = 0; c <= mi; ++c) all_cols[c] = c;
      for (const auto& rows : combinations(ni, mi + 1))
        sys.generators.push_back(determinant(jac, rows, all_cols));
    }
    return sys;
  }

  // Lagrange formulation.
  const bool chart = !options.normalization_seed.has_value();
  sys.ring_dims = sys.player_dims;
  std::vector<std::vector<int>> multiplier_index(N);  // 1-based textual subscripts
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<int> subs;
    if (!chart) subs.push_back(0);  // lambda_{i,0}
    for (int j : active.set(i)) subs.push_back(j + 1);
    multiplier_index[i] = subs;
    sys.ring_dims.push_back(static_cast<int>(subs.size()));
  }
  sys.variables = default_var_names(sys.player_dims);
  for (std::size_t i = 0; i < N; ++i)
    for (int s : multiplier_index[i])
      sys.variables.push_back("l" + std::to_string(i + 1) + "_" + std::to_string(s));

  std::size_t total_vars = 0;
  for (int d : sys.ring_dims) total_vars += static_cast<std::size_t>(d);

  auto multiplier_var = [&](std::size_t i, std::size_t pos) {
    return IntPolynomial::variable(sys.ring_dims,
                                   BlockVar{static_cast<int>(N + i), static_cast<int>(pos)});
  };

  for (std::size_t i = 0; i < N; ++i)
    for (int j : active.set(i))
      sys.generators.push_back(lift(instance.constraint(i, j), sys.ring_dims, total_vars));

  for (std::size_t i = 0; i < N; ++i) {
    const auto& act = active.set(i);
    for (int k = 0; k < shape.player(i).dim; ++k) {
      BlockVar xk{static_cast<int>(i), k};
      IntPolynomial eq =
          lift(partial(instance.objective(i), xk), sys.ring_dims, total_vars);
      if (!chart) eq = multiplier_var(i, 0) * eq;
      for (std::size_t a = 0; a < act.size(); ++a) {
        IntPolynomial grad =
            lift(partial(instance.constraint(i, act[a]), xk), sys.ring_dims, total_vars);
        eq = eq - multiplier_var(i, chart ? a : a + 1) * grad;
      }
      sys.generators.push_back(eq);
    }
  }

  if (!chart) {
    std::uint64_t counter = 0;
    for (std::size_t i = 0; i < N; ++i) {
      IntPolynomial norm = IntPolynomial::constant(sys.ring_dims, -1);
      for (std::size_t pos = 0; pos < multiplier_index[i].size(); ++pos)
        norm = norm + multiplier_var(i, pos).scaled(
                          nonzero_draw(*options.normalization_seed, counter++));
      sys.generators.push_back(norm);
    }
  }
  return sys;
}

std::string export_cas(const FritzJohnSystem& system) {
  std::ostringstream os;
  os << "R = QQ[";
  for (std::size_t k = 0; k < system.variables.size(); ++k) {
    if (k) os << ", ";
    os << system.variables[k];
  }
  os << "];\n";
  if (system.generators.empty()) {
    os << "I = ideal(0_R);\n";
  } else {
    os << "I = ideal(";
    for (std::size_t g = 0; g < system.generators.size(); ++g) {
      if (g) os << ", ";
      os << format_polynomial(system.generators[g], &system.variables);
    }
    os << ");\n";
  }
  os << "dim I\n";
  os << "degree I\n";
  return os.str();
}

namespace {

const char* formulation_name(Formulation f) {
  return f == Formulation::Minors ? "minors" : "lagrange";
}

Formulation formulation_from_name(const std::string& s) {
  if (s == "minors") return Formulation::Minors;
  if (s == "lagrange") return Formulation::Lagrange;
  throw SpecError("unknown formulation '" + s + "'");
}

}  // namespace

std::string export_json(const FritzJohnSystem& system) {
  nlohmann::json doc;
  doc["formulation"] = formulation_name(system.formulation);
  nlohmann::json active = nlohmann::json::array();
  for (std::size_t i = 0; i < system.active.num_players(); ++i) {
    nlohmann::json s = nlohmann::json::array();
    for (int j : system.active.set(i)) s.push_back(j + 1);
    active.push_back(s);
  }
  doc["active"] = active;
  doc["player_dims"] = system.player_dims;
  doc["ring_dims"] = system.ring_dims;
  doc["variables"] = system.variables;
  nlohmann::json gens = nlohmann::json::array();
  for (const IntPolynomial& g : system.generators)
    gens.push_back(format_polynomial(g, &system.variables));
  doc["generators"] = gens;
  return doc.dump(2) + "\n";
}

FritzJohnSystem import_fritz_john(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("system document: ") + e.what());
  }
  try {
    FritzJohnSystem sys;
    sys.formulation = formulation_from_name(doc.at("formulation").get<std::string>());
    std::vector<std::vector<int>> sets;
    for (const auto& s : doc.at("active")) {
      std::vector<int> one;
      for (const auto& j : s) one.push_back(j.get<int>() - 1);
      sets.push_back(std::move(one));
    }
    sys.active = ActiveTuple(std::move(sets));
    sys.player_dims = doc.at("player_dims").get<std::vector<int>>();
    sys.ring_dims = doc.at("ring_dims").get<std::vector<int>>();
    sys.variables = doc.at("variables").get<std::vector<std::string>>();
    std::size_t total = 0;
    for (int d : sys.ring_dims) total += static_cast<std::size_t>(d);
    if (sys.variables.size() != total)
      throw SpecError("system document: variable list does not match ring blocks");
    std::map<std::string, int> table;
    for (std::size_t k = 0; k < sys.variables.size(); ++k)
      table.emplace(sys.variables[k], static_cast<int>(k));
    for (const auto& g : doc.at("generators"))
      sys.generators.push_back(parse_polynomial(g.get<std::string>(), sys.ring_dims, &table));
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("system document: ") + e.what());
  }
}

}  // namespace gnepdeg
