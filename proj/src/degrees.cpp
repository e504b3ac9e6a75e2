#include "gnepdeg/degrees.hpp"

#include <algorithm>
#include <stdexcept>

#include "gnepdeg/errors.hpp"
#include "gnepdeg/genfun.hpp"

namespace gnepdeg {

GnepShape::GnepShape(std::vector<Player> players) : players_(std::move(players)) {
  if (players_.empty()) throw SpecError("GnepShape: no players");
  const std::size_t N = players_.size();
  std::vector<int> dims;
  for (std::size_t i = 0; i < N; ++i) {
    const Player& p = players_[i];
    if (p.dim < 1)
      throw SpecError("GnepShape: player " + std::to_string(i + 1) + " has dimension < 1");
    if (p.objective.size() != N)
      throw SpecError("GnepShape: objective multi-degree of player " + std::to_string(i + 1) +
                      " has wrong length");
    for (std::size_t j = 0; j < p.constraints.size(); ++j) {
      const Constraint& c = p.constraints[j];
      if (c.degree.size() != N)
        throw SpecError("GnepShape: constraint multi-degree g" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + " has wrong length");
      if (c.degree.is_zero())
        throw SpecError("GnepShape: constraint g" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + " has zero multi-degree");
    }
    dims.push_back(p.dim);
  }
  nu_ = MultiDegree(std::move(dims));
}

bool GnepShape::is_nep_shaped() const {
  for (std::size_t i = 0; i < players_.size(); ++i) {
    for (const Constraint& c : players_[i].constraints) {
      for (std::size_t q = 0; q < c.degree.size(); ++q) {
        if (q != i && c.degree[q] != 0) return false;
      }
      // Nonzero tuple invariant already guarantees c.degree[i] >= 1 here.
    }
  }
  return true;
}

ActiveTuple::ActiveTuple(std::vector<std::vector<int>> sets) : sets_(std::move(sets)) {
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0) throw std::invalid_argument("ActiveTuple: negative constraint index");
      if (k > 0 && s[k] == s[k - 1])
        throw std::invalid_argument("ActiveTuple: repeated constraint index");
    }
  }
}

std::vector<int> ActiveTuple::sizes() const {
  std::vector<int> ms;
  ms.reserve(sets_.size());
  for (const auto& s : sets_) ms.push_back(static_cast<int>(s.size()));
  return ms;
}

bool operator<(const ActiveTuple& a, const ActiveTuple& b) { return a.sets_ < b.sets_; }

DegreeArray::DegreeArray(int dimension, MultiDegree cap)
    : dimension_(dimension), cap_(std::move(cap)) {
  if (dimension < 0 || dimension > cap_.weight())
    throw std::invalid_argument("DegreeArray: dimension out of range for cap " + cap_.str());
  for (const LabelVector& l : labels(dimension, cap_)) entries_.emplace(l, Int(0));
}

Int& DegreeArray::at(const MultiDegree& label) {
  auto it = entries_.find(LabelVector(label, cap_));
  if (it == entries_.end())
    throw std::out_of_range("DegreeArray: " + label.str() + " is not a label of weight " +
                            std::to_string(dimension_));
  return it->second;
}

const Int& DegreeArray::at(const MultiDegree& label) const {
  return const_cast<DegreeArray*>(this)->at(label);
}

ActiveTupleEnumeration enumerate_active_tuples(const GnepShape& shape) {
  const std::size_t N = shape.num_players();
  ActiveTupleEnumeration out;

  // Admissible per-player sets, each sorted, the list of sets ordered
  // lexicographically.
  std::vector<std::vector<std::vector<int>>> per_player(N);
  for (std::size_t i = 0; i < N; ++i) {
    const auto& cons = shape.player(i).constraints;
    std::vector<int> eqs, ineqs;
    for (std::size_t j = 0; j < cons.size(); ++j) {
      (cons[j].kind == ConstraintKind::Equality ? eqs : ineqs).push_back(static_cast<int>(j));
    }
    const int room = shape.player(i).dim - static_cast<int>(eqs.size());
    if (room < 0) {
      out.equalities_exceed_dimension = true;
      return out;
    }
    for (std::size_t mask = 0; mask < (std::size_t(1) << ineqs.size()); ++mask) {
      std::vector<int> set = eqs;
      for (std::size_t b = 0; b < ineqs.size(); ++b)
        if (mask & (std::size_t(1) << b)) set.push_back(ineqs[b]);
      if (static_cast<int>(set.size()) > shape.player(i).dim) continue;
      std::sort(set.begin(), set.end());
      per_player[i].push_back(std::move(set));
    }
    std::sort(per_player[i].begin(), per_player[i].end());
  }

  std::vector<std::vector<int>> current(N);
  // Cartesian product in lexicographic order.
  std::vector<std::size_t> idx(N, 0);
  while (true) {
    for (std::size_t i = 0; i < N; ++i) current[i] = per_player[i][idx[i]];
    out.tuples.emplace_back(current);
    std::size_t i = N;
    while (i > 0) {
      --i;
      if (++idx[i] < per_player[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

namespace {

// All tuples (delta_0, ..., delta_K) of nonnegative vectors with prescribed
// weights summing exactly to `target`; reported as labels l = cap - delta.
void decompose_rec(const MultiDegree& cap, const MultiDegree& remaining,
                   const std::vector<int>& weights, std::size_t slot,
                   std::vector<LabelVector>& current,
                   std::vector<std::vector<LabelVector>>& out) {
  if (slot + 1 == weights.size()) {
    if (remaining.weight() == weights[slot]) {
      current.emplace_back(sub(cap, remaining), cap);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (const LabelVector& d : labels(weights[slot], remaining)) {
    const MultiDegree& delta = d.entries();
    current.emplace_back(sub(cap, delta), cap);
    decompose_rec(cap, sub(remaining, delta), weights, slot + 1, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<LabelVector>> decompose(const MultiDegree& cap,
                                                const MultiDegree& target,
                                                const std::vector<int>& weights) {
  std::vector<std::vector<LabelVector>> out;
  int total = 0;
  for (int w : weights) total += w;
  if (total != target.weight()) return out;
  std::vector<LabelVector> current;
  decompose_rec(cap, target, weights, 0, current, out);
  return out;
}

void check_ms(const MultiDegree& nu, const std::vector<int>& ms) {
  if (ms.size() != nu.size())
    throw std::invalid_argument("pairing labels: ms length mismatch");
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ms[i] < 0 || ms[i] > nu[i])
      throw std::invalid_argument("pairing labels: need 0 <= m_i <= n_i");
}

}  // namespace

std::vector<std::vector<LabelVector>> gnep_pairing_labels(const MultiDegree& nu,
                                                          const std::vector<int>& ms) {
  check_ms(nu, ms);
  int m = 0;
  for (int mi : ms) m += mi;
  std::vector<int> weights{m};
  for (std::size_t i = 0; i < ms.size(); ++i) weights.push_back(nu[i] - ms[i]);
  return decompose(nu, nu, weights);
}

std::vector<std::vector<LabelVector>> nep_pairing_labels(const MultiDegree& nu,
                                                         const std::vector<int>& ms) {
  check_ms(nu, ms);
  std::vector<int> weights;
  for (std::size_t i = 0; i < ms.size(); ++i) weights.push_back(nu[i] - ms[i]);
  return decompose(nu, sub(nu, MultiDegree(ms)), weights);
}

DegreeArray complete_intersection_degree(const MultiDegree& nu,
                                         const std::vector<MultiDegree>& ds) {
  const int n = nu.weight();
  const int k = static_cast<int>(ds.size());
  if (k > n)
    throw PreconditionError("complete_intersection_degree: more hypersurfaces than variables");
  DegreeArray out(n - k, nu);
  for (const auto& [l, _] : out.entries()) out.at(l.entries()) = multi_bezout_coeff(l.complement(), ds);
  return out;
}

DegreeArray intersection_degree(const MultiDegree& nu, const DegreeArray& X,
                                const DegreeArray& Y) {
  if (!(X.cap() == nu) || !(Y.cap() == nu))
    throw PreconditionError("intersection_degree: degree array cap does not match nu");
  const int n = nu.weight();
  if (X.dimension() + Y.dimension() < n)
    throw PreconditionError("intersection_degree: dim X + dim Y < n");
  DegreeArray out(X.dimension() + Y.dimension() - n, nu);
  for (const auto& [l, _] : out.entries()) {
    Int sum = 0;
    for (const auto& [l1, xv] : X.entries()) {
      if (!leq(l.entries(), l1.entries())) continue;
      // (nu + l) - l1 stays within the cap because l <= l1.
      sum += xv * Y.at(sub(add(nu, l.entries()), l1.entries()));
    }
    out.at(l.entries()) = sum;
  }
  return out;
}

DegreeArray determinantal_degree(const MultiDegree& nu, int rows, int cols,
                                 const std::vector<MultiDegree>& col_degs, int rank_bound) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("determinantal_degree: matrix sides must be positive");
  if (static_cast<int>(col_degs.size()) != cols)
    throw std::invalid_argument("determinantal_degree: need one multi-degree per column");
  const int n = nu.weight();
  if (rows <= cols && rank_bound == rows - 1) {
    const int codim = cols - rows + 1;
    if (codim > n)
      throw PreconditionError("determinantal_degree: expected codimension exceeds n");
    DegreeArray out(n - codim, nu);
    for (const auto& [l, _] : out.entries()) out.at(l.entries()) = chern_coeff(l.complement(), col_degs);
    return out;
  }
  if (rows > cols && rank_bound == cols - 1) {
    const int codim = rows - cols + 1;
    if (codim > n)
      throw PreconditionError("determinantal_degree: expected codimension exceeds n");
    DegreeArray out(n - codim, nu);
    for (const auto& [l, _] : out.entries()) out.at(l.entries()) = segre_coeff(l.complement(), col_degs);
    return out;
  }
  throw PreconditionError("determinantal_degree: unsupported (rows, cols, rank_bound) combination");
}

GradientDegrees generic_gradient_degrees(const GnepShape& shape) {
  GradientDegrees g;
  for (std::size_t i = 0; i < shape.num_players(); ++i) {
    const auto& p = shape.player(i);
    g.objective.push_back(hat_degree(p.objective, i));
    std::vector<MultiDegree> row;
    for (const Constraint& c : p.constraints) row.push_back(hat_degree(c.degree, i));
    g.constraint.push_back(std::move(row));
  }
  return g;
}

namespace {

void check_active(const GnepShape& shape, const ActiveTuple& active) {
  const std::size_t N = shape.num_players();
  if (active.num_players() != N)
    throw PreconditionError("active tuple: expected one index set per player");
  for (std::size_t i = 0; i < N; ++i) {
    const auto& s = active.set(i);
    for (int j : s) {
      if (j < 0 || j >= static_cast<int>(shape.player(i).constraints.size()))
        throw PreconditionError("active tuple: player " + std::to_string(i + 1) +
                                " has no constraint with index " + std::to_string(j + 1));
    }
    if (static_cast<int>(s.size()) > shape.player(i).dim)
      throw PreconditionError("active tuple: player " + std::to_string(i + 1) +
                              " has more active constraints than variables");
  }
}

void check_gradient_degrees(const GnepShape& shape, const GradientDegrees& grads) {
  const std::size_t N = shape.num_players();
  if (grads.objective.size() != N || grads.constraint.size() != N)
    throw std::invalid_argument("gradient degrees: one entry per player required");
  for (std::size_t i = 0; i < N; ++i) {
    if (grads.objective[i].size() != N)
      throw std::invalid_argument("gradient degrees: objective entry length mismatch");
    if (grads.constraint[i].size() != shape.player(i).constraints.size())
      throw std::invalid_argument("gradient degrees: one entry per constraint required");
    for (const MultiDegree& d : grads.constraint[i])
      if (d.size() != N)
        throw std::invalid_argument("gradient degrees: constraint entry length mismatch");
  }
}

}  // namespace

Int gnep_degree_fixed(const GnepShape& shape, const ActiveTuple& active,
                      const GradientDegrees& grads) {
  check_active(shape, active);
  check_gradient_degrees(shape, grads);
  const std::size_t N = shape.num_players();

  // Constraint part: original multi-degrees of all active constraints.
  std::vector<MultiDegree> constraint_degs;
  for (std::size_t i = 0; i < N; ++i)
    for (int j : active.set(i)) constraint_degs.push_back(shape.player(i).constraints[j].degree);

  // Rank part per player: gradient degrees of the objective and the active
  // constraints.
  std::vector<std::vector<MultiDegree>> rank_degs(N);
  for (std::size_t i = 0; i < N; ++i) {
    rank_degs[i].push_back(grads.objective[i]);
    for (int j : active.set(i)) rank_degs[i].push_back(grads.constraint[i][j]);
  }

  Int total = 0;
  for (const auto& tuple : gnep_pairing_labels(shape.nu(), active.sizes())) {
    Int term = multi_bezout_coeff(tuple[0].complement(), constraint_degs);
    if (term == 0) continue;
    for (std::size_t i = 0; i < N && term != 0; ++i)
      term *= segre_coeff(tuple[i + 1].complement(), rank_degs[i]);
    total += term;
  }
  return total;
}

Int gnep_degree_fixed(const GnepShape& shape, const ActiveTuple& active) {
  return gnep_degree_fixed(shape, active, generic_gradient_degrees(shape));
}

TotalDegree gnep_degree_total(const GnepShape& shape, const GradientDegrees& grads) {
  TotalDegree out;
  out.total = 0;
  ActiveTupleEnumeration lam = enumerate_active_tuples(shape);
  out.equalities_exceed_dimension = lam.equalities_exceed_dimension;
  for (const ActiveTuple& E : lam.tuples) {
    Int v = gnep_degree_fixed(shape, E, grads);
    out.total += v;
    out.per_active.emplace_back(E, std::move(v));
  }
  return out;
}

TotalDegree gnep_degree_total(const GnepShape& shape) {
  return gnep_degree_total(shape, generic_gradient_degrees(shape));
}

Int nep_degree_fixed(const GnepShape& shape, const ActiveTuple& active) {
  if (!shape.is_nep_shaped())
    throw PreconditionError("nep degree: a constraint involves another player's block");
  check_active(shape, active);
  const std::size_t N = shape.num_players();

  Int scale = 1;  // product of the active constraints' own-block degrees
  std::vector<MultiDegree> z0(N, MultiDegree());
  std::vector<std::vector<int>> zs(N);
  for (std::size_t i = 0; i < N; ++i) {
    z0[i] = hat_degree(shape.player(i).objective, i);
    for (int j : active.set(i)) {
      const int c = shape.player(i).constraints[j].degree[i];
      scale *= c;
      zs[i].push_back(c - 1);
    }
  }

  Int sum = 0;
  for (const auto& tuple : nep_pairing_labels(shape.nu(), active.sizes())) {
    Int term = 1;
    for (std::size_t i = 0; i < N && term != 0; ++i)
      term *= nep_segre_coeff(i, tuple[i].complement(), z0[i], zs[i]);
    sum += term;
  }
  return scale * sum;
}

TotalDegree nep_degree_total(const GnepShape& shape) {
  TotalDegree out;
  out.total = 0;
  ActiveTupleEnumeration lam = enumerate_active_tuples(shape);
  out.equalities_exceed_dimension = lam.equalities_exceed_dimension;
  for (const ActiveTuple& E : lam.tuples) {
    Int v = nep_degree_fixed(shape, E);
    out.total += v;
    out.per_active.emplace_back(E, std::move(v));
  }
  return out;
}

Int unconstrained_degree(const GnepShape& shape) {
  const std::size_t N = shape.num_players();
  for (std::size_t i = 0; i < N; ++i)
    if (!shape.player(i).constraints.empty())
      throw PreconditionError("unconstrained degree: shape has constraints");

  std::vector<MultiDegree> hats;
  for (std::size_t i = 0; i < N; ++i) hats.push_back(hat_degree(shape.player(i).objective, i));

  // One multi-Bezout coefficient with each player's gradient degree repeated
  // n_i times ...
  std::vector<MultiDegree> repeated;
  for (std::size_t i = 0; i < N; ++i)
    repeated.insert(repeated.end(), shape.player(i).dim, hats[i]);
  Int bezout_form = multi_bezout_coeff(shape.nu(), repeated);

  // ... equals the pairing sum of per-player Segre coefficients.
  Int pairing_form = 0;
  for (const auto& tuple : nep_pairing_labels(shape.nu(), std::vector<int>(N, 0))) {
    Int term = 1;
    for (std::size_t i = 0; i < N && term != 0; ++i)
      term *= segre_coeff(tuple[i].complement(), {hats[i]});
    pairing_form += term;
  }
  if (bezout_form != pairing_form)
    throw std::logic_error("unconstrained degree: the two forms disagree (" + bezout_form.str() +
                           " vs " + pairing_form.str() + ")");
  return bezout_form;
}

}  // namespace gnepdeg
