#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gnepdeg/arith.hpp"
#include "gnepdeg/multidegree.hpp"

namespace gnepdeg {

enum class ConstraintKind { Equality, Inequality };

struct Constraint {
  ConstraintKind kind;
  MultiDegree degree;  // nonzero tuple of length N
};

// Degree-level description of a game: block dimensions plus the objective and
// constraint multi-degrees of every player.  No coefficients involved.
class GnepShape {
 public:
  struct Player {
    int dim = 0;                         // n_i >= 1
    MultiDegree objective;               // multi-degree of f_i, length N
    std::vector<Constraint> constraints; // g_{i,1}, g_{i,2}, ... (0-based here)
  };

  explicit GnepShape(std::vector<Player> players);

  std::size_t num_players() const { return players_.size(); }
  const Player& player(std::size_t i) const { return players_.at(i); }
  const std::vector<Player>& players() const { return players_; }

  // (n_1, ..., n_N): the cap every label in this game lives under.
  const MultiDegree& nu() const { return nu_; }
  int total_dim() const { return nu_.weight(); }

  // True when every constraint involves only the owner's block:
  // degree = c * e_i with c >= 1.
  bool is_nep_shaped() const;

 private:
  std::vector<Player> players_;
  MultiDegree nu_;
};

// Per-player strictly increasing lists of active constraint indices (0-based).
class ActiveTuple {
 public:
  ActiveTuple() = default;
  explicit ActiveTuple(std::vector<std::vector<int>> sets);  // sorts each list

  std::size_t num_players() const { return sets_.size(); }
  const std::vector<int>& set(std::size_t i) const { return sets_.at(i); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  std::vector<int> sizes() const;  // (m_1, ..., m_N)

  friend bool operator==(const ActiveTuple& a, const ActiveTuple& b) = default;
  friend bool operator<(const ActiveTuple& a, const ActiveTuple& b);

 private:
  std::vector<std::vector<int>> sets_;
};

// Dense map labels(dimension, cap) -> exact count.  Zero entries are stored
// so serialization and equality are deterministic.
class DegreeArray {
 public:
  DegreeArray(int dimension, MultiDegree cap);  // all entries zero

  int dimension() const { return dimension_; }
  const MultiDegree& cap() const { return cap_; }
  const std::map<LabelVector, Int>& entries() const { return entries_; }

  Int& at(const MultiDegree& label);
  const Int& at(const MultiDegree& label) const;

  friend bool operator==(const DegreeArray& a, const DegreeArray& b) = default;

 private:
  int dimension_;
  MultiDegree cap_;
  std::map<LabelVector, Int> entries_;
};

struct ActiveTupleEnumeration {
  std::vector<ActiveTuple> tuples;  // lexicographic by per-player index sets
  // Set when some player's equality constraints alone outnumber that
  // player's variables, which leaves no admissible active set at all.
  bool equalities_exceed_dimension = false;
};

// All admissible active tuples: every equality active, any subset of the
// inequalities, at most n_i constraints active per player.
ActiveTupleEnumeration enumerate_active_tuples(const GnepShape& shape);

// Index set of the constrained degree-pairing sum: all (N+1)-tuples
// (l0, l1, ..., lN) with |l0| = n - sum(ms), |li| = n - n_i + m_i, every
// label <= nu, summing to N*nu.  Requires 0 <= m_i <= n_i.
std::vector<std::vector<LabelVector>> gnep_pairing_labels(const MultiDegree& nu,
                                                          const std::vector<int>& ms);

// Index set of the own-block (NEP) pairing sum: N-tuples (l1, ..., lN) with
// |li| = n - n_i + m_i, every label <= nu, summing to (N-1)*nu + m.
std::vector<std::vector<LabelVector>> nep_pairing_labels(const MultiDegree& nu,
                                                         const std::vector<int>& ms);

// Degree array of k generic hypersurfaces of the given multi-degrees meeting
// transversally: dimension n - k, entry at l = multi_bezout_coeff(nu - l, ds).
DegreeArray complete_intersection_degree(const MultiDegree& nu,
                                         const std::vector<MultiDegree>& ds);

// Degree array of a generic transversal intersection X ∩ Y from the arrays of
// the factors.  Requires dim X + dim Y >= n and matching caps.
DegreeArray intersection_degree(const MultiDegree& nu, const DegreeArray& X,
                                const DegreeArray& Y);

// Degree array of the locus where a generic rows x cols matrix, whose column
// c has entries of multi-degree col_degs[c], drops to rank <= rank_bound.
// Supported: rank_bound = rows-1 with rows <= cols (chern_coeff branch) and
// rank_bound = cols-1 with rows > cols (segre_coeff branch).
DegreeArray determinantal_degree(const MultiDegree& nu, int rows, int cols,
                                 const std::vector<MultiDegree>& col_degs, int rank_bound);

// Multi-degrees of the gradient blocks actually attained by the data; the
// generic default is hat_degree everywhere, and callers may substitute the
// (smaller) degrees of special data to sharpen the count into a bound.
struct GradientDegrees {
  std::vector<MultiDegree> objective;                // [i] = degree of grad_i f_i
  std::vector<std::vector<MultiDegree>> constraint;  // [i][j] = degree of grad_i g_{i,j}
};

GradientDegrees generic_gradient_degrees(const GnepShape& shape);

// Count of complex Fritz-John points with active set exactly `active`, for
// generic data of the shape's multi-degrees (or the sharper bound when
// gradient-degree overrides are supplied).
Int gnep_degree_fixed(const GnepShape& shape, const ActiveTuple& active);
Int gnep_degree_fixed(const GnepShape& shape, const ActiveTuple& active,
                      const GradientDegrees& grads);

struct TotalDegree {
  Int total;
  std::vector<std::pair<ActiveTuple, Int>> per_active;  // in enumeration order
  bool equalities_exceed_dimension = false;
};

// Sum over all admissible active tuples.
TotalDegree gnep_degree_total(const GnepShape& shape);
TotalDegree gnep_degree_total(const GnepShape& shape, const GradientDegrees& grads);

// Own-block specialization; requires an NEP-shaped GnepShape.
Int nep_degree_fixed(const GnepShape& shape, const ActiveTuple& active);
TotalDegree nep_degree_total(const GnepShape& shape);

// Count for a game without constraints, computed both as one multi-Bezout
// coefficient and as the pairing sum of Segre coefficients; the two forms are
// cross-checked before returning.
Int unconstrained_degree(const GnepShape& shape);

}  // namespace gnepdeg
