#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnepdeg/degrees.hpp"
#include "gnepdeg/polynomial.hpp"

namespace gnepdeg {

// A shape together with concrete polynomials for every slot.  The polynomial
// multi-degrees must equal the shape's declared ones.
class GnepInstance {
 public:
  GnepInstance(GnepShape shape, std::vector<IntPolynomial> objectives,
               std::vector<std::vector<IntPolynomial>> constraints);

  const GnepShape& shape() const { return shape_; }
  const IntPolynomial& objective(std::size_t i) const { return objectives_.at(i); }
  const IntPolynomial& constraint(std::size_t i, int j) const {
    return constraints_.at(i).at(static_cast<std::size_t>(j));
  }
  // Block sizes of the polynomial ring (one block per player).
  const std::vector<int>& ring_dims() const { return ring_dims_; }

 private:
  GnepShape shape_;
  std::vector<IntPolynomial> objectives_;
  std::vector<std::vector<IntPolynomial>> constraints_;
  std::vector<int> ring_dims_;
};

// Gradient degrees attained by the instance data (objective and every
// constraint), for sharpened counts.
GradientDegrees instance_gradient_degrees(const GnepInstance& instance);

// n_i x (m_i+1) matrix: column 0 is the block gradient of f_i, column j the
// block gradient of the j-th active constraint (ascending index order).
// Entry [k][c] is row k (coordinate) of column c.
std::vector<std::vector<IntPolynomial>> fj_jacobian(const GnepInstance& instance,
                                                    std::size_t player,
                                                    const std::vector<int>& active_set);

enum class Formulation { Minors, Lagrange };

struct BuildOptions {
  Formulation formulation = Formulation::Minors;
  // Lagrange only: replace the unit-multiplier chart lambda_{i,0} = 1 with a
  // random affine normalization sum_j c_{i,j} lambda_{i,j} = 1 over all
  // multipliers including lambda_{i,0}, with deterministic nonzero
  // coefficients drawn from this seed.
  std::optional<std::uint64_t> normalization_seed;
};

// Polynomial system whose solutions are the Fritz-John points with the given
// active set.
//
// Minors formulation: generators are the active constraints (players in
// order, ascending constraint index) followed, per player, by all
// (m_i+1)-minors of the Fritz-John jacobian, row subsets in lexicographic
// order; no minors when m_i = n_i.  Variables: the block variables.
//
// Lagrange formulation: active constraints as above, then per player the n_i
// stationarity equations df_i/dx_{i,k} - sum_j lambda_{i,j} dg_{i,j}/dx_{i,k}
// on the chart lambda_{i,0} = 1.  Variables: block variables then multiplier
// variables l<i>_<j>.  With a normalization seed, lambda_{i,0} becomes a
// variable (named l<i>_0) and one normalization equation per player is
// appended.
struct FritzJohnSystem {
  Formulation formulation = Formulation::Minors;
  ActiveTuple active;
  std::vector<int> player_dims;          // (n_1, ..., n_N)
  std::vector<int> ring_dims;            // block sizes incl. multiplier blocks
  std::vector<std::string> variables;    // names in ring order
  std::vector<IntPolynomial> generators; // over ring_dims

  friend bool operator==(const FritzJohnSystem&, const FritzJohnSystem&) = default;
};

FritzJohnSystem build_fritz_john(const GnepInstance& instance, const ActiveTuple& active,
                                 const BuildOptions& options = {});

// Macaulay2 script: ring declaration, ideal of the generators in order, then
// `dim I` and `degree I`.  ASCII with LF endings, byte-deterministic.
std::string export_cas(const FritzJohnSystem& system);

// Machine-readable JSON dump (variables, canonical generator text,
// formulation, active tuple); byte-deterministic, round-trips through
// import_fritz_john.
std::string export_json(const FritzJohnSystem& system);
FritzJohnSystem import_fritz_john(const std::string& json_text);

}  // namespace gnepdeg
