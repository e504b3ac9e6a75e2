#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gnepdeg/arith.hpp"
#include "gnepdeg/multidegree.hpp"

namespace gnepdeg {

// Power series in t_1..t_N with exact integer coefficients, truncated at a
// componentwise exponent cap.  Multiplication silently drops monomials whose
// exponent exceeds the cap in any component; that is sound here because every
// consumer only ever reads coefficients at or below the cap.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(MultiDegree cap);  // the zero series

  static TruncatedSeries constant(const MultiDegree& cap, const Int& c);
  // <z, t> = z_1 t_1 + ... + z_N t_N
  static TruncatedSeries linear(const MultiDegree& z, const MultiDegree& cap);
  // 1 + <z, t>
  static TruncatedSeries one_plus_linear(const MultiDegree& z, const MultiDegree& cap);
  // 1/(1 - <z, t>) = 1 + <z,t> + <z,t>^2 + ... up to total degree |cap|
  static TruncatedSeries geometric(const MultiDegree& z, const MultiDegree& cap);

  const MultiDegree& cap() const { return cap_; }
  Int coeff(const MultiDegree& e) const;  // zero when absent
  void add_term(const MultiDegree& e, const Int& c);

  TruncatedSeries mul(const TruncatedSeries& other) const;  // caps must agree
  TruncatedSeries plus(const TruncatedSeries& other) const;

  const std::map<MultiDegree, Int>& terms() const { return terms_; }

 private:
  MultiDegree cap_;
  std::map<MultiDegree, Int> terms_;  // exponent -> nonzero coefficient
};

enum class FactorMode { Linear, OnePlusLinear, Geometric };

struct SeriesFactor {
  FactorMode mode;
  MultiDegree z;
};

// Coefficient of t^delta in the product of the given factors (empty product
// is 1).  Every z must have the same length as delta.
Int series_coeff(const MultiDegree& delta, const std::vector<SeriesFactor>& factors);

// Coefficient of t^delta in prod_i <z_i, t>.  This is the multihomogeneous
// Bezout count of |zs| generic hypersurfaces of those multi-degrees when
// |delta| = |zs|, and zero whenever |delta| != |zs|.
Int multi_bezout_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs);

// Coefficient of t^delta in prod_i (1 + <z_i, t>) — a product of total Chern
// classes of line-bundle sums.
Int chern_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs);

// Coefficient of t^delta in prod_i 1/(1 - <z_i, t>) — the Segre-type dual of
// chern_coeff.
Int segre_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs);

// Own-block specialization of segre_coeff used on the NEP path: all list
// arguments after the first are supported on block `player` (0-based) with
// the given scalar degrees.  Equals
//   sum over eta_0+...+eta_m = delta[player] of
//     z0[player]^eta_0 * prod_j zs[j]^eta_j
//     * multinomial(eta_0, delta[q] for q != player)
//     * prod_{q != player} z0[q]^delta[q].
Int nep_segre_coeff(std::size_t player, const MultiDegree& delta, const MultiDegree& z0,
                    const std::vector<int>& zs);

}  // namespace gnepdeg
