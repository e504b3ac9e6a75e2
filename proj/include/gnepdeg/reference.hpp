#pragma once

#include <vector>

#include "gnepdeg/degrees.hpp"
#include "gnepdeg/genfun.hpp"

// Slow combinatorial definitions of the generating-function coefficients and
// exhaustive enumerations.  These are verification oracles used by the
// selftest command and the test suite; the production path is the truncated
// series in genfun.hpp.
namespace gnepdeg::reference {

// Sum over 0/1 matrices with row sums delta and every column sum 1 (one row
// pick per factor) of prod_j zs[j][row_j].
Int multi_bezout_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs);

// Sum over subsets S of the factors of the multi-Bezout term of S.
Int chern_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs);

// Sum over matrices with nonnegative integer entries, one column per factor,
// row sums delta, of prod_j multinomial(column_j) * zs[j]^{column_j}.
Int segre_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs);

// Product-filter enumerations of the pairing label tuples (order-insensitive
// contents; sorted ascending for comparison).
std::vector<std::vector<LabelVector>> gnep_pairing_labels(const MultiDegree& nu,
                                                          const std::vector<int>& ms);
std::vector<std::vector<LabelVector>> nep_pairing_labels(const MultiDegree& nu,
                                                         const std::vector<int>& ms);

// Filter of all per-player constraint subsets, sorted ascending.
std::vector<ActiveTuple> active_tuples(const GnepShape& shape);

}  // namespace gnepdeg::reference
