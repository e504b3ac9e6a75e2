#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gnepdeg/arith.hpp"
#include "gnepdeg/multidegree.hpp"

namespace gnepdeg {

// Variable x_{player, coord}, both indices 0-based in the API.  Textual form
// is 1-based: x<player+1>_<coord+1>.
struct BlockVar {
  int player = 0;
  int coord = 0;
  friend bool operator==(const BlockVar&, const BlockVar&) = default;
};

// Exact-coefficient polynomial over a fixed list of variable blocks.  Terms
// map a flat exponent vector to a nonzero coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial over no variables
  explicit IntPolynomial(std::vector<int> dims);  // zero polynomial

  static IntPolynomial constant(std::vector<int> dims, const Int& c);
  static IntPolynomial variable(std::vector<int> dims, BlockVar v);

  const std::vector<int>& dims() const { return dims_; }
  std::size_t num_vars() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  void add_term(const std::vector<int>& expo, const Int& c);

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial scaled(const Int& c) const;

  Int eval(const std::vector<Int>& point) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  std::vector<int> dims_;
  std::map<std::vector<int>, Int> terms_;
};

int flat_index(const std::vector<int>& dims, BlockVar v);

// "x1_1", "x1_2", ..., one name per flat variable index.
std::vector<std::string> default_var_names(const std::vector<int>& dims);

// Grammar: signed sum of terms; a term is an optional nonnegative integer
// coefficient and an optional '*'-separated list of variable powers
// <name>[^<e>]; between the coefficient and the first variable the '*' may be
// omitted.  Whitespace is insignificant.  Example: "3x1_1^2*x2_1 - 2".
// Errors carry the character position.  `names` overrides the default
// x<i>_<k> table (used for rings with multiplier variables).
IntPolynomial parse_polynomial(const std::string& text, const std::vector<int>& dims,
                               const std::map<std::string, int>* names = nullptr);

// Canonical form: terms in descending graded-lexicographic order, exact
// inverse of parse_polynomial.  The zero polynomial prints as "0".
std::string format_polynomial(const IntPolynomial& p,
                              const std::vector<std::string>* names = nullptr);

IntPolynomial partial(const IntPolynomial& p, BlockVar v);
IntPolynomial partial_flat(const IntPolynomial& p, int var);

// Componentwise maximum over terms of the per-block total exponents.
// Throws PreconditionError on the zero polynomial, which has no multi-degree.
MultiDegree multidegree(const IntPolynomial& p);

// Multi-degree actually attained by the block-`player` gradient of p: the
// componentwise max of multidegree(dp/dx_{player,k}) over the block, zero
// partials contributing nothing.  The zero vector when the whole gradient
// vanishes.
MultiDegree gradient_multidegree(const IntPolynomial& p, std::size_t player);

// All exponent vectors whose block-k total degree is at most d[k], every
// block; the list order (block-major lexicographic) is the monomial index
// used by random_generic's coefficient stream.
std::vector<std::vector<int>> box_degree_monomials(const std::vector<int>& dims,
                                                   const MultiDegree& d);

// Dense polynomial with multi-degree exactly d: every box monomial gets a
// coefficient drawn uniformly from [-coeff_bound, coeff_bound] by a
// counter-based deterministic stream keyed on (seed, monomial index); the
// corner monomial prod_k x_{k,1}^{d_k} is redrawn until nonzero so every
// block attains its degree.
IntPolynomial random_generic(const std::vector<int>& dims, const MultiDegree& d,
                             std::uint64_t seed, int coeff_bound = 9);

// Counter-based hash behind random_generic; exposed for reuse by other
// deterministic draws (normalization coefficients, per-slot seeds).
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace gnepdeg
