#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gnepdeg {

// Tuple of nonnegative integers of fixed length N (one entry per variable
// block).  Values of different length never mix: the arithmetic helpers
// throw on length mismatch.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> entries);

  static MultiDegree zero(std::size_t n);
  static MultiDegree unit(std::size_t n, std::size_t pos);  // pos 0-based

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<int>& entries() const { return entries_; }

  // Sum of entries.
  int weight() const;

  bool is_zero() const;

  std::string str() const;  // "(2,1,0)" — diagnostics only

  friend bool operator==(const MultiDegree& a, const MultiDegree& b) = default;
  // Length first, then lexicographic; a total order usable as a map key.
  friend bool operator<(const MultiDegree& a, const MultiDegree& b);

 private:
  std::vector<int> entries_;
};

MultiDegree add(const MultiDegree& a, const MultiDegree& b);
// Componentwise difference; throws std::invalid_argument if any entry would
// go negative.
MultiDegree sub(const MultiDegree& a, const MultiDegree& b);
// Componentwise a <= b.
bool leq(const MultiDegree& a, const MultiDegree& b);
MultiDegree componentwise_max(const MultiDegree& a, const MultiDegree& b);
MultiDegree scale(const MultiDegree& a, int k);  // k >= 0

// Degree of the gradient block of a generic polynomial: copy of d with entry
// `player` (0-based) lowered by one, clamped at zero.
MultiDegree hat_degree(const MultiDegree& d, std::size_t player);

// A label is a tuple bounded above by the ambient cap (componentwise).  The
// cap travels with the value so consumers can recover delta = cap - entries.
class LabelVector {
 public:
  LabelVector(MultiDegree entries, MultiDegree cap);

  const MultiDegree& entries() const { return entries_; }
  const MultiDegree& cap() const { return cap_; }
  MultiDegree complement() const;  // cap - entries

  friend bool operator==(const LabelVector& a, const LabelVector& b) = default;
  friend bool operator<(const LabelVector& a, const LabelVector& b);

 private:
  MultiDegree entries_;
  MultiDegree cap_;
};

// All l with |l| = s and l <= nu, in lexicographic order of the entries.
// Empty when s < 0 or s > |nu|.
std::vector<LabelVector> labels(int s, const MultiDegree& nu);

}  // namespace gnepdeg
