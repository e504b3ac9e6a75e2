#include "gnepdeg/multidegree.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gnepdeg {

MultiDegree::MultiDegree(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("MultiDegree: negative entry");
  }
}

MultiDegree MultiDegree::zero(std::size_t n) { return MultiDegree(std::vector<int>(n, 0)); }

MultiDegree MultiDegree::unit(std::size_t n, std::size_t pos) {
  if (pos >= n) throw std::invalid_argument("MultiDegree::unit: position out of range");
  std::vector<int> v(n, 0);
  v[pos] = 1;
  return MultiDegree(std::move(v));
}

int MultiDegree::weight() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool MultiDegree::is_zero() const {
  for (int e : entries_)
    if (e != 0) return false;
  return true;
}

std::string MultiDegree::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) os << ',';
    os << entries_[k];
  }
  os << ')';
  return os.str();
}

bool operator<(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.entries_ < b.entries_;
}

static void check_same_size(const MultiDegree& a, const MultiDegree& b, const char* op) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(op) + ": length mismatch " + a.str() + " vs " + b.str());
}

MultiDegree add(const MultiDegree& a, const MultiDegree& b) {
  check_same_size(a, b, "add");
  std::vector<int> v(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) v[k] = a[k] + b[k];
  return MultiDegree(std::move(v));
}

MultiDegree sub(const MultiDegree& a, const MultiDegree& b) {
  check_same_size(a, b, "sub");
  std::vector<int> v(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    v[k] = a[k] - b[k];
    if (v[k] < 0)
      throw std::invalid_argument("sub: negative result in " + a.str() + " - " + b.str());
  }
  return MultiDegree(std::move(v));
}

bool leq(const MultiDegree& a, const MultiDegree& b) {
  check_same_size(a, b, "leq");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

MultiDegree componentwise_max(const MultiDegree& a, const MultiDegree& b) {
  check_same_size(a, b, "componentwise_max");
  std::vector<int> v(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) v[k] = std::max(a[k], b[k]);
  return MultiDegree(std::move(v));
}

MultiDegree scale(const MultiDegree& a, int k) {
  if (k < 0) throw std::invalid_argument("scale: negative factor");
  std::vector<int> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] * k;
  return MultiDegree(std::move(v));
}

MultiDegree hat_degree(const MultiDegree& d, std::size_t player) {
  if (player >= d.size()) throw std::invalid_argument("hat_degree: player out of range");
  std::vector<int> v = d.entries();
  v[player] = std::max(v[player] - 1, 0);
  return MultiDegree(std::move(v));
}

LabelVector::LabelVector(MultiDegree entries, MultiDegree cap)
    : entries_(std::move(entries)), cap_(std::move(cap)) {
  if (!leq(entries_, cap_))
    throw std::invalid_argument("LabelVector: entries " + entries_.str() + " exceed cap " + cap_.str());
}

MultiDegree LabelVector::complement() const { return sub(cap_, entries_); }

bool operator<(const LabelVector& a, const LabelVector& b) {
  if (a.cap_ == b.cap_) return a.entries_ < b.entries_;
  return a.cap_ < b.cap_;
}

static void labels_rec(int s, const MultiDegree& nu, std::size_t k, std::vector<int>& cur,
                       std::vector<LabelVector>& out) {
  if (k == nu.size()) {
    if (s == 0) out.emplace_back(MultiDegree(cur), nu);
    return;
  }
  // Remaining positions can absorb at most this much weight.
  int tail_room = 0;
  for (std::size_t j = k + 1; j < nu.size(); ++j) tail_room += nu[j];
  for (int e = 0; e <= std::min(s, nu[k]); ++e) {
    if (s - e > tail_room) continue;
    cur[k] = e;
    labels_rec(s - e, nu, k + 1, cur, out);
  }
  cur[k] = 0;
}

std::vector<LabelVector> labels(int s, const MultiDegree& nu) {
  std::vector<LabelVector> out;
  if (s < 0 || s > nu.weight()) return out;
  std::vector<int> cur(nu.size(), 0);
  labels_rec(s, nu, 0, cur, out);
  return out;
}

}  // namespace gnepdeg
