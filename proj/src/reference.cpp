#include "gnepdeg/reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace gnepdeg::reference {

namespace {

void check_lengths(const MultiDegree& delta, const std::vector<MultiDegree>& zs) {
  for (const auto& z : zs)
    if (z.size() != delta.size())
      throw std::invalid_argument("reference coefficient: factor length mismatch");
}

void bezout_rec(const MultiDegree& delta, const std::vector<MultiDegree>& zs, std::size_t col,
                std::vector<int>& row_count, Int term, Int& out) {
  if (col == zs.size()) {
    for (std::size_t r = 0; r < delta.size(); ++r)
      if (row_count[r] != delta[r]) return;
    out += term;
    return;
  }
  for (std::size_t r = 0; r < delta.size(); ++r) {
    if (row_count[r] >= delta[r]) continue;  // row already full
    if (zs[col][r] == 0) continue;
    row_count[r] += 1;
    bezout_rec(delta, zs, col + 1, row_count, term * zs[col][r], out);
    row_count[r] -= 1;
  }
}

// Columns of a row-sum-bounded nonnegative matrix, last column forced.
void segre_rec(const MultiDegree& remaining, const std::vector<MultiDegree>& zs, std::size_t col,
               Int term, Int& out) {
  auto column_term = [&](const MultiDegree& beta, const MultiDegree& z) -> Int {
    Int t = multinomial(beta.entries());
    for (std::size_t r = 0; r < beta.size(); ++r) t *= int_pow(Int(z[r]), beta[r]);
    return t;
  };
  if (col + 1 == zs.size()) {
    out += term * column_term(remaining, zs[col]);
    return;
  }
  for (const LabelVector& b : [&] {
         std::vector<LabelVector> all;
         for (int w = 0; w <= remaining.weight(); ++w)
           for (const LabelVector& l : labels(w, remaining)) all.push_back(l);
         return all;
       }()) {
    const MultiDegree& beta = b.entries();
    segre_rec(sub(remaining, beta), zs, col + 1, term * column_term(beta, zs[col]), out);
  }
}

}  // namespace

Int multi_bezout_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs) {
  check_lengths(delta, zs);
  if (delta.weight() != static_cast<int>(zs.size())) return 0;
  if (zs.empty()) return 1;
  std::vector<int> row_count(delta.size(), 0);
  Int out = 0;
  bezout_rec(delta, zs, 0, row_count, 1, out);
  return out;
}

Int chern_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs) {
  check_lengths(delta, zs);
  Int out = 0;
  const std::size_t s = zs.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
    std::vector<MultiDegree> subset;
    for (std::size_t j = 0; j < s; ++j)
      if (mask & (std::size_t(1) << j)) subset.push_back(zs[j]);
    out += reference::multi_bezout_coeff(delta, subset);
  }
  return out;
}

Int segre_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs) {
  check_lengths(delta, zs);
  if (zs.empty()) return delta.is_zero() ? 1 : 0;
  Int out = 0;
  segre_rec(delta, zs, 0, 1, out);
  return out;
}

namespace {

void product_filter(const std::vector<std::vector<LabelVector>>& lists, const MultiDegree& target,
                    std::size_t slot, std::vector<LabelVector>& cur, MultiDegree& acc,
                    std::vector<std::vector<LabelVector>>& out) {
  if (slot == lists.size()) {
    if (acc == target) out.push_back(cur);
    return;
  }
  for (const LabelVector& l : lists[slot]) {
    cur.push_back(l);
    MultiDegree saved = acc;
    acc = add(acc, l.entries());
    product_filter(lists, target, slot + 1, cur, acc, out);
    acc = saved;
    cur.pop_back();
  }
}

std::vector<std::vector<LabelVector>> filter_tuples(const std::vector<int>& weights,
                                                    const MultiDegree& nu,
                                                    const MultiDegree& target) {
  std::vector<std::vector<LabelVector>> lists;
  for (int w : weights) lists.push_back(labels(w, nu));
  std::vector<std::vector<LabelVector>> out;
  std::vector<LabelVector> cur;
  MultiDegree acc = MultiDegree::zero(nu.size());
  product_filter(lists, target, 0, cur, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<LabelVector>> gnep_pairing_labels(const MultiDegree& nu,
                                                          const std::vector<int>& ms) {
  const int n = nu.weight();
  int m = 0;
  for (int mi : ms) m += mi;
  std::vector<int> weights{n - m};
  for (std::size_t i = 0; i < ms.size(); ++i) weights.push_back(n - nu[i] + ms[i]);
  return filter_tuples(weights, nu, scale(nu, static_cast<int>(nu.size())));
}

std::vector<std::vector<LabelVector>> nep_pairing_labels(const MultiDegree& nu,
                                                         const std::vector<int>& ms) {
  const int n = nu.weight();
  std::vector<int> weights;
  for (std::size_t i = 0; i < ms.size(); ++i) weights.push_back(n - nu[i] + ms[i]);
  MultiDegree target = add(scale(nu, static_cast<int>(nu.size()) - 1), MultiDegree(ms));
  return filter_tuples(weights, nu, target);
}

std::vector<ActiveTuple> active_tuples(const GnepShape& shape) {
  const std::size_t N = shape.num_players();
  std::vector<std::vector<std::vector<int>>> per_player(N);
  for (std::size_t i = 0; i < N; ++i) {
    const auto& cons = shape.player(i).constraints;
    const std::size_t c = cons.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << c); ++mask) {
      std::vector<int> set;
      bool all_eq_in = true;
      for (std::size_t j = 0; j < c; ++j) {
        const bool in = mask & (std::size_t(1) << j);
        if (in) set.push_back(static_cast<int>(j));
        if (!in && cons[j].kind == ConstraintKind::Equality) all_eq_in = false;
      }
      if (!all_eq_in) continue;
      if (static_cast<int>(set.size()) > shape.player(i).dim) continue;
      per_player[i].push_back(std::move(set));
    }
    if (per_player[i].empty()) return {};
  }
  std::vector<ActiveTuple> out;
  std::vector<std::vector<int>> cur(N);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == N) {
      out.emplace_back(cur);
      return;
    }
    for (const auto& s : per_player[i]) {
      cur[i] = s;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gnepdeg::reference
