#include "gnepdeg/genfun.hpp"

#include <stdexcept>

namespace gnepdeg {

TruncatedSeries::TruncatedSeries(MultiDegree cap) : cap_(std::move(cap)) {}

TruncatedSeries TruncatedSeries::constant(const MultiDegree& cap, const Int& c) {
  TruncatedSeries s(cap);
  s.add_term(MultiDegree::zero(cap.size()), c);
  return s;
}

TruncatedSeries TruncatedSeries::linear(const MultiDegree& z, const MultiDegree& cap) {
  if (z.size() != cap.size())
    throw std::invalid_argument("TruncatedSeries::linear: length mismatch");
  TruncatedSeries s(cap);
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k] != 0 && cap[k] >= 1) s.add_term(MultiDegree::unit(cap.size(), k), z[k]);
  }
  return s;
}

TruncatedSeries TruncatedSeries::one_plus_linear(const MultiDegree& z, const MultiDegree& cap) {
  return constant(cap, 1).plus(linear(z, cap));
}

TruncatedSeries TruncatedSeries::geometric(const MultiDegree& z, const MultiDegree& cap) {
  TruncatedSeries sum = constant(cap, 1);
  TruncatedSeries lin = linear(z, cap);
  TruncatedSeries power = constant(cap, 1);
  // Terms of total degree > |cap| can never contribute below the cap.
  for (int step = 1; step <= cap.weight(); ++step) {
    power = power.mul(lin);
    sum = sum.plus(power);
  }
  return sum;
}

Int TruncatedSeries::coeff(const MultiDegree& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void TruncatedSeries::add_term(const MultiDegree& e, const Int& c) {
  if (!leq(e, cap_)) return;
  Int& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const {
  if (!(cap_ == other.cap_)) throw std::invalid_argument("TruncatedSeries::mul: cap mismatch");
  TruncatedSeries out(cap_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      bool fits = true;
      std::vector<int> e(cap_.size());
      for (std::size_t k = 0; k < cap_.size(); ++k) {
        e[k] = ea[k] + eb[k];
        if (e[k] > cap_[k]) {
          fits = false;
          break;
        }
      }
      if (fits) out.add_term(MultiDegree(std::move(e)), ca * cb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::plus(const TruncatedSeries& other) const {
  if (!(cap_ == other.cap_)) throw std::invalid_argument("TruncatedSeries::plus: cap mismatch");
  TruncatedSeries out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

Int series_coeff(const MultiDegree& delta, const std::vector<SeriesFactor>& factors) {
  TruncatedSeries prod = TruncatedSeries::constant(delta, 1);
  for (const auto& f : factors) {
    if (f.z.size() != delta.size())
      throw std::invalid_argument("series_coeff: factor length mismatch");
    switch (f.mode) {
      case FactorMode::Linear:
        prod = prod.mul(TruncatedSeries::linear(f.z, delta));
        break;
      case FactorMode::OnePlusLinear:
        prod = prod.mul(TruncatedSeries::one_plus_linear(f.z, delta));
        break;
      case FactorMode::Geometric:
        prod = prod.mul(TruncatedSeries::geometric(f.z, delta));
        break;
    }
    if (prod.terms().empty()) break;
  }
  return prod.coeff(delta);
}

static std::vector<SeriesFactor> make_factors(FactorMode mode, const std::vector<MultiDegree>& zs) {
  std::vector<SeriesFactor> fs;
  fs.reserve(zs.size());
  for (const auto& z : zs) fs.push_back({mode, z});
  return fs;
}

Int multi_bezout_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs) {
  // The product of k linear forms is homogeneous of total degree k.
  if (delta.weight() != static_cast<int>(zs.size())) return 0;
  return series_coeff(delta, make_factors(FactorMode::Linear, zs));
}

Int chern_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs) {
  return series_coeff(delta, make_factors(FactorMode::OnePlusLinear, zs));
}

Int segre_coeff(const MultiDegree& delta, const std::vector<MultiDegree>& zs) {
  return series_coeff(delta, make_factors(FactorMode::Geometric, zs));
}

namespace {

// Sum over compositions (eta_0,...,eta_m) of `budget`, accumulated into `out`.
void nep_compositions(int budget, std::size_t slot, std::vector<int>& eta, const Int& z0_own,
                      const std::vector<int>& zs, const std::vector<int>& fixed_parts,
                      Int& out) {
  if (slot + 1 < eta.size()) {
    for (int v = 0; v <= budget; ++v) {
      eta[slot] = v;
      nep_compositions(budget - v, slot + 1, eta, z0_own, zs, fixed_parts, out);
    }
    return;
  }
  eta[slot] = budget;
  Int term = int_pow(z0_own, eta[0]);
  for (std::size_t j = 0; j < zs.size(); ++j) term *= int_pow(Int(zs[j]), eta[j + 1]);
  std::vector<int> parts = fixed_parts;
  parts.push_back(eta[0]);
  term *= multinomial(parts);
  out += term;
}

}  // namespace

Int nep_segre_coeff(std::size_t player, const MultiDegree& delta, const MultiDegree& z0,
                    const std::vector<int>& zs) {
  const std::size_t n = delta.size();
  if (player >= n) throw std::invalid_argument("nep_segre_coeff: player out of range");
  if (z0.size() != n) throw std::invalid_argument("nep_segre_coeff: z0 length mismatch");
  for (int v : zs)
    if (v < 0) throw std::invalid_argument("nep_segre_coeff: negative scalar degree");

  Int cross = 1;  // prod over the other blocks of z0[q]^delta[q]
  std::vector<int> fixed_parts;
  for (std::size_t q = 0; q < n; ++q) {
    if (q == player) continue;
    cross *= int_pow(Int(z0[q]), delta[q]);
    fixed_parts.push_back(delta[q]);
  }
  Int sum = 0;
  std::vector<int> eta(zs.size() + 1, 0);
  nep_compositions(delta[player], 0, eta, Int(z0[player]), zs, fixed_parts, sum);
  return cross * sum;
}

}  // namespace gnepdeg
