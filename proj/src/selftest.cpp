#include "gnepdeg/selftest.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "gnepdeg/degrees.hpp"
#include "gnepdeg/genfun.hpp"
#include "gnepdeg/instance_spec.hpp"
#include "gnepdeg/polynomial.hpp"
#include "gnepdeg/reference.hpp"

namespace gnepdeg {

namespace {

using MD = MultiDegree;

MD md(std::vector<int> v) { return MD(std::move(v)); }

Constraint eq(std::vector<int> d) { return {ConstraintKind::Equality, md(std::move(d))}; }
Constraint ineq(std::vector<int> d) { return {ConstraintKind::Inequality, md(std::move(d))}; }

GnepShape unconstrained_fixture() {
  return GnepShape({{3, md({2, 2}), {}}, {3, md({2, 2}), {}}});
}

GnepShape ball_fixture() {
  return GnepShape({{3, md({2, 1}), {ineq({2, 0})}}, {3, md({1, 2}), {ineq({0, 2})}}});
}

GradientDegrees ball_gradients() {
  GradientDegrees g;
  g.objective = {md({1, 1}), md({1, 1})};
  g.constraint = {{md({1, 0})}, {md({0, 1})}};
  return g;
}

GnepShape joint_linear_fixture() {
  return GnepShape({{3, md({2, 1}), {ineq({1, 1})}}, {3, md({1, 2}), {ineq({1, 1})}}});
}

GnepShape inner_product_fixture() {
  return GnepShape({{2, md({3, 2}), {eq({1, 1}), ineq({1, 0}), ineq({1, 0})}},
                    {2, md({2, 3}), {ineq({2, 2})}}});
}

GradientDegrees inner_product_gradients() {
  GradientDegrees g;
  g.objective = {md({2, 2}), md({2, 2})};
  g.constraint = {{md({0, 1}), md({0, 0}), md({0, 0})}, {md({0, 1})}};
  return g;
}

GnepShape quadratic_equality_fixture() {
  return GnepShape({{2, md({3, 2}), {eq({2, 2})}}, {2, md({2, 3}), {eq({2, 2})}}});
}

GnepShape three_player_fixture() {
  return GnepShape({{2, md({2, 1, 1}), {eq({1, 1, 0})}},
                    {2, md({1, 2, 1}), {eq({0, 1, 1})}},
                    {2, md({1, 1, 2}), {eq({1, 0, 1})}}});
}

GradientDegrees three_player_gradients() {
  GradientDegrees g;
  g.objective = {md({1, 1, 1}), md({1, 1, 1}), md({1, 1, 1})};
  g.constraint = {{md({0, 1, 0})}, {md({0, 0, 1})}, {md({1, 0, 0})}};
  return g;
}

struct Runner {
  std::vector<SelftestCheck> checks;

  void pass(const std::string& name) { checks.push_back({name, true, ""}); }
  void fail(const std::string& name, const std::string& detail) {
    checks.push_back({name, false, detail});
  }
  void expect_int(const std::string& name, const Int& got, const Int& want) {
    if (got == want)
      pass(name);
    else
      fail(name, "expected " + want.str() + ", got " + got.str());
  }
  void expect_breakdown(const std::string& name, const TotalDegree& got, const Int& want_total,
                        const std::vector<long long>& want_values) {
    if (got.total != want_total) {
      fail(name, "expected total " + want_total.str() + ", got " + got.total.str());
      return;
    }
    if (got.per_active.size() != want_values.size()) {
      fail(name, "expected " + std::to_string(want_values.size()) + " active tuples, got " +
                     std::to_string(got.per_active.size()));
      return;
    }
    for (std::size_t k = 0; k < want_values.size(); ++k) {
      if (got.per_active[k].second != want_values[k]) {
        fail(name, "tuple " + format_active_tuple(got.per_active[k].first) + ": expected " +
                       std::to_string(want_values[k]) + ", got " +
                       got.per_active[k].second.str());
        return;
      }
    }
    pass(name);
  }
};

void fixture_checks(Runner& r, bool inject_fault) {
  const Int uncons_expected = inject_fault ? 244 : 245;
  r.expect_int("unconstrained two-quadratics game: count by both closed forms",
               unconstrained_degree(unconstrained_fixture()), uncons_expected);
  r.expect_int("unconstrained two-quadratics game: empty-active-set pairing sum",
               gnep_degree_total(unconstrained_fixture()).total, 245);

  r.expect_breakdown("own-block quadratic game: sharpened count",
                     gnep_degree_total(ball_fixture(), ball_gradients()), 156,
                     {20, 30, 30, 76});
  r.expect_breakdown("own-block quadratic game: own-block formula",
                     nep_degree_total(ball_fixture()), 156, {20, 30, 30, 76});

  r.expect_breakdown("joint bilinear game: generic count",
                     gnep_degree_total(joint_linear_fixture()), 150, {20, 34, 34, 62});

  r.expect_breakdown("inner-product game: sharpened count",
                     gnep_degree_total(inner_product_fixture(), inner_product_gradients()), 190,
                     {60, 74, 12, 16, 12, 16});
  r.expect_int("inner-product game: generic count",
               gnep_degree_total(inner_product_fixture()).total, 230);

  r.expect_breakdown("biquadratic equality game: count",
                     gnep_degree_total(quadratic_equality_fixture()), 296, {296});

  r.expect_breakdown("three-player cyclic game: sharpened count",
                     gnep_degree_total(three_player_fixture(), three_player_gradients()), 74,
                     {74});
}

// Small deterministic stream for the identity samples.
struct Stream {
  std::uint64_t state;
  explicit Stream(std::uint64_t seed) : state(splitmix64(seed)) {}
  int next(int lo, int hi) {  // inclusive
    state = splitmix64(state);
    return lo + static_cast<int>(state % static_cast<std::uint64_t>(hi - lo + 1));
  }
  MD next_md(std::size_t n, int hi) {
    std::vector<int> v(n);
    for (auto& e : v) e = next(0, hi);
    return MD(std::move(v));
  }
};

void identity_checks(Runner& r, int depth) {
  const int rounds = 20 * depth;

  {  // series implementations against the combinatorial definitions
    Stream s(0xA11CE);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < rounds && ok; ++t) {
      const std::size_t n = static_cast<std::size_t>(s.next(1, 3));
      const int k = s.next(0, 4);
      MD delta = s.next_md(n, 4);
      while (delta.weight() > 6) delta = s.next_md(n, 4);
      std::vector<MD> zs;
      for (int j = 0; j < k; ++j) zs.push_back(s.next_md(n, 4));
      if (multi_bezout_coeff(delta, zs) != reference::multi_bezout_coeff(delta, zs) ||
          chern_coeff(delta, zs) != reference::chern_coeff(delta, zs) ||
          segre_coeff(delta, zs) != reference::segre_coeff(delta, zs)) {
        ok = false;
        detail = "mismatch at delta=" + delta.str() + " with " + std::to_string(k) + " factors";
      }
    }
    if (ok)
      r.pass("coefficient series match the combinatorial sums");
    else
      r.fail("coefficient series match the combinatorial sums", detail);
  }

  {  // sum over delta' + delta'' = delta of (-1)^{|delta''|} B_{delta'} S_{delta''} = [delta=0]
    Stream s(0xB0B);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < rounds && ok; ++t) {
      const std::size_t n = static_cast<std::size_t>(s.next(1, 3));
      MD delta = s.next_md(n, 3);
      if (delta.is_zero()) continue;
      const int k = s.next(1, 3);
      std::vector<MD> zs;
      for (int j = 0; j < k; ++j) zs.push_back(s.next_md(n, 3));
      Int sum = 0;
      for (int w = 0; w <= delta.weight(); ++w) {
        for (const LabelVector& part : labels(w, delta)) {
          const MD& d2 = part.entries();
          Int term = chern_coeff(sub(delta, d2), zs) * segre_coeff(d2, zs);
          sum += (d2.weight() % 2 == 0) ? term : -term;
        }
      }
      if (sum != 0) {
        ok = false;
        detail = "nonzero at delta=" + delta.str();
      }
    }
    if (ok)
      r.pass("alternating product of the dual series telescopes to zero");
    else
      r.fail("alternating product of the dual series telescopes to zero", detail);
  }

  {  // nep_segre_coeff equals segre_coeff on own-block arguments
    Stream s(0xCAFE);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < rounds && ok; ++t) {
      const std::size_t n = static_cast<std::size_t>(s.next(1, 3));
      const std::size_t player = static_cast<std::size_t>(s.next(0, static_cast<int>(n) - 1));
      MD delta = s.next_md(n, 3);
      MD z0 = s.next_md(n, 4);
      const int m = s.next(0, 3);
      std::vector<int> own;
      std::vector<MD> full{z0};
      for (int j = 0; j < m; ++j) {
        int c = s.next(0, 4);
        own.push_back(c);
        std::vector<int> v(n, 0);
        v[player] = c;
        full.push_back(md(std::move(v)));
      }
      if (nep_segre_coeff(player, delta, z0, own) != segre_coeff(delta, full)) {
        ok = false;
        detail = "mismatch at delta=" + delta.str() + ", player " + std::to_string(player + 1);
      }
    }
    if (ok)
      r.pass("own-block coefficient equals the reciprocal-series specialization");
    else
      r.fail("own-block coefficient equals the reciprocal-series specialization", detail);
  }
}

void enumeration_checks(Runner& r) {
  struct Case {
    MD nu;
    std::vector<int> ms;
  };
  const std::vector<Case> cases = {
      {md({3, 3}), {1, 1}}, {md({2, 2, 2}), {1, 0, 1}}, {md({4, 2}), {2, 1}},
      {md({3, 3}), {0, 0}}, {md({2, 2, 2, 2}), {1, 1, 0, 2}},
  };
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    auto got = gnep_pairing_labels(c.nu, c.ms);
    std::sort(got.begin(), got.end());
    if (got != reference::gnep_pairing_labels(c.nu, c.ms)) {
      ok = false;
      detail = "constrained pairing differs at nu=" + c.nu.str();
      break;
    }
    auto got_nep = nep_pairing_labels(c.nu, c.ms);
    std::sort(got_nep.begin(), got_nep.end());
    if (got_nep != reference::nep_pairing_labels(c.nu, c.ms)) {
      ok = false;
      detail = "own-block pairing differs at nu=" + c.nu.str();
      break;
    }
  }
  if (ok)
    r.pass("pairing label tuples match exhaustive enumeration");
  else
    r.fail("pairing label tuples match exhaustive enumeration", detail);

  // Active tuples: the two mixed fixtures plus an infeasible-equality shape.
  bool act_ok = true;
  std::string act_detail;
  for (const GnepShape& shape : {ball_fixture(), inner_product_fixture()}) {
    auto got = enumerate_active_tuples(shape);
    auto want = reference::active_tuples(shape);
    std::vector<ActiveTuple> sorted = got.tuples;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != want || got.equalities_exceed_dimension) {
      act_ok = false;
      act_detail = "admissible-set enumeration differs";
      break;
    }
  }
  {
    GnepShape crowded({{1, md({1, 1}), {eq({1, 1}), eq({1, 1})}}, {1, md({1, 1}), {}}});
    auto got = enumerate_active_tuples(crowded);
    if (!got.tuples.empty() || !got.equalities_exceed_dimension) {
      act_ok = false;
      act_detail = "over-constrained player should yield no admissible sets";
    }
  }
  if (act_ok)
    r.pass("active-set tuples match exhaustive enumeration");
  else
    r.fail("active-set tuples match exhaustive enumeration", act_detail);
}

}  // namespace

std::vector<SelftestCheck> run_selftest_checks(int depth, bool inject_fault) {
  Runner r;
  fixture_checks(r, inject_fault);
  if (depth >= 1) {
    identity_checks(r, depth);
    enumeration_checks(r);
  }
  return r.checks;
}

}  // namespace gnepdeg
