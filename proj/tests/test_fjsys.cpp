#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gnepdeg/arith.hpp"
#include "gnepdeg/degrees.hpp"
#include "gnepdeg/errors.hpp"
#include "gnepdeg/fjsys.hpp"
#include "gnepdeg/polynomial.hpp"

using namespace gnepdeg;

namespace {

MultiDegree md(std::vector<int> v) { return MultiDegree(std::move(v)); }
Constraint eq(std::vector<int> d) { return {ConstraintKind::Equality, md(std::move(d))}; }
Constraint ineq(std::vector<int> d) { return {ConstraintKind::Inequality, md(std::move(d))}; }
ActiveTuple at(std::vector<std::vector<int>> sets) { return ActiveTuple(std::move(sets)); }

// Random concrete data for a shape, deterministic in `seed`.
GnepInstance fill(const GnepShape& shape, std::uint64_t seed) {
  std::vector<int> dims;
  for (const auto& p : shape.players()) dims.push_back(p.dim);
  std::vector<IntPolynomial> objectives;
  std::vector<std::vector<IntPolynomial>> constraints;
  std::uint64_t k = 0;
  for (const auto& p : shape.players()) {
    objectives.push_back(random_generic(dims, p.objective, splitmix64(seed + ++k)));
    std::vector<IntPolynomial> cs;
    for (const auto& c : p.constraints)
      cs.push_back(random_generic(dims, c.degree, splitmix64(seed + ++k)));
    constraints.push_back(std::move(cs));
  }
  return GnepInstance(shape, std::move(objectives), std::move(constraints));
}

GnepInstance ball_instance() {
  const std::vector<int> dims = {3, 3};
  const GnepShape shape(
      {{3, md({2, 1}), {ineq({2, 0})}}, {3, md({1, 2}), {ineq({0, 2})}}});
  const auto f1 = parse_polynomial(
      "2x1_2 - 2x1_1 + 5x1_3 + 2x1_1*x1_3 + 5x1_2*x1_3 - 3x1_1*x2_1 - 2x1_2*x2_1 - 3x1_1*x2_3"
      " - 2x1_2*x2_2 - x1_3*x2_1 + 4x1_2*x2_3 + 4x1_3*x2_3 + 4x1_1^2*x2_1 + 2x1_1^2*x2_2"
      " - x1_2^2*x2_1 + 4x1_2^2*x2_3 + 2x1_3^2*x2_2 + 3x1_3^2*x2_3 - x1_1^2 - x1_3^2"
      " + 4x1_1*x1_2*x2_1 + 2x1_1*x1_2*x2_2 - x1_1*x1_3*x2_1 - x1_1*x1_2*x2_3"
      " - 3x1_2*x1_3*x2_1 - x1_1*x1_3*x2_3 - x1_2*x1_3*x2_2 + 2x1_2*x1_3*x2_3",
      dims);
  const auto f2 = parse_polynomial(
      "2x1_1*x2_1 + 2x1_1*x2_2 + 5x1_2*x2_1 - 3x1_2*x2_2 - 4x1_3*x2_1 + 3x1_3*x2_2"
      " - 6x1_3*x2_3 - x2_1*x2_2 - x1_1*x2_1^2 + 3x1_1*x2_3^2 + 2x1_2*x2_2^2 + 2x1_2*x2_3^2"
      " + 4x1_3*x2_3^2 + 2x2_2^2 + 4x1_2*x2_1*x2_2 + 2x1_1*x2_2*x2_3 - 3x1_3*x2_1*x2_2"
      " + 2x1_2*x2_2*x2_3 + 3x1_3*x2_1*x2_3 - x1_3*x2_2*x2_3",
      dims);
  const auto g1 = parse_polynomial("1 - x1_1^2 - x1_2^2 - x1_3^2", dims);
  const auto g2 = parse_polynomial("1 - x2_1^2 - x2_2^2 - x2_3^2", dims);
  return GnepInstance(shape, {f1, f2}, {{g1}, {g2}});
}

long long minors_generator_count(const GnepShape& shape, const ActiveTuple& active) {
  long long want = 0;
  for (std::size_t i = 0; i < shape.num_players(); ++i) {
    const long long m = static_cast<long long>(active.set(i).size());
    want += m;
    if (m < shape.player(i).dim)
      want += binomial(shape.player(i).dim, m + 1).convert_to<long long>();
  }
  return want;
}

}  // namespace

TEST_CASE("instance validation rejects degree mismatches") {
  const GnepShape shape({{1, md({2, 1}), {}}, {1, md({1, 1}), {}}});
  const std::vector<int> dims = {1, 1};
  const auto good1 = parse_polynomial("x1_1^2*x2_1", dims);
  const auto good2 = parse_polynomial("x1_1*x2_1", dims);
  CHECK_NOTHROW(GnepInstance(shape, {good1, good2}, {{}, {}}));
  CHECK_THROWS_AS(GnepInstance(shape, {good2, good2}, {{}, {}}), SpecError);
  CHECK_THROWS_AS(GnepInstance(shape, {good1}, {{}, {}}), SpecError);
}

TEST_CASE("attained gradient degrees of the ball instance") {
  const GnepInstance inst = ball_instance();
  const GradientDegrees grads = instance_gradient_degrees(inst);
  CHECK(grads.objective[0] == md({1, 1}));
  CHECK(grads.objective[1] == md({1, 1}));
  CHECK(grads.constraint[0][0] == md({1, 0}));
  CHECK(grads.constraint[1][0] == md({0, 1}));
}

TEST_CASE("jacobian layout: gradient column then active constraint columns") {
  const GnepInstance inst = ball_instance();
  const auto jac = fj_jacobian(inst, 0, {0});
  REQUIRE(jac.size() == 3);
  REQUIRE(jac[0].size() == 2);
  for (int k = 0; k < 3; ++k) {
    CHECK(jac[k][0] == partial(inst.objective(0), {0, k}));
    CHECK(jac[k][1] == partial(inst.constraint(0, 0), {0, k}));
  }
  const auto empty_active = fj_jacobian(inst, 1, {});
  REQUIRE(empty_active.size() == 3);
  CHECK(empty_active[0].size() == 1);
}

TEST_CASE("minors system counting contract over small shapes") {
  std::uint64_t seed = 1;
  for (int n1 = 1; n1 <= 4; ++n1) {
    for (int n2 = 1; n2 <= 3; ++n2) {
      GnepShape shape({{n1, md({2, 1}), {ineq({1, 1}), ineq({1, 0})}},
                       {n2, md({1, 2}), {ineq({1, 1})}}});
      for (const ActiveTuple& tuple : enumerate_active_tuples(shape).tuples) {
        const GnepInstance inst = fill(shape, seed++);
        const FritzJohnSystem sys = build_fritz_john(inst, tuple, {Formulation::Minors, {}});
        CHECK(static_cast<long long>(sys.generators.size()) ==
              minors_generator_count(shape, tuple));
        CHECK(sys.variables.size() == static_cast<std::size_t>(n1 + n2));
        CHECK(sys.ring_dims == std::vector<int>{n1, n2});
      }
    }
  }
}

TEST_CASE("lagrange system counting contract over small shapes") {
  std::uint64_t seed = 100;
  for (int n1 = 1; n1 <= 3; ++n1) {
    GnepShape shape({{n1, md({2, 2}), {ineq({1, 1}), ineq({2, 0})}},
                     {2, md({1, 2}), {eq({1, 1})}}});
    for (const ActiveTuple& tuple : enumerate_active_tuples(shape).tuples) {
      const GnepInstance inst = fill(shape, seed++);
      const int n = n1 + 2;
      int m_total = 0;
      for (std::size_t i = 0; i < tuple.num_players(); ++i)
        m_total += static_cast<int>(tuple.set(i).size());

      const FritzJohnSystem chart = build_fritz_john(inst, tuple, {Formulation::Lagrange, {}});
      CHECK(static_cast<int>(chart.generators.size()) == m_total + n);
      CHECK(static_cast<int>(chart.variables.size()) == n + m_total);
      REQUIRE(chart.ring_dims.size() == 4);
      CHECK(chart.ring_dims[2] == static_cast<int>(tuple.set(0).size()));
      CHECK(chart.ring_dims[3] == static_cast<int>(tuple.set(1).size()));

      const FritzJohnSystem norm =
          build_fritz_john(inst, tuple, {Formulation::Lagrange, 77});
      CHECK(static_cast<int>(norm.generators.size()) == m_total + n + 2);
      CHECK(static_cast<int>(norm.variables.size()) == n + m_total + 2);
    }
  }
}

TEST_CASE("multiplier variables are named per player and index") {
  const GnepInstance inst = ball_instance();
  const FritzJohnSystem chart =
      build_fritz_john(inst, at({{0}, {0}}), {Formulation::Lagrange, {}});
  REQUIRE(chart.variables.size() == 8);
  CHECK(chart.variables[6] == "l1_1");
  CHECK(chart.variables[7] == "l2_1");
  const FritzJohnSystem norm =
      build_fritz_john(inst, at({{0}, {0}}), {Formulation::Lagrange, 5});
  REQUIRE(norm.variables.size() == 10);
  CHECK(norm.variables[6] == "l1_0");
  CHECK(norm.variables[7] == "l1_1");
  CHECK(norm.variables[8] == "l2_0");
  CHECK(norm.variables[9] == "l2_1");
}

TEST_CASE("minors are rejected when a player has more active constraints than variables") {
  const GnepShape shape({{1, md({2, 1}), {ineq({1, 1}), ineq({1, 0})}}, {1, md({1, 2}), {}}});
  const GnepInstance inst = fill(shape, 9);
  CHECK_THROWS_AS(build_fritz_john(inst, at({{0, 1}, {}}), {Formulation::Minors, {}}),
                  PreconditionError);
  // the lagrange formulation still builds
  CHECK_NOTHROW(build_fritz_john(inst, at({{0, 1}, {}}), {Formulation::Lagrange, {}}));
}

TEST_CASE("minor generators respect the column-degree bound") {
  std::uint64_t seed = 500;
  const GnepShape shape(
      {{3, md({2, 2}), {ineq({1, 1})}}, {2, md({2, 2}), {ineq({0, 2}), ineq({1, 1})}}});
  for (int round = 0; round < 5; ++round) {
    const GnepInstance inst = fill(shape, seed++);
    const GradientDegrees grads = instance_gradient_degrees(inst);
    for (const ActiveTuple& tuple : enumerate_active_tuples(shape).tuples) {
      const FritzJohnSystem sys = build_fritz_john(inst, tuple, {Formulation::Minors, {}});
      std::size_t g = 0;
      for (std::size_t i = 0; i < shape.num_players(); ++i) g += tuple.set(i).size();
      for (std::size_t i = 0; i < shape.num_players(); ++i) {
        const std::size_t m = tuple.set(i).size();
        if (static_cast<int>(m) == shape.player(i).dim) continue;
        MultiDegree bound = grads.objective[i];
        for (int j : tuple.set(i)) bound = add(bound, grads.constraint[i][j]);
        const Int rows = binomial(shape.player(i).dim, static_cast<long long>(m) + 1);
        for (Int r = 0; r < rows; ++r, ++g) {
          REQUIRE(g < sys.generators.size());
          if (sys.generators[g].is_zero()) continue;
          CHECK(leq(multidegree(sys.generators[g]), bound));
        }
      }
      CHECK(g == sys.generators.size());
    }
  }
}

TEST_CASE("exports are byte-stable and round-trip") {
  const GnepInstance inst = ball_instance();
  for (const auto& tuple : {at({{}, {}}), at({{0}, {}}), at({{0}, {0}})}) {
    for (const Formulation f : {Formulation::Minors, Formulation::Lagrange}) {
      const FritzJohnSystem sys = build_fritz_john(inst, tuple, {f, {}});
      CHECK(export_cas(sys) == export_cas(build_fritz_john(inst, tuple, {f, {}})));
      const std::string doc = export_json(sys);
      CHECK(doc == export_json(sys));
      const FritzJohnSystem back = import_fritz_john(doc);
      CHECK(back == sys);
      CHECK(export_json(back) == doc);
    }
  }
  // normalization draws are seed-deterministic
  const FritzJohnSystem a = build_fritz_john(inst, at({{0}, {0}}), {Formulation::Lagrange, 11});
  const FritzJohnSystem b = build_fritz_john(inst, at({{0}, {0}}), {Formulation::Lagrange, 11});
  const FritzJohnSystem c = build_fritz_john(inst, at({{0}, {0}}), {Formulation::Lagrange, 12});
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("cas script shape") {
  const GnepInstance inst = ball_instance();
  const std::string script = export_cas(build_fritz_john(inst, at({{}, {}}), {}));
  CHECK(script.rfind("R = QQ[x1_1, x1_2, x1_3, x2_1, x2_2, x2_3];\n", 0) == 0);
  CHECK(script.find("I = ideal(") != std::string::npos);
  CHECK(script.find("dim I\ndegree I\n") != std::string::npos);
  CHECK(script.back() == '\n');
}

TEST_CASE("empty system exports a valid document") {
  const FritzJohnSystem empty;
  const std::string script = export_cas(empty);
  CHECK(script == "R = QQ[];\nI = ideal(0_R);\ndim I\ndegree I\n");
  const FritzJohnSystem back = import_fritz_john(export_json(empty));
  CHECK(back == empty);
}
