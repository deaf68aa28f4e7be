#include <catch_amalgamated.hpp>

#include "hanoi/errors.hpp"
#include "hanoi/expected_values.hpp"
#include "hanoi/permgroup.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace hanoi;

namespace {

PermGroup hanoi_quotient(int depth) {
  return PermGroup(pow3(depth), {oracle::leaf_action("a", depth), oracle::leaf_action("b", depth),
                                 oracle::leaf_action("c", depth)});
}

Permutation cycle(std::size_t degree, std::vector<Point> points) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    images[i] = static_cast<Point>(i);
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    images[points[i]] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("symmetric and alternating groups have the right orders", "[permgroup]") {
  for (std::size_t n = 2; n <= 9; ++n) {
    std::vector<Point> all(n);
    for (std::size_t i = 0; i < n; ++i) {
      all[i] = static_cast<Point>(i);
    }
    const PermGroup sym(n, {Permutation::transposition(n, 0, 1), cycle(n, all)});
    BigInt factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      factorial *= i;
    }
    REQUIRE(sym.order() == factorial);
    const PermGroup alt = derived_subgroup(sym);
    REQUIRE(alt.order() == factorial / 2);
  }
  // M11 on 11 points, order 7920.
  // (1 2 ... 11) and (3 7 11 8)(4 10 5 6)
  const PermGroup m11(11, {cycle(11, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}),
                           cycle(11, {2, 6, 10, 7}) * cycle(11, {3, 9, 4, 5})});
  REQUIRE(m11.order() == 7920);
}

TEST_CASE("Hanoi quotient orders match brute force and the closed form", "[permgroup]") {
  const auto g1 = hanoi_quotient(1);
  const auto g2 = hanoi_quotient(2);
  REQUIRE(g1.order() == 6);
  REQUIRE(g2.order() == oracle::closure(9, g2.generators()).size());
  REQUIRE(g2.order() == 648);
  for (int depth = 1; depth <= 4; ++depth) {
    REQUIRE(hanoi_quotient(depth).order() == quotient_order(depth));
  }
}

TEST_CASE("derived subgroup of G_2 matches brute-force commutator closure", "[permgroup]") {
  const auto g2 = hanoi_quotient(2);
  const auto elements = oracle::closure(9, g2.generators());
  const auto derived = derived_subgroup(g2);
  REQUIRE(derived.order() == oracle::derived_closure(9, elements).size());
  REQUIRE(derived.order() == 324);
  REQUIRE(is_normal(g2, derived));
  REQUIRE(subgroup_index(g2, derived) == 2);
  REQUIRE(subgroup_index(hanoi_quotient(3), derived_subgroup(hanoi_quotient(3))) == 2);
}

TEST_CASE("membership agrees with brute force on groups of order <= 5000", "[permgroup][property]") {
  const auto t = props::membership(300);
  INFO(t.first_failure);
  REQUIRE(t.failures == 0);
}

TEST_CASE("orbit-stabilizer factorization", "[permgroup][property]") {
  const auto t = props::orbit_stabilizer(100);
  INFO(t.first_failure);
  REQUIRE(t.failures == 0);
}

TEST_CASE("forced base prefixes give point stabilizers", "[permgroup]") {
  const auto g3 = hanoi_quotient(3);
  const PermGroup with_prefix(27, g3.generators(), {5, 0});
  REQUIRE(with_prefix.order() == g3.order());
  REQUIRE(with_prefix.base()[0] == 5);
  REQUIRE(with_prefix.base()[1] == 0);
  const auto stab5 = with_prefix.chain_subgroup(1);
  REQUIRE(g3.order() == 27 * stab5.order());
  for (const auto& s : stab5.generators()) {
    REQUIRE(s[5] == 5);
  }
}

TEST_CASE("level actions and their kernels", "[permgroup]") {
  const auto g3 = hanoi_quotient(3);
  const auto top = block_action(g3, 3, 2);
  REQUIRE(top.degree() == 9);
  REQUIRE(top.order() == 648);
  for (int level = 0; level <= 3; ++level) {
    const auto kernel = kernel_of_level_action(g3, 3, level);
    const BigInt image = level == 0 ? BigInt(1) : block_action(g3, 3, level).order();
    REQUIRE(kernel.order() * image == g3.order());
    REQUIRE(is_normal(g3, kernel));
  }
  REQUIRE(kernel_of_level_action(g3, 3, 3).is_trivial());
  REQUIRE(kernel_of_level_action(g3, 3, 1).order() == g3.order() / 6);

  const auto stab = block_stabilizer(g3, 3, 1, 1);
  REQUIRE(g3.order() == 3 * stab.order());
  REQUIRE_THROWS_AS(block_permutation(Permutation::transposition(9, 0, 3), 3, 1),
                    InvalidBlocksError);
}

TEST_CASE("normal closure and elementary abelian detection", "[permgroup]") {
  const PermGroup s4(4, {Permutation::transposition(4, 0, 1), cycle(4, {0, 1, 2, 3})});
  const Permutation double_transposition = Permutation::from_one_based(std::vector<int>{2, 1, 4, 3});
  const auto v4 = normal_closure(s4, std::vector<Permutation>{double_transposition});
  REQUIRE(v4.order() == 4);
  REQUIRE(is_elementary_abelian(v4, 2));
  REQUIRE_FALSE(is_elementary_abelian(s4, 2));
  REQUIRE(is_normal(s4, v4));
  REQUIRE_THROWS_AS(normal_closure(v4, std::vector<Permutation>{Permutation::transposition(4, 0, 1)}),
                    MembershipError);
  const PermGroup c2(4, {Permutation::transposition(4, 0, 1)});
  REQUIRE_FALSE(is_normal(s4, c2));
  REQUIRE_THROWS_AS(subgroup_index(v4, c2), NotSubgroupError);
  REQUIRE_THROWS_AS(s4.contains(Permutation(5)), ShapeError);
}

TEST_CASE("group JSON carries 1-based generators and a decimal order", "[permgroup]") {
  const auto j = to_json(hanoi_quotient(2));
  REQUIRE(j.at("degree") == 9);
  REQUIRE(j.at("order") == "648");
  REQUIRE(j.at("generators").size() == 3);
}
