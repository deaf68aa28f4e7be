#include <catch_amalgamated.hpp>

#include <random>

#include "hanoi/errors.hpp"
#include "hanoi/f2_linalg.hpp"
#include "hanoi/wreath_words.hpp"
#include "oracles.hpp"

using namespace hanoi;

namespace {

F2Vector random_vector(std::mt19937_64& rng, std::size_t dim) {
  F2Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (rng() & 1) {
      v.set(i);
    }
  }
  return v;
}

// Brute force: every vector in the span, by enumerating subsets.
std::set<std::string> span_elements(const std::vector<F2Vector>& vs, std::size_t dim) {
  std::set<std::string> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << vs.size()); ++mask) {
    F2Vector sum(dim);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (mask >> i & 1) {
        sum += vs[i];
      }
    }
    out.insert(sum.to_string());
  }
  return out;
}

}  // namespace

TEST_CASE("row reduction gives the span's dimension", "[f2]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 3 + rng() % 7;
    std::vector<F2Vector> vs;
    for (std::size_t i = 0; i < 1 + rng() % 6; ++i) {
      vs.push_back(random_vector(rng, dim));
    }
    const F2Subspace s = F2Subspace::span(dim, vs);
    const auto elements = span_elements(vs, dim);
    REQUIRE(s.size() == elements.size());
    for (std::size_t t = 0; t < 10; ++t) {
      const F2Vector x = random_vector(rng, dim);
      REQUIRE(s.contains(x) == elements.contains(x.to_string()));
    }
  }
}

TEST_CASE("dim(U+V) + dim(U cap V) = dim U + dim V", "[f2]") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 9;
    std::vector<F2Vector> us, vs;
    for (std::size_t i = 0; i < 1 + rng() % 5; ++i) {
      us.push_back(random_vector(rng, dim));
    }
    for (std::size_t i = 0; i < 1 + rng() % 5; ++i) {
      vs.push_back(random_vector(rng, dim));
    }
    const auto u = F2Subspace::span(dim, us);
    const auto v = F2Subspace::span(dim, vs);
    const auto meet = intersect(u, v);
    REQUIRE(sum(u, v).dim() + meet.dim() == u.dim() + v.dim());
    for (const auto& b : meet.basis()) {
      REQUIRE(u.contains(b));
      REQUIRE(v.contains(b));
    }
  }
}

TEST_CASE("level-1 stabilizer generators give the tabulated vectors", "[f2]") {
  REQUIRE(stab1_vector(Word("acab")).to_string() == "100011100");
  REQUIRE(stab1_vector(Word("abac")).to_string() == "100100011");
  REQUIRE(stab1_vector(Word("bcba")).to_string() == "101010010");
  REQUIRE(stab1_vector(Word("babc")).to_string() == "010010101");
  REQUIRE_THROWS_AS(stab1_vector(Word("a")), NotInStabilizerError);
}

TEST_CASE("stab1_vector is additive on products", "[f2][property]") {
  std::mt19937_64 rng(9);
  const auto& gens = stab1_generator_words();
  for (int trial = 0; trial < 200; ++trial) {
    Word u, w;
    for (int k = 0; k < 4; ++k) {
      u *= gens[rng() % 4];
      w *= gens[rng() % 4];
    }
    REQUIRE(stab1_vector(u * w) == stab1_vector(u) + stab1_vector(w));
  }
}

TEST_CASE("the four vectors span a 4-dimensional U meeting W trivially", "[f2]") {
  std::vector<F2Vector> vs;
  for (const auto& w : stab1_generator_words()) {
    vs.push_back(stab1_vector(w));
  }
  const auto u = F2Subspace::span(9, vs);
  REQUIRE(u.dim() == 4);
  REQUIRE(intersect(u, coordinate_subspace(9, 0, 3)).dim() == 0);
  REQUIRE(block_sum(vs[0]).to_string() == "011");
  REQUIRE(block_sum(vs[0] + vs[1]).is_zero());
}

TEST_CASE("F2 JSON and shape checks", "[f2]") {
  const auto s = F2Subspace::span(3, {F2Vector{1, 1, 0}, F2Vector{0, 1, 1}});
  const auto j = to_json(s);
  REQUIRE(j.at("dim") == 2);
  REQUIRE(j.at("ambient_dim") == 3);
  F2Vector a(3), b(4);
  REQUIRE_THROWS_AS(a += b, ShapeError);
}
