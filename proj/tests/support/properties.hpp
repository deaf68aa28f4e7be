#pragma once

// Randomized property checks shared by the unit suite and the acceptance
// binary. Each returns the number of cases tried and the number that failed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hanoi/automorphism.hpp"
#include "hanoi/permgroup.hpp"
#include "hanoi/wreath_words.hpp"
#include "oracles.hpp"

namespace props {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      if (failures == 0) {
        first_failure = what;
      }
      ++failures;
    }
  }
  Tally& operator+=(const Tally& o) {
    if (failures == 0 && o.failures > 0) {
      first_failure = o.first_failure;
    }
    cases += o.cases;
    failures += o.failures;
    return *this;
  }
};

inline constexpr std::uint64_t kSeed = 20240917;

inline hanoi::Portrait random_portrait(std::mt19937_64& rng, int depth) {
  static const std::vector<std::vector<std::uint8_t>> s3 = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::uniform_int_distribution<std::size_t> pick(0, s3.size() - 1);
  std::size_t vertices = 0, width = 1;
  for (int k = 0; k < depth; ++k, width *= 3) {
    vertices += width;
  }
  std::vector<std::uint8_t> labels;
  labels.reserve(vertices * 3);
  for (std::size_t v = 0; v < vertices; ++v) {
    const auto& l = s3[pick(rng)];
    labels.insert(labels.end(), l.begin(), l.end());
  }
  return hanoi::Portrait::from_flat_labels(3, depth, std::move(labels));
}

inline hanoi::Vertex random_vertex(std::mt19937_64& rng, int level) {
  std::uniform_int_distribution<int> digit(1, 3);
  std::vector<int> d(level);
  for (auto& x : d) {
    x = digit(rng);
  }
  return hanoi::Vertex(std::move(d));
}

// (gh)@v = g@v * h@(v^g) for random portraits and vertices.
inline Tally cocycle(std::size_t trials) {
  std::mt19937_64 rng(kSeed);
  Tally t;
  for (std::size_t i = 0; i < trials; ++i) {
    const int depth = 1 + static_cast<int>(i % 4);
    const auto g = random_portrait(rng, depth);
    const auto h = random_portrait(rng, depth);
    const auto v = random_vertex(rng, static_cast<int>(rng() % (depth + 1)));
    const auto lhs = hanoi::state_at(hanoi::compose(g, h), v);
    const auto rhs =
        hanoi::compose(hanoi::state_at(g, v), hanoi::state_at(h, hanoi::apply(g, v)));
    t.check(lhs == rhs, "cocycle at depth " + std::to_string(depth) + " vertex " + v.to_string());
  }
  return t;
}

// Word evaluation and leaf actions are homomorphisms, and agree with the
// disk-game oracle.
inline Tally homomorphism(std::size_t trials) {
  std::mt19937_64 rng(kSeed + 1);
  Tally t;
  for (std::size_t i = 0; i < trials; ++i) {
    const int depth = 1 + static_cast<int>(i % 5);
    const hanoi::Word u(oracle::random_word(rng, 12));
    const hanoi::Word w(oracle::random_word(rng, 12));
    const auto pu = hanoi::evaluate(u, depth);
    const auto pw = hanoi::evaluate(w, depth);
    const auto puw = hanoi::evaluate(u * w, depth);
    t.check(puw == hanoi::compose(pu, pw), "evaluate(uw) for " + u.to_string() + "," + w.to_string());
    t.check(hanoi::compose(pu, hanoi::inverse(pu)).is_identity(), "g g^-1 for " + u.to_string());
    t.check(hanoi::leaf_permutation(puw, depth) ==
                hanoi::leaf_permutation(pu, depth) * hanoi::leaf_permutation(pw, depth),
            "leaf action of " + u.to_string() + "," + w.to_string());
    t.check(hanoi::leaf_permutation(pu, depth) == oracle::leaf_action(u.letters(), depth),
            "disk game agreement for " + u.to_string());
    t.check(hanoi::parity_vector(u * w) == hanoi::parity_vector(u) + hanoi::parity_vector(w),
            "parity of " + u.to_string() + "," + w.to_string());
    const auto v = random_vertex(rng, depth);
    t.check(hanoi::state_at(hanoi::embed(v.prefix(1), hanoi::state_at(pu, v.prefix(1))),
                            v.prefix(1)) == hanoi::state_at(pu, v.prefix(1)),
            "embed/state round trip");
  }
  return t;
}

// |G| = |orbit of the first base point| * |its stabilizer|, for random
// subgroups of the level-3 quotient generated by random words.
inline Tally orbit_stabilizer(std::size_t trials) {
  std::mt19937_64 rng(kSeed + 2);
  Tally t;
  for (std::size_t i = 0; i < trials; ++i) {
    const int depth = 2 + static_cast<int>(i % 2);
    std::vector<hanoi::Permutation> gens;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t k = 0; k < count; ++k) {
      gens.push_back(oracle::leaf_action(oracle::random_word(rng, 10), depth));
    }
    const std::size_t degree = gens.front().degree();
    const hanoi::PermGroup g(degree, gens);
    if (g.is_trivial()) {
      t.check(true, "");
      continue;
    }
    const auto point = g.base().front();
    const auto orb = hanoi::orbit(g, point);
    const hanoi::PermGroup stabilizer(degree, gens, {point});
    t.check(g.order() == hanoi::BigInt(orb.size()) * stabilizer.chain_subgroup(1).order(),
            "orbit-stabilizer for generator set " + std::to_string(i));
  }
  return t;
}

// Sifting agrees with a brute-force element list on groups of order <= 5000.
inline Tally membership(std::size_t trials) {
  std::mt19937_64 rng(kSeed + 3);
  Tally t;
  std::size_t done = 0;
  while (done < trials) {
    const std::size_t degree = 4 + rng() % 4;  // 4..7
    std::vector<hanoi::Permutation> gens;
    const std::size_t count = 1 + rng() % 2;
    for (std::size_t k = 0; k < count; ++k) {
      gens.push_back(oracle::random_permutation(rng, degree));
    }
    std::set<hanoi::Permutation> elements;
    try {
      elements = oracle::closure(degree, gens, 5000);
    } catch (const std::runtime_error&) {
      continue;  // the group is too big for the oracle
    }
    const hanoi::PermGroup g(degree, gens);
    t.check(g.order() == hanoi::BigInt(elements.size()), "order of a random group");
    for (int k = 0; k < 10; ++k) {
      const auto x = oracle::random_permutation(rng, degree);
      t.check(g.contains(x) == elements.contains(x), "membership of a random permutation");
    }
    done += 11;
  }
  return t;
}

inline Tally all(std::size_t trials_each) {
  Tally t;
  t += cocycle(trials_each);
  t += homomorphism(trials_each);
  t += orbit_stabilizer(trials_each);
  t += membership(trials_each);
  return t;
}

}  // namespace props
