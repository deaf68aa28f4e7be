#include <catch_amalgamated.hpp>

#include "hanoi/errors.hpp"
#include "hanoi/permgroup.hpp"
#include "hanoi/wreath_words.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace hanoi;

TEST_CASE("words reduce by cancelling squares of letters", "[words]") {
  REQUIRE(Word("abba").reduced().empty());
  REQUIRE(Word("abcca").reduced() == Word("aba"));
  REQUIRE(Word("1").empty());
  REQUIRE(Word("").to_string() == "1");
  REQUIRE(Word("abc").inverse() == Word("cba"));
  REQUIRE(Word("ab").pow(3) == Word("ababab"));
  REQUIRE(commutator(Word("a"), Word("b")) == Word("abab"));
  REQUIRE(conjugate(Word("a"), Word("b")) == Word("bab"));
  REQUIRE_THROWS_AS(Word("aB"), ParseError);
}

TEST_CASE("first-level states of acab are (a, cb, a) with trivial root", "[words]") {
  const auto ws = word_states(WreathRecursion::hanoi(), Word("acab"));
  REQUIRE(ws.root.is_identity());
  REQUIRE(ws.states == std::vector<Word>{Word("a"), Word("cb"), Word("a")});
  const auto k = word_states(WreathRecursion::hanoi(), Word("abab"));
  // [a,b] = (ab, a, b) sigma_123
  REQUIRE(k.states == std::vector<Word>{Word("ab"), Word("a"), Word("b")});
  REQUIRE(k.root.cycle_string() == "(1 2 3)");
}

TEST_CASE("portrait evaluation matches the disk-moving rule", "[words]") {
  std::mt19937_64 rng(props::kSeed + 20);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string w = oracle::random_word(rng, 15);
    const int depth = 1 + trial % 5;
    INFO(w << " at depth " << depth);
    REQUIRE(leaf_permutation(evaluate(Word(w), depth), depth) == oracle::leaf_action(w, depth));
    REQUIRE(evaluate_leaves(WreathRecursion::hanoi(), Word(w), depth) ==
            oracle::leaf_action(w, depth));
  }
}

TEST_CASE("evaluation, parity and leaf actions are homomorphisms", "[words][property]") {
  const auto t = props::homomorphism(300);
  INFO(t.first_failure);
  REQUIRE(t.failures == 0);
}

TEST_CASE("defining relators are trivial and ab is not", "[words]") {
  for (const char* w : {"aa", "bb", "cc"}) {
    REQUIRE(check_relator(Word(w), 6));
  }
  for (int i = 1; i <= 4; ++i) {
    for (int n = 0; n <= 3; ++n) {
      INFO("tau^" << n << "(w" << i << ")");
      REQUIRE(check_relator(tau_power(relator(i), n), 6));
    }
  }
  REQUIRE_FALSE(check_relator(Word("ab"), 6));
  REQUIRE_FALSE(check_relator(Word("abc"), 1));
}

TEST_CASE("tau substitutes b -> cbc and c -> bcb", "[words]") {
  REQUIRE(tau(Word("abc")) == Word("acbcbcb"));
  REQUIRE(tau_power(Word("a"), 3) == Word("a"));
  REQUIRE(tau_power(Word("b"), 2) == tau(Word("cbc")));
  REQUIRE(relator(1) == parse_word_expression("w1"));
  REQUIRE(tau(relator(2)) == parse_word_expression("tau(w2)"));
  REQUIRE(tau_power(relator(3), 2) == parse_word_expression("tau^2(w3)"));
  REQUIRE(tau(Word("ab")) == parse_word_expression("tau(ab)"));
  REQUIRE(parse_word_expression("1").empty());
  REQUIRE_THROWS_AS(parse_word_expression("w5"), ParseError);
  REQUIRE_THROWS_AS(parse_word_expression("tau^x(w1)"), ParseError);
}

TEST_CASE("parity vectors count letters mod 2", "[words]") {
  REQUIRE(parity_vector(Word("acab")).to_string() == "011");
  REQUIRE(parity_vector(Word("a")).to_string() == "100");
  REQUIRE(parity_vector(Word("cbc")).to_string() == "010");
  REQUIRE(parity_vector(Word()).is_zero());
}

TEST_CASE("Schreier generators for the level-1 stabilizer", "[words]") {
  const auto gens = schreier_stab1_generators();
  REQUIRE_FALSE(gens.empty());
  std::vector<Permutation> images;
  for (const auto& w : gens) {
    REQUIRE(evaluate(w, 1).is_identity());
    images.push_back(leaf_permutation(evaluate(w, 3), 3));
  }
  // They generate Stab(1) in G_3, of index 6.
  const PermGroup stab(27, images);
  const PermGroup g3(27, {oracle::leaf_action("a", 3), oracle::leaf_action("b", 3),
                          oracle::leaf_action("c", 3)});
  REQUIRE(g3.order() == 6 * stab.order());
  REQUIRE(is_subgroup(g3, stab));

  // The four named words generate the same subgroup.
  std::vector<Permutation> named;
  for (const auto& w : stab1_generator_words()) {
    named.push_back(leaf_permutation(evaluate(w, 3), 3));
  }
  REQUIRE(PermGroup(27, named).order() == stab.order());
}

TEST_CASE("custom recursions are accepted and validated", "[words]") {
  // The adding machine t = (1, t) sigma on the binary tree.
  const WreathRecursion adder(2, {{'t', LetterRule{{Word(), Word("t")}, Permutation::transposition(2, 0, 1)}}});
  const Portrait t = evaluate(adder, Word("t"), 3);
  REQUIRE(leaf_permutation(t, 3).cycle_string() == "(1 5 3 7 2 6 4 8)");
  REQUIRE(evaluate(adder, Word("tttttttt"), 3).is_identity());
  REQUIRE_THROWS_AS(evaluate(adder, Word("a"), 2), ParseError);
}
