#pragma once

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hanoi/automorphism.hpp"
#include "hanoi/f2_linalg.hpp"
#include "hanoi/permutation.hpp"

namespace hanoi {

/// A word over an alphabet of involutions, so the inverse of a word is its
/// reversal and no formal inverse letters exist.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);
  Word(const char* letters) : Word(std::string(letters)) {}

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word& operator*=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  Word inverse() const;
  Word pow(unsigned k) const;

  /// Cancels adjacent equal letters (xx -> empty) until none remain.
  Word reduced() const;

  /// "1" for the empty word.
  std::string to_string() const { return letters_.empty() ? "1" : letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

/// [x,y] = x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);
/// x^y = y^-1 x y
Word conjugate(const Word& x, const Word& y);

struct LetterRule {
  std::vector<Word> states;
  Permutation root;
};

/// Defines each generator by its first-level states and root permutation.
class WreathRecursion {
 public:
  WreathRecursion(int arity, std::map<char, LetterRule> rules);

  /// a = (a,1,1)(2 3), b = (1,b,1)(1 3), c = (1,1,c)(1 2).
  static const WreathRecursion& hanoi();

  int arity() const noexcept { return arity_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  bool has_letter(char x) const { return rules_.contains(x); }
  const LetterRule& rule(char x) const;

  /// Throws ParseError unless every letter is a generator.
  void check_word(const Word& w) const;

 private:
  int arity_;
  std::string alphabet_;
  std::map<char, LetterRule> rules_;
};

struct WordStates {
  std::vector<Word> states;
  Permutation root;
};

/// Syntactic wreath decomposition w = (w_1, ..., w_d) root.
WordStates word_states(const WreathRecursion& rec, const Word& w);

Portrait evaluate(const WreathRecursion& rec, const Word& w, int depth);
Portrait evaluate(const Word& w, int depth);

/// Leaf action of w on level `depth`, without building the portrait.
Permutation evaluate_leaves(const WreathRecursion& rec, const Word& w, int depth);

bool check_relator(const WreathRecursion& rec, const Word& w, int depth);
bool check_relator(const Word& w, int depth);

/// Letter counts mod 2, in alphabet order.
F2Vector parity_vector(const WreathRecursion& rec, const Word& w);
F2Vector parity_vector(const Word& w);

/// The substitution a -> a, b -> cbc, c -> bcb.
Word tau(const Word& w);
Word tau_power(const Word& w, int n);

/// The four defining relator families w1..w4 (index 1..4).
Word relator(int index);

/// Parses "acab", "1" (empty), "w3", "tau^2(w1)", "tau(abc)".
Word parse_word_expression(std::string_view text);

/// acab, abac, bcba, babc: generators of the first-level stabilizer.
const std::vector<Word>& stab1_generator_words();

/// Reidemeister–Schreier: generators of the kernel of a homomorphism from
/// <gens> to a finite group, given as a coset key. Cosets are discovered by
/// breadth-first search from the empty word and each Schreier generator
/// t s rep(ts)^-1 is freely reduced; trivial ones are dropped.
std::vector<Word> schreier_generators(std::span<const Word> gens,
                                      const std::function<std::string(const Word&)>& coset_key);

/// Generators of the level-1 stabilizer, cosets keyed by the root permutation.
std::vector<Word> schreier_stab1_generators(const WreathRecursion& rec);
std::vector<Word> schreier_stab1_generators();

}  // namespace hanoi
