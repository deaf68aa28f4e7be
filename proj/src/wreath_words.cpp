#include "hanoi/wreath_words.hpp"

#include <charconv>
#include <deque>
#include <unordered_map>

#include "hanoi/errors.hpp"

namespace hanoi {

// ---------------------------------------------------------------- Word

Word::Word(std::string letters) : letters_(std::move(letters)) {
  if (letters_ == "1") {
    letters_.clear();
  }
  for (char x : letters_) {
    if (x < 'a' || x > 'z') {
      throw ParseError(std::string("word letters must be lowercase, got '") + x + "'");
    }
  }
}

Word Word::inverse() const {
  Word w;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  return w;
}

Word Word::pow(unsigned k) const {
  Word w;
  for (unsigned i = 0; i < k; ++i) {
    w.letters_ += letters_;
  }
  return w;
}

Word Word::reduced() const {
  Word w;
  for (char x : letters_) {
    if (!w.letters_.empty() && w.letters_.back() == x) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(x);
    }
  }
  return w;
}

Word commutator(const Word& x, const Word& y) { return x.inverse() * y.inverse() * x * y; }

Word conjugate(const Word& x, const Word& y) { return y.inverse() * x * y; }

// ---------------------------------------------------------------- recursion

WreathRecursion::WreathRecursion(int arity, std::map<char, LetterRule> rules)
    : arity_(arity), rules_(std::move(rules)) {
  if (arity_ < 1 || arity_ > 255) {
    throw ShapeError("arity must lie in 1..255");
  }
  for (const auto& [letter, rule] : rules_) {
    if (static_cast<int>(rule.states.size()) != arity_ ||
        static_cast<int>(rule.root.degree()) != arity_) {
      throw ShapeError(std::string("rule for '") + letter + "' does not match the arity");
    }
    alphabet_ += letter;
  }
  for (const auto& [letter, rule] : rules_) {
    for (const auto& s : rule.states) {
      check_word(s);
    }
  }
}

const WreathRecursion& WreathRecursion::hanoi() {
  static const WreathRecursion rec = [] {
    std::map<char, LetterRule> rules;
    rules.emplace('a', LetterRule{{Word("a"), Word(), Word()}, Permutation({0, 2, 1})});
    rules.emplace('b', LetterRule{{Word(), Word("b"), Word()}, Permutation({2, 1, 0})});
    rules.emplace('c', LetterRule{{Word(), Word(), Word("c")}, Permutation({1, 0, 2})});
    return WreathRecursion(3, std::move(rules));
  }();
  return rec;
}

const LetterRule& WreathRecursion::rule(char x) const {
  const auto it = rules_.find(x);
  if (it == rules_.end()) {
    throw ParseError(std::string("letter '") + x + "' is not a generator");
  }
  return it->second;
}

void WreathRecursion::check_word(const Word& w) const {
  for (char x : w.letters()) {
    if (!rules_.contains(x)) {
      throw ParseError(std::string("letter '") + x + "' is not in the alphabet \"" + alphabet_ + "\"");
    }
  }
}

WordStates word_states(const WreathRecursion& rec, const Word& w) {
  const int d = rec.arity();
  std::vector<std::string> states(d);
  std::vector<Point> position(d);
  for (int i = 0; i < d; ++i) {
    position[i] = static_cast<Point>(i);
  }
  // position[i] tracks where the path starting at child i currently sits.
  for (char x : w.letters()) {
    const LetterRule& r = rec.rule(x);
    for (int i = 0; i < d; ++i) {
      states[i] += r.states[position[i]].letters();
      position[i] = r.root[position[i]];
    }
  }
  WordStates out{{}, Permutation(std::move(position))};
  out.states.reserve(d);
  for (auto& s : states) {
    out.states.push_back(Word(std::move(s)).reduced());
  }
  return out;
}

Portrait evaluate(const WreathRecursion& rec, const Word& w, int depth) {
  if (depth < 0) {
    throw DepthError("negative evaluation depth");
  }
  rec.check_word(w);
  if (depth == 0 || w.empty()) {
    return Portrait::identity(rec.arity(), depth);
  }
  const WordStates ws = word_states(rec, w);
  std::vector<Portrait> children;
  children.reserve(ws.states.size());
  for (const auto& s : ws.states) {
    children.push_back(evaluate(rec, s, depth - 1));
  }
  return Portrait::assemble(ws.root, children);
}

Portrait evaluate(const Word& w, int depth) { return evaluate(WreathRecursion::hanoi(), w, depth); }

Permutation evaluate_leaves(const WreathRecursion& rec, const Word& w, int depth) {
  rec.check_word(w);
  std::unordered_map<char, Permutation> letters;
  for (char x : rec.alphabet()) {
    letters.emplace(x, leaf_permutation(evaluate(rec, Word(std::string(1, x)), depth), depth));
  }
  std::size_t degree = 1;
  for (int i = 0; i < depth; ++i) {
    degree *= rec.arity();
  }
  Permutation p(degree);
  for (char x : w.letters()) {
    p = p * letters.at(x);
  }
  return p;
}

bool check_relator(const WreathRecursion& rec, const Word& w, int depth) {
  return evaluate(rec, w, depth).is_identity();
}

bool check_relator(const Word& w, int depth) { return check_relator(WreathRecursion::hanoi(), w, depth); }

F2Vector parity_vector(const WreathRecursion& rec, const Word& w) {
  rec.check_word(w);
  const auto& alphabet = rec.alphabet();
  F2Vector v(alphabet.size());
  for (char x : w.letters()) {
    v.flip(alphabet.find(x));
  }
  return v;
}

F2Vector parity_vector(const Word& w) { return parity_vector(WreathRecursion::hanoi(), w); }

// ---------------------------------------------------------------- relators

Word tau(const Word& w) {
  std::string out;
  out.reserve(3 * w.size());
  for (char x : w.letters()) {
    switch (x) {
      case 'a': out += "a"; break;
      case 'b': out += "cbc"; break;
      case 'c': out += "bcb"; break;
      default: throw ParseError(std::string("tau is defined on a, b, c only, got '") + x + "'");
    }
  }
  return Word(std::move(out));
}

Word tau_power(const Word& w, int n) {
  if (n < 0) {
    throw UsageError("negative tau exponent");
  }
  Word out = w;
  for (int i = 0; i < n; ++i) {
    out = tau(out);
  }
  return out;
}

Word relator(int index) {
  const Word a("a"), b("b"), c("c");
  const auto comm = [](const Word& x, const Word& y) { return commutator(x, y); };
  switch (index) {
    case 1:
      return comm(b, a) * comm(b, c) * comm(c, a) * conjugate(comm(a, c), b) *
             conjugate(comm(a, b), c) * comm(c, b);
    case 2:
      return conjugate(comm(b, c), a) * comm(c, b) * comm(b, a) * comm(c, a) * comm(a, b) *
             conjugate(comm(a, c), b);
    case 3:
      return comm(c, b) * comm(a, b) * conjugate(comm(b, c), a) * comm(c, b).pow(2) *
             comm(b, a) * conjugate(comm(b, c), a) * conjugate(comm(b, c), a);
    case 4:
      return conjugate(comm(b, c), a) * conjugate(comm(a, b), c) * comm(b, a).pow(2) *
             comm(a, c) * conjugate(comm(a, b), c) * comm(c, a) * comm(c, b);
    default:
      throw UsageError("relator index must be 1..4, got " + std::to_string(index));
  }
}

Word parse_word_expression(std::string_view text) {
  if (text.starts_with("tau")) {
    std::string_view rest = text.substr(3);
    int power = 1;
    if (rest.starts_with("^")) {
      rest.remove_prefix(1);
      const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), power);
      if (ec != std::errc{} || power < 0) {
        throw ParseError("bad tau exponent in '" + std::string(text) + "'");
      }
      rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    }
    if (!rest.starts_with("(") || !rest.ends_with(")")) {
      throw ParseError("expected tau^n(...) in '" + std::string(text) + "'");
    }
    return tau_power(parse_word_expression(rest.substr(1, rest.size() - 2)), power);
  }
  if (text.size() == 2 && text[0] == 'w' && text[1] >= '1' && text[1] <= '4') {
    return relator(text[1] - '0');
  }
  Word w{std::string(text)};
  WreathRecursion::hanoi().check_word(w);
  return w;
}

const std::vector<Word>& stab1_generator_words() {
  static const std::vector<Word> words{Word("acab"), Word("abac"), Word("bcba"), Word("babc")};
  return words;
}

// ---------------------------------------------------------------- Reidemeister–Schreier

std::vector<Word> schreier_generators(std::span<const Word> gens,
                                      const std::function<std::string(const Word&)>& coset_key) {
  std::map<std::string, Word> representative;
  std::vector<Word> transversal;
  std::deque<Word> queue;
  const Word empty;
  representative.emplace(coset_key(empty), empty);
  transversal.push_back(empty);
  queue.push_back(empty);
  while (!queue.empty()) {
    const Word t = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      const Word ts = (t * s).reduced();
      const auto key = coset_key(ts);
      if (!representative.contains(key)) {
        representative.emplace(key, ts);
        transversal.push_back(ts);
        queue.push_back(ts);
      }
    }
  }

  std::vector<Word> out;
  for (const auto& t : transversal) {
    for (const auto& s : gens) {
      const Word ts = t * s;
      const Word g = (ts * representative.at(coset_key(ts)).inverse()).reduced();
      if (!g.empty() && std::find(out.begin(), out.end(), g) == out.end()) {
        out.push_back(g);
      }
    }
  }
  return out;
}

std::vector<Word> schreier_stab1_generators(const WreathRecursion& rec) {
  std::vector<Word> gens;
  for (char x : rec.alphabet()) {
    gens.emplace_back(std::string(1, x));
  }
  const auto key = [&rec](const Word& w) {
    const auto root = word_states(rec, w).root;
    return std::string(root.images().begin(), root.images().end());
  };
  return schreier_generators(gens, key);
}

std::vector<Word> schreier_stab1_generators() {
  return schreier_stab1_generators(WreathRecursion::hanoi());
}

}  // namespace hanoi
