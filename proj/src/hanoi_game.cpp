#include "hanoi/hanoi_game.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "hanoi/errors.hpp"

namespace hanoi {

namespace {

constexpr int kMaxSolveDisks = 12;
constexpr int kExhaustiveLimit = 8;
constexpr std::size_t kSampleSize = 100000;
constexpr Move kMoves[] = {Move::a, Move::b, Move::c};

std::size_t encode(const std::vector<int>& pegs) {
  std::size_t code = 0;
  for (int p : pegs) {
    code = code * 3 + static_cast<std::size_t>(p - 1);
  }
  return code;
}

std::vector<int> decode(std::size_t code, int disks) {
  std::vector<int> pegs(disks);
  for (int i = disks - 1; i >= 0; --i) {
    pegs[i] = static_cast<int>(code % 3) + 1;
    code /= 3;
  }
  return pegs;
}

std::size_t state_count(int n) {
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= 3;
  }
  return count;
}

// Breadth-first search from `start`; parent[s] = (predecessor, move index).
std::vector<std::pair<std::size_t, int>> bfs(int n, std::size_t start) {
  const std::size_t count = state_count(n);
  std::vector<std::pair<std::size_t, int>> parent(count, {count, -1});
  parent[start] = {start, -1};
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const std::size_t code = queue.front();
    queue.pop_front();
    const GameState s(decode(code, n));
    for (int m = 0; m < 3; ++m) {
      const std::size_t next = encode(apply_move(s, kMoves[m]).pegs());
      if (parent[next].first == count) {
        parent[next] = {code, m};
        queue.push_back(next);
      }
    }
  }
  return parent;
}

}  // namespace

Move parse_move(std::string_view text) {
  if (text == "a") return Move::a;
  if (text == "b") return Move::b;
  if (text == "c") return Move::c;
  throw ParseError("unknown move '" + std::string(text) + "' (expected a, b or c)");
}

char to_char(Move m) { return static_cast<char>(m); }

std::pair<int, int> peg_pair(Move m) {
  switch (m) {
    case Move::a: return {2, 3};
    case Move::b: return {1, 3};
    case Move::c: return {1, 2};
  }
  return {0, 0};
}

GameState::GameState(std::vector<int> pegs) : pegs_(std::move(pegs)) {
  for (int p : pegs_) {
    if (p < 1 || p > 3) {
      throw ParseError("peg numbers must be 1, 2 or 3");
    }
  }
}

GameState GameState::parse(std::string_view text) {
  try {
    return GameState(Vertex::parse(text).digits());
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

GameState GameState::all_on(int peg, int disks) {
  return GameState(std::vector<int>(static_cast<std::size_t>(disks), peg));
}

std::string GameState::to_string() const { return Vertex(pegs_).to_string(); }

GameState apply_move(const GameState& s, Move m) {
  const auto [x, y] = peg_pair(m);
  std::vector<int> pegs = s.pegs();
  const auto it = std::find_if(pegs.begin(), pegs.end(), [&](int p) { return p == x || p == y; });
  if (it != pegs.end()) {
    *it = (*it == x) ? y : x;
  }
  return GameState(std::move(pegs));
}

bool consistency_check(int n) {
  if (n < 1) {
    throw UsageError("consistency check needs at least one disk");
  }
  const Portrait generators[] = {evaluate(Word("a"), n), evaluate(Word("b"), n),
                                 evaluate(Word("c"), n)};
  const auto agrees = [&](const GameState& s) {
    for (int m = 0; m < 3; ++m) {
      if (apply_move(s, kMoves[m]).vertex() != apply(generators[m], s.vertex())) {
        return false;
      }
    }
    return true;
  };
  if (n <= kExhaustiveLimit) {
    for (std::size_t code = 0; code < state_count(n); ++code) {
      if (!agrees(GameState(decode(code, n)))) {
        return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> peg(1, 3);
  std::vector<int> pegs(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < kSampleSize; ++i) {
    std::generate(pegs.begin(), pegs.end(), [&] { return peg(rng); });
    if (!agrees(GameState(pegs))) {
      return false;
    }
  }
  return true;
}

Word solve(int n) {
  if (n < 1 || n > kMaxSolveDisks) {
    throw ResourceError("solver supports 1.." + std::to_string(kMaxSolveDisks) + " disks, got " +
                        std::to_string(n));
  }
  const std::size_t start = encode(GameState::all_on(1, n).pegs());
  const std::size_t goal = encode(GameState::all_on(3, n).pegs());
  const auto parent = bfs(n, start);
  std::string moves;
  for (std::size_t s = goal; s != start; s = parent[s].first) {
    moves += to_char(kMoves[parent[s].second]);
  }
  std::reverse(moves.begin(), moves.end());
  return Word(std::move(moves));
}

std::size_t reachable_states(int n) {
  if (n < 1 || n > kMaxSolveDisks) {
    throw ResourceError("state graph search supports 1.." + std::to_string(kMaxSolveDisks) +
                        " disks");
  }
  const auto parent = bfs(n, encode(GameState::all_on(1, n).pegs()));
  const std::size_t count = state_count(n);
  return static_cast<std::size_t>(std::count_if(
      parent.begin(), parent.end(), [&](const auto& p) { return p.first != count; }));
}

}  // namespace hanoi
