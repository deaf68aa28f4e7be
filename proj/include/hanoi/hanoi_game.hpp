#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hanoi/automorphism.hpp"
#include "hanoi/wreath_words.hpp"

namespace hanoi {

/// The three legal moves: a swaps the top disk between pegs 2 and 3, b
/// between pegs 1 and 3, c between pegs 1 and 2.
enum class Move : char { a = 'a', b = 'b', c = 'c' };

Move parse_move(std::string_view text);
char to_char(Move m);
std::pair<int, int> peg_pair(Move m);

/// Peg of each disk, smallest disk first. Every sequence over {1,2,3} is a
/// legal position, and positions with n disks are exactly the level-n vertices.
class GameState {
 public:
  GameState() = default;
  explicit GameState(std::vector<int> pegs);

  /// Parses "2,1,3,2,2,1".
  static GameState parse(std::string_view text);
  static GameState all_on(int peg, int disks);

  int disks() const noexcept { return static_cast<int>(pegs_.size()); }
  const std::vector<int>& pegs() const noexcept { return pegs_; }
  Vertex vertex() const { return Vertex(pegs_); }
  std::string to_string() const;

  friend bool operator==(const GameState&, const GameState&) = default;
  friend auto operator<=>(const GameState&, const GameState&) = default;

 private:
  std::vector<int> pegs_;
};

/// Moves the smallest disk found on either peg of the move's pair to the other
/// peg of the pair; positions with no disk on that pair are fixed.
GameState apply_move(const GameState& s, Move m);

/// Compares apply_move against the portrait action of the generator at depth
/// n: every state when n <= 8, otherwise 100000 seeded random states.
bool consistency_check(int n);

/// A shortest sequence of moves taking all disks from peg 1 to peg 3, found by
/// breadth-first search over the 3^n positions. 1 <= n <= 12.
Word solve(int n);

/// Number of positions reachable from the all-on-peg-1 position.
std::size_t reachable_states(int n);

}  // namespace hanoi
