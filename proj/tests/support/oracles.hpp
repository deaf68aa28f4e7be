#pragma once

// Reference computations that share no code with the library beyond the
// Permutation value type: brute-force group closure and the disk-moving rule
// applied directly to digit sequences.

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hanoi/permutation.hpp"

namespace oracle {

using hanoi::Permutation;
using hanoi::Point;

// Every element of <gens>, by breadth-first closure. Gives up past `limit`.
inline std::set<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens,
                                     std::size_t limit = 5000) {
  std::set<Permutation> seen{Permutation(degree)};
  std::deque<Permutation> queue{Permutation(degree)};
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > limit) {
          throw std::runtime_error("closure exceeds the oracle limit");
        }
        queue.push_back(std::move(y));
      }
    }
  }
  return seen;
}

// Subgroup generated by all commutators of all pairs of elements.
inline std::set<Permutation> derived_closure(std::size_t degree,
                                             const std::set<Permutation>& group) {
  std::set<Permutation> commutators;
  for (const auto& x : group) {
    for (const auto& y : group) {
      commutators.insert(hanoi::commutator(x, y));
    }
  }
  return closure(degree, {commutators.begin(), commutators.end()}, group.size());
}

// The disk game: move m swaps the first occurrence of either peg of its pair.
inline std::vector<int> move_disk(std::vector<int> state, char m) {
  int p = 0, q = 0;
  switch (m) {
    case 'a': p = 2; q = 3; break;
    case 'b': p = 1; q = 3; break;
    case 'c': p = 1; q = 2; break;
    default: throw std::invalid_argument("unknown move");
  }
  for (auto& d : state) {
    if (d == p || d == q) {
      d = (d == p) ? q : p;
      break;
    }
  }
  return state;
}

inline std::vector<int> digits_of(std::size_t index, int n) {
  std::vector<int> d(n);
  for (int i = n - 1; i >= 0; --i) {
    d[i] = static_cast<int>(index % 3) + 1;
    index /= 3;
  }
  return d;
}

inline std::size_t index_of(const std::vector<int>& d) {
  std::size_t index = 0;
  for (int x : d) {
    index = index * 3 + static_cast<std::size_t>(x - 1);
  }
  return index;
}

// Action of a word on the 3^n leaves, letters applied left to right.
inline Permutation leaf_action(const std::string& word, int n) {
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= 3;
  }
  std::vector<Point> images(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto s = digits_of(i, n);
    for (char m : word) {
      s = move_disk(std::move(s), m);
    }
    images[i] = static_cast<Point>(index_of(s));
  }
  return Permutation(std::move(images));
}

inline std::string random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 2);
  std::string w(len(rng), 'a');
  for (auto& x : w) {
    x = static_cast<char>('a' + letter(rng));
  }
  return w;
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    images[i] = static_cast<Point>(i);
  }
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace oracle
