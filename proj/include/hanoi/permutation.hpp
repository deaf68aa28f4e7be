#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hanoi {

// Points are 0-based internally; every external rendering is 1-based.
using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = 65535;

/// A permutation of {0, ..., degree-1} acting on the right: (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;

  /// The identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws ShapeError unless `images` is a bijection on 0..n-1.
  explicit Permutation(std::vector<Point> images);

  /// Build from 1-based images, as written in reports and JSON.
  static Permutation from_one_based(std::span<const int> images);

  static Permutation transposition(std::size_t degree, Point i, Point j);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  /// Apply *this first, then `rhs`.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(unsigned k) const;

  bool is_identity() const noexcept;

  /// -1 for odd, +1 for even.
  int sign() const;

  /// Extend to a larger degree by fixing the new points.
  Permutation extended(std::size_t degree) const;

  /// Cycle notation with 1-based points, "()" for the identity.
  std::string cycle_string() const;
  std::vector<int> one_based() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// x^-1 y^-1 x y
Permutation commutator(const Permutation& x, const Permutation& y);

}  // namespace hanoi

template <>
struct std::hash<hanoi::Permutation> {
  std::size_t operator()(const hanoi::Permutation& p) const noexcept;
};
