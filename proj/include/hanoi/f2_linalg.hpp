#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

namespace hanoi {

class Word;

/// A vector over GF(2) of fixed dimension.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t dim) : bits_(dim) {}
  F2Vector(std::initializer_list<int> bits);
  static F2Vector from_bits(std::span<const int> bits);

  std::size_t dim() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value = true) { bits_[i] = value; }
  void flip(std::size_t i) { bits_.flip(i); }

  bool is_zero() const noexcept { return bits_.none(); }
  /// Index of the first set coordinate, or dim() when zero.
  std::size_t leading() const;

  F2Vector& operator+=(const F2Vector& rhs);
  friend F2Vector operator+(F2Vector lhs, const F2Vector& rhs) { return lhs += rhs; }

  /// Concatenation, used to stack per-subtree blocks.
  F2Vector concat(const F2Vector& tail) const;

  std::vector<int> to_bits() const;
  std::string to_string() const;

  friend bool operator==(const F2Vector&, const F2Vector&) = default;
  friend bool operator<(const F2Vector& a, const F2Vector& b) { return a.to_bits() < b.to_bits(); }

 private:
  boost::dynamic_bitset<> bits_;
};

/// A subspace of GF(2)^n kept as a basis in reduced row-echelon form, so two
/// subspaces are equal exactly when their bases are.
class F2Subspace {
 public:
  explicit F2Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static F2Subspace span(std::size_t ambient_dim, std::span<const F2Vector> vectors);
  static F2Subspace span(std::size_t ambient_dim, std::initializer_list<F2Vector> vectors) {
    return span(ambient_dim, std::span<const F2Vector>(vectors.begin(), vectors.size()));
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<F2Vector>& basis() const noexcept { return basis_; }

  bool contains(const F2Vector& v) const;
  /// Number of elements, 2^dim.
  std::size_t size() const { return std::size_t{1} << dim(); }

  friend bool operator==(const F2Subspace&, const F2Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<F2Vector> basis_;  // sorted by pivot, pivot columns cleared elsewhere
};

F2Subspace sum(const F2Subspace& a, const F2Subspace& b);

/// A ∩ B, from the kernel of the stacked system [basis(A); basis(B)].
F2Subspace intersect(const F2Subspace& a, const F2Subspace& b);

/// Coordinates {first, ..., last-1} of GF(2)^n.
F2Subspace coordinate_subspace(std::size_t ambient_dim, std::size_t first, std::size_t last);

nlohmann::json to_json(const F2Vector& v);
nlohmann::json to_json(const F2Subspace& s);

/// For a word in Stab(1): the (a,b,c)-parities of its three first-level states,
/// concatenated subtree by subtree. Throws NotInStabilizerError otherwise.
F2Vector stab1_vector(const Word& w);

/// Sum of the three subtree blocks of a GF(2)^9 vector; equals the parity
/// vector of the element itself.
F2Vector block_sum(const F2Vector& v);

}  // namespace hanoi
