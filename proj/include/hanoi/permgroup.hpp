#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "hanoi/permutation.hpp"

namespace hanoi {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
struct StabilizerChain;
}

/// A permutation group given by generators, with a base and strong generating
/// set computed eagerly by deterministic Schreier–Sims. Immutable once built,
/// so instances may be shared across threads.
class PermGroup {
 public:
  /// Generators are deduplicated and identities dropped. Points in
  /// `base_prefix` become the first base points in order, even when some of
  /// them are fixed by the whole group, so chain level k is always the
  /// pointwise stabilizer of the first k prefix points.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Exact order: the product of the fundamental orbit lengths.
  const BigInt& order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  /// Membership by sifting. Throws ShapeError on a degree mismatch.
  bool contains(const Permutation& g) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  const std::vector<Permutation>& strong_generators() const;

  /// The pointwise stabilizer of the first `level` base points, restricted to
  /// points 0..degree-1. The restricted chain is reused, so every base point
  /// past `level` must lie below `degree` and the subgroup must preserve it.
  PermGroup chain_subgroup(std::size_t level, std::size_t degree) const;
  PermGroup chain_subgroup(std::size_t level) const { return chain_subgroup(level, degree_); }

 private:
  friend PermGroup normal_closure(const PermGroup&, std::span<const Permutation>);
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::shared_ptr<const detail::StabilizerChain> chain);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const detail::StabilizerChain> chain_;
  BigInt order_;
};

/// The orbit of `point`, in breadth-first discovery order.
std::vector<Point> orbit(const PermGroup& g, Point point);

/// Smallest normal subgroup of `g` containing `elements`. Throws
/// MembershipError if an element lies outside `g`.
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> elements);

/// Normal closure of the generator commutators.
PermGroup derived_subgroup(const PermGroup& g);

/// Kernel of the action of `g` on the `arity^level` blocks of consecutive
/// points, for a group of degree arity^depth whose points are the
/// lexicographically indexed leaves of a tree. Throws InvalidBlocksError if a
/// generator does not permute the blocks.
PermGroup kernel_of_level_action(const PermGroup& g, int arity, int level);

/// Setwise stabilizer of block `block` (0-based) of `level`: the stabilizer of
/// the corresponding tree vertex.
PermGroup block_stabilizer(const PermGroup& g, int arity, int level, std::size_t block);

/// The induced action on the blocks of `level` as a group of degree arity^level.
PermGroup block_action(const PermGroup& g, int arity, int level);

/// Image of a leaf permutation on the blocks of `level`.
Permutation block_permutation(const Permutation& p, int arity, int level);

/// Abelian and every generator has order dividing p.
bool is_elementary_abelian(const PermGroup& g, unsigned p);

bool is_subgroup(const PermGroup& g, const PermGroup& h);
bool is_normal(const PermGroup& g, const PermGroup& h);

/// |g| / |h|; throws NotSubgroupError unless h <= g.
BigInt subgroup_index(const PermGroup& g, const PermGroup& h);

std::string to_string(const BigInt& n);

/// {degree, generators (1-based image arrays), order (decimal string)}.
nlohmann::json to_json(const PermGroup& g);

}  // namespace hanoi
