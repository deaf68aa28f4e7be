#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hanoi/permutation.hpp"

namespace hanoi {

/// A vertex of the rooted d-ary tree, written as its 1-based digit path from
/// the root. The empty path is the root.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> digits);
  Vertex(std::initializer_list<int> digits) : Vertex(std::vector<int>(digits)) {}

  /// The vertex at `level` whose 1-based lexicographic index is `lex_index`.
  static Vertex from_lex_index(int arity, int level, std::size_t lex_index);

  /// Parses "2,1,3"; the empty string is the root.
  static Vertex parse(std::string_view text);

  int level() const noexcept { return static_cast<int>(digits_.size()); }
  const std::vector<int>& digits() const noexcept { return digits_; }
  int operator[](std::size_t i) const { return digits_[i]; }

  /// 1-based position among the vertices of the same level in lexicographic order.
  std::size_t lex_index(int arity) const;

  Vertex child(int digit) const;
  Vertex prefix(int level) const;
  Vertex concat(const Vertex& tail) const;

  bool valid_for(int arity) const noexcept;

  /// Comma-separated digits, "" for the root.
  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  std::vector<int> digits_;
};

/// A tree automorphism truncated at depth N: one permutation of the d children
/// for every vertex of level < N. Portraits are immutable values.
class Portrait {
 public:
  static Portrait identity(int arity, int depth);

  /// Labels are given level by level in lexicographic vertex order, each as
  /// `arity` 0-based images. Throws ShapeError if any label is not a permutation.
  static Portrait from_flat_labels(int arity, int depth, std::vector<std::uint8_t> labels);

  /// The portrait with root label `root` and first-level states `states`.
  static Portrait assemble(const Permutation& root, std::span<const Portrait> states);

  int arity() const noexcept { return arity_; }
  int depth() const noexcept { return depth_; }

  /// Number of vertices on `level`.
  std::size_t width(int level) const;

  Permutation label(const Vertex& v) const;
  Permutation label(int level, std::size_t index) const;

  /// Image of child digit `digit` (0-based) under the label at (level, index).
  int label_image(int level, std::size_t index, int digit) const {
    return labels_[(offsets_[level] + index) * arity_ + digit];
  }

  bool is_identity() const noexcept;

  const std::vector<std::uint8_t>& flat_labels() const noexcept { return labels_; }

  friend bool operator==(const Portrait& a, const Portrait& b) {
    return a.arity_ == b.arity_ && a.depth_ == b.depth_ && a.labels_ == b.labels_;
  }

 private:
  Portrait(int arity, int depth, std::vector<std::uint8_t> labels);

  int arity_ = 1;
  int depth_ = 0;
  std::vector<std::size_t> offsets_;  // first label slot of each level
  std::vector<std::uint8_t> labels_;
};

/// u^g, digit by digit, reading each label at the original prefix.
Vertex apply(const Portrait& g, const Vertex& v);

/// The portrait of "g then h": apply(compose(g,h), v) == apply(h, apply(g, v)).
Portrait compose(const Portrait& g, const Portrait& h);

Portrait inverse(const Portrait& g);

/// The section g@u, of depth depth(g) - |u|.
Portrait state_at(const Portrait& g, const Vertex& u);

/// u*g: acts as g below u and trivially elsewhere; depth |u| + depth(g).
Portrait embed(const Vertex& u, const Portrait& g);

/// Action on the d^n level-n vertices, points numbered by lexicographic index.
Permutation leaf_permutation(const Portrait& g, int level);

nlohmann::json to_json(const Portrait& g);
Portrait portrait_from_json(const nlohmann::json& j);

/// Graphviz rendering, one node per vertex, internal vertices labelled in
/// cycle notation.
std::string to_dot(const Portrait& g, std::string_view name = "portrait");

}  // namespace hanoi
