#include "hanoi/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hanoi/errors.hpp"

namespace hanoi {

namespace detail {

struct ChainLevel {
  Point base = 0;
  std::vector<std::size_t> gens;        // indices into StabilizerChain::strong
  std::vector<Point> orbit;             // orbit of `base`, discovery order
  std::vector<std::int32_t> position;   // point -> index into orbit, or -1
  std::vector<Permutation> transversal; // transversal[i] maps base to orbit[i]
  std::vector<Permutation> inverse;     // inverse[i] = transversal[i]^-1
};

struct StabilizerChain {
  std::size_t degree = 0;
  std::vector<Permutation> strong;
  std::vector<ChainLevel> levels;

  // Sifts g through levels [from, end). Returns the residue and the level at
  // which sifting stopped (levels.size() when it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels.size(); ++l) {
      const auto& lev = levels[l];
      const auto pos = lev.position[g[lev.base]];
      if (pos < 0) {
        return {std::move(g), l};
      }
      g = g * lev.inverse[pos];
    }
    return {std::move(g), levels.size()};
  }

  BigInt order() const {
    BigInt n = 1;
    for (const auto& lev : levels) {
      n *= lev.orbit.size();
    }
    return n;
  }
};

namespace {

ChainLevel make_level(std::size_t degree, Point base) {
  ChainLevel lev;
  lev.base = base;
  lev.orbit = {base};
  lev.position.assign(degree, -1);
  lev.position[base] = 0;
  lev.transversal = {Permutation(degree)};
  lev.inverse = {Permutation(degree)};
  return lev;
}

}  // namespace

// Incremental deterministic Schreier–Sims. Every Schreier generator of every
// level is sifted exactly once; a pair (orbit point, generator) stays
// verified because transversal entries are never replaced.
class ChainBuilder {
 public:
  ChainBuilder(std::size_t degree, std::span<const Point> prefix) {
    chain_.degree = degree;
    for (Point p : prefix) {
      if (p >= degree) {
        throw ShapeError("base point outside the permutation domain");
      }
      chain_.levels.push_back(make_level(degree, p));
      checked_.emplace_back();
    }
  }

  const StabilizerChain& chain() const { return chain_; }

  bool contains(const Permutation& g) const {
    auto [residue, level] = chain_.strip(g, 0);
    return level == chain_.levels.size() && residue.is_identity();
  }

  // Returns false when g was already in the group.
  bool add_generator(const Permutation& g) {
    if (g.degree() != chain_.degree) {
      throw ShapeError("generator degree does not match the group degree");
    }
    auto [residue, level] = chain_.strip(g, 0);
    if (level == chain_.levels.size() && residue.is_identity()) {
      return false;
    }
    complete(insert(residue));
    return true;
  }

  StabilizerChain release() { return std::move(chain_); }

 private:
  // Adds h as a strong generator of every level whose base prefix it fixes,
  // opening a new level if it fixes every base point. Returns the deepest
  // level it was added to.
  std::size_t insert(const Permutation& h) {
    auto& levels = chain_.levels;
    std::size_t j = 0;
    while (j < levels.size() && h[levels[j].base] == levels[j].base) {
      ++j;
    }
    if (j == levels.size()) {
      Point moved = 0;
      while (h[moved] == moved) {
        ++moved;
      }
      levels.push_back(make_level(chain_.degree, moved));
      checked_.emplace_back();
    }
    chain_.strong.push_back(h);
    const std::size_t idx = chain_.strong.size() - 1;
    for (std::size_t l = 0; l <= j; ++l) {
      levels[l].gens.push_back(idx);
      extend_orbit(l);
    }
    return j;
  }

  void extend_orbit(std::size_t l) {
    auto& lev = chain_.levels[l];
    const auto& strong = chain_.strong;
    const std::size_t newest = lev.gens.back();
    std::deque<std::size_t> queue;
    const auto visit = [&](std::size_t from, std::size_t gen) {
      const Point y = strong[gen][lev.orbit[from]];
      if (lev.position[y] >= 0) {
        return;
      }
      lev.position[y] = static_cast<std::int32_t>(lev.orbit.size());
      lev.orbit.push_back(y);
      lev.transversal.push_back(lev.transversal[from] * strong[gen]);
      lev.inverse.push_back(lev.transversal.back().inverse());
      queue.push_back(lev.orbit.size() - 1);
    };
    const std::size_t old_size = lev.orbit.size();
    for (std::size_t i = 0; i < old_size; ++i) {
      visit(i, newest);
    }
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t gen : lev.gens) {
        visit(i, gen);
      }
    }
  }

  // Levels deeper than `start` are complete on entry.
  void complete(std::size_t start) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
    while (i >= 0) {
      const std::size_t inserted_at = scan_level(static_cast<std::size_t>(i));
      if (inserted_at == kNone) {
        --i;
      } else {
        i = static_cast<std::ptrdiff_t>(inserted_at);
      }
    }
  }

  // Sifts the unchecked Schreier generators of level i. Stops at the first
  // nontrivial residue, inserts it and returns its level.
  std::size_t scan_level(std::size_t i) {
    for (std::size_t p = 0; p < chain_.levels[i].orbit.size(); ++p) {
      auto& checked = checked_[i];
      if (checked.size() <= p) {
        checked.resize(chain_.levels[i].orbit.size());
      }
      for (std::size_t q = 0; q < chain_.levels[i].gens.size(); ++q) {
        auto& row = checked_[i][p];
        if (row.size() <= q) {
          row.resize(chain_.levels[i].gens.size(), false);
        }
        if (row[q]) {
          continue;
        }
        row[q] = true;
        const auto& lev = chain_.levels[i];
        const Permutation& s = chain_.strong[lev.gens[q]];
        const Permutation us = lev.transversal[p] * s;
        const auto target = lev.position[us[lev.base]];
        if (us == lev.transversal[target]) {
          continue;
        }
        auto [residue, level] = chain_.strip(us * lev.inverse[target], i + 1);
        if (level == chain_.levels.size() && residue.is_identity()) {
          continue;
        }
        return insert(residue);
      }
    }
    return kNone;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  StabilizerChain chain_;
  std::vector<std::vector<std::vector<bool>>> checked_;
};

}  // namespace detail

namespace {

std::vector<Permutation> clean_generators(std::size_t degree, std::vector<Permutation> gens) {
  std::set<Permutation> seen;
  std::vector<Permutation> out;
  for (auto& g : gens) {
    if (g.degree() != degree) {
      throw ShapeError("generator of degree " + std::to_string(g.degree()) +
                       " in a group of degree " + std::to_string(degree));
    }
    if (g.is_identity() || !seen.insert(g).second) {
      continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::size_t tree_depth(std::size_t degree, int arity) {
  std::size_t depth = 0;
  std::size_t n = 1;
  while (n < degree) {
    n *= static_cast<std::size_t>(arity);
    ++depth;
  }
  if (n != degree) {
    throw InvalidBlocksError("degree " + std::to_string(degree) + " is not a power of " +
                             std::to_string(arity));
  }
  return depth;
}

std::size_t block_size(std::size_t degree, int arity, int level) {
  if (arity < 1) {
    throw InvalidBlocksError("arity must be positive");
  }
  const std::size_t depth = arity == 1 ? 0 : tree_depth(degree, arity);
  if (level < 0 || static_cast<std::size_t>(level) > depth) {
    throw DepthError("level " + std::to_string(level) + " exceeds the tree depth " +
                     std::to_string(depth));
  }
  std::size_t size = 1;
  for (std::size_t k = static_cast<std::size_t>(level); k < depth; ++k) {
    size *= static_cast<std::size_t>(arity);
  }
  return size;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix)
    : degree_(degree), generators_(clean_generators(degree, std::move(generators))) {
  detail::ChainBuilder builder(degree, base_prefix);
  for (const auto& g : generators_) {
    builder.add_generator(g);
  }
  chain_ = std::make_shared<const detail::StabilizerChain>(builder.release());
  order_ = chain_->order();
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::shared_ptr<const detail::StabilizerChain> chain)
    : degree_(degree), generators_(std::move(generators)), chain_(std::move(chain)) {
  order_ = chain_->order();
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) {
    throw ShapeError("membership test with degree " + std::to_string(g.degree()) +
                     " in a group of degree " + std::to_string(degree_));
  }
  auto [residue, level] = chain_->strip(g, 0);
  return level == chain_->levels.size() && residue.is_identity();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& lev : chain_->levels) {
    out.push_back(lev.base);
  }
  return out;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& lev : chain_->levels) {
    out.push_back(lev.orbit.size());
  }
  return out;
}

const std::vector<Permutation>& PermGroup::strong_generators() const { return chain_->strong; }

PermGroup PermGroup::chain_subgroup(std::size_t level, std::size_t degree) const {
  const auto& levels = chain_->levels;
  if (level > levels.size()) {
    throw DepthError("chain has only " + std::to_string(levels.size()) + " levels");
  }
  if (degree > degree_) {
    throw ShapeError("restriction degree exceeds the group degree");
  }
  const auto restrict = [&](const Permutation& p) {
    std::vector<Point> images(p.images().begin(), p.images().begin() + degree);
    return Permutation(std::move(images));  // throws unless [0, degree) is invariant
  };

  auto sub = std::make_shared<detail::StabilizerChain>();
  sub->degree = degree;
  std::vector<std::ptrdiff_t> remap(chain_->strong.size(), -1);
  if (level < levels.size()) {
    for (std::size_t idx : levels[level].gens) {
      remap[idx] = static_cast<std::ptrdiff_t>(sub->strong.size());
      sub->strong.push_back(restrict(chain_->strong[idx]));
    }
  }
  for (std::size_t l = level; l < levels.size(); ++l) {
    const auto& src = levels[l];
    if (src.base >= degree) {
      throw ShapeError("base point outside the restricted domain");
    }
    detail::ChainLevel lev;
    lev.base = src.base;
    lev.orbit = src.orbit;
    lev.position.assign(src.position.begin(), src.position.begin() + degree);
    for (std::size_t idx : src.gens) {
      lev.gens.push_back(static_cast<std::size_t>(remap.at(idx)));
    }
    for (std::size_t i = 0; i < src.orbit.size(); ++i) {
      lev.transversal.push_back(restrict(src.transversal[i]));
      lev.inverse.push_back(restrict(src.inverse[i]));
    }
    sub->levels.push_back(std::move(lev));
  }
  auto gens = clean_generators(degree, sub->strong);
  return PermGroup(degree, std::move(gens), std::move(sub));
}

std::vector<Point> orbit(const PermGroup& g, Point point) {
  if (point >= g.degree()) {
    throw ShapeError("orbit point outside the domain");
  }
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : g.generators()) {
      const Point y = s[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> elements) {
  for (const auto& e : elements) {
    if (!g.contains(e)) {
      throw MembershipError("normal closure requested for an element outside the group");
    }
  }
  detail::ChainBuilder builder(g.degree(), {});
  std::vector<Permutation> gens;
  for (const auto& e : elements) {
    if (builder.add_generator(e)) {
      gens.push_back(e);
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation c = s.inverse() * gens[i] * s;
      if (builder.add_generator(c)) {
        gens.push_back(std::move(c));
      }
    }
  }
  return PermGroup(g.degree(), std::move(gens),
                   std::make_shared<const detail::StabilizerChain>(builder.release()));
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      comms.push_back(commutator(gens[i], gens[j]));
    }
  }
  return normal_closure(g, comms);
}

Permutation block_permutation(const Permutation& p, int arity, int level) {
  const std::size_t size = block_size(p.degree(), arity, level);
  const std::size_t blocks = p.degree() / size;
  std::vector<Point> images(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t target = p[static_cast<Point>(b * size)] / size;
    for (std::size_t x = b * size; x < (b + 1) * size; ++x) {
      if (p[static_cast<Point>(x)] / size != target) {
        throw InvalidBlocksError("permutation splits the level-" + std::to_string(level) +
                                 " block " + std::to_string(b + 1));
      }
    }
    images[b] = static_cast<Point>(target);
  }
  return Permutation(std::move(images));
}

PermGroup block_action(const PermGroup& g, int arity, int level) {
  const std::size_t size = block_size(g.degree(), arity, level);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    gens.push_back(block_permutation(s, arity, level));
  }
  return PermGroup(g.degree() / size, std::move(gens));
}

namespace {

// Leaves are points 0..m-1 and the level-`level` vertices are m..m+blocks-1.
std::vector<Permutation> with_block_points(const PermGroup& g, int arity, int level) {
  const std::size_t m = g.degree();
  const std::size_t blocks = m / block_size(m, arity, level);
  std::vector<Permutation> augmented;
  for (const auto& s : g.generators()) {
    const Permutation b = block_permutation(s, arity, level);
    std::vector<Point> images(s.images());
    images.reserve(m + blocks);
    for (std::size_t i = 0; i < blocks; ++i) {
      images.push_back(static_cast<Point>(m + b[static_cast<Point>(i)]));
    }
    augmented.emplace_back(std::move(images));
  }
  return augmented;
}

}  // namespace

PermGroup kernel_of_level_action(const PermGroup& g, int arity, int level) {
  const std::size_t m = g.degree();
  const std::size_t blocks = m / block_size(m, arity, level);
  // Forcing every vertex point to the front of the base makes the kernel the
  // chain stabilizer at depth `blocks`.
  std::vector<Point> prefix(blocks);
  for (std::size_t i = 0; i < blocks; ++i) {
    prefix[i] = static_cast<Point>(m + i);
  }
  const PermGroup big(m + blocks, with_block_points(g, arity, level), std::move(prefix));
  return big.chain_subgroup(blocks, m);
}

PermGroup block_stabilizer(const PermGroup& g, int arity, int level, std::size_t block) {
  const std::size_t m = g.degree();
  const std::size_t blocks = m / block_size(m, arity, level);
  if (block >= blocks) {
    throw ShapeError("block index out of range");
  }
  const PermGroup big(m + blocks, with_block_points(g, arity, level),
                      {static_cast<Point>(m + block)});
  return big.chain_subgroup(1, m);
}

bool is_elementary_abelian(const PermGroup& g, unsigned p) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].pow(p).is_identity()) {
      return false;
    }
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) {
        return false;
      }
    }
  }
  return true;
}

bool is_subgroup(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) {
    return false;
  }
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& x) { return g.contains(x); });
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(g, h)) {
    return false;
  }
  for (const auto& x : h.generators()) {
    for (const auto& s : g.generators()) {
      if (!h.contains(s.inverse() * x * s)) {
        return false;
      }
    }
  }
  return true;
}

BigInt subgroup_index(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(g, h)) {
    throw NotSubgroupError("index requested for a group that is not a subgroup");
  }
  return g.order() / h.order();
}

std::string to_string(const BigInt& n) { return n.str(); }

nlohmann::json to_json(const PermGroup& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& s : g.generators()) {
    gens.push_back(s.one_based());
  }
  return {{"degree", g.degree()}, {"generators", gens}, {"order", to_string(g.order())}};
}

}  // namespace hanoi
