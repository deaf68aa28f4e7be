#include "hanoi/automorphism.hpp"

#include <charconv>
#include <sstream>

#include "hanoi/errors.hpp"

namespace hanoi {

namespace {

constexpr std::size_t kMaxLabels = std::size_t{1} << 26;

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
  }
  return r;
}

void check_arity(int arity) {
  if (arity < 1 || arity > 255) {
    throw ShapeError("arity must lie in 1..255, got " + std::to_string(arity));
  }
}

// images[k][i] = lex index (0-based) of the image of the i-th level-k vertex.
std::vector<std::vector<std::size_t>> vertex_images(const Portrait& g, int levels) {
  const auto d = static_cast<std::size_t>(g.arity());
  std::vector<std::vector<std::size_t>> images(levels + 1);
  images[0] = {0};
  for (int k = 0; k < levels; ++k) {
    const auto& cur = images[k];
    auto& next = images[k + 1];
    next.resize(cur.size() * d);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t x = 0; x < d; ++x) {
        next[i * d + x] = cur[i] * d + g.label_image(k, i, static_cast<int>(x));
      }
    }
  }
  return images;
}

}  // namespace

// ---------------------------------------------------------------- Vertex

Vertex::Vertex(std::vector<int> digits) : digits_(std::move(digits)) {
  for (int x : digits_) {
    if (x < 1) {
      throw ShapeError("vertex digits are 1-based");
    }
  }
}

Vertex Vertex::from_lex_index(int arity, int level, std::size_t lex_index) {
  check_arity(arity);
  const std::size_t width = ipow(arity, level);
  if (lex_index < 1 || lex_index > width) {
    throw ShapeError("lexicographic index out of range");
  }
  std::vector<int> digits(level);
  std::size_t idx = lex_index - 1;
  for (int k = level - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(idx % arity) + 1;
    idx /= arity;
  }
  return Vertex(std::move(digits));
}

Vertex Vertex::parse(std::string_view text) {
  std::vector<int> digits;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
      throw ParseError("bad vertex digit '" + std::string(token) + "'");
    }
    digits.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
    if (text.empty()) {
      throw ParseError("trailing comma in vertex");
    }
  }
  return Vertex(std::move(digits));
}

std::size_t Vertex::lex_index(int arity) const {
  if (!valid_for(arity)) {
    throw ShapeError("vertex " + to_string() + " has a digit outside 1.." + std::to_string(arity));
  }
  std::size_t idx = 0;
  for (int x : digits_) {
    idx = idx * arity + static_cast<std::size_t>(x - 1);
  }
  return idx + 1;
}

Vertex Vertex::child(int digit) const {
  auto digits = digits_;
  digits.push_back(digit);
  return Vertex(std::move(digits));
}

Vertex Vertex::prefix(int level) const {
  if (level < 0 || level > this->level()) {
    throw DepthError("prefix level out of range");
  }
  return Vertex(std::vector<int>(digits_.begin(), digits_.begin() + level));
}

Vertex Vertex::concat(const Vertex& tail) const {
  auto digits = digits_;
  digits.insert(digits.end(), tail.digits_.begin(), tail.digits_.end());
  return Vertex(std::move(digits));
}

bool Vertex::valid_for(int arity) const noexcept {
  for (int x : digits_) {
    if (x < 1 || x > arity) {
      return false;
    }
  }
  return true;
}

std::string Vertex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(digits_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- Portrait

Portrait::Portrait(int arity, int depth, std::vector<std::uint8_t> labels)
    : arity_(arity), depth_(depth), labels_(std::move(labels)) {
  offsets_.resize(depth_ + 1);
  std::size_t total = 0;
  for (int k = 0; k <= depth_; ++k) {
    offsets_[k] = total;
    total += ipow(arity_, k);
  }
}

Portrait Portrait::identity(int arity, int depth) {
  check_arity(arity);
  if (depth < 0) {
    throw DepthError("negative portrait depth");
  }
  std::size_t count = 0;
  for (int k = 0; k < depth; ++k) {
    count += ipow(arity, k);
    if (count * arity > kMaxLabels) {
      throw ResourceError("portrait of depth " + std::to_string(depth) + " is too large");
    }
  }
  std::vector<std::uint8_t> labels(count * arity);
  for (std::size_t v = 0; v < count; ++v) {
    for (int x = 0; x < arity; ++x) {
      labels[v * arity + x] = static_cast<std::uint8_t>(x);
    }
  }
  return Portrait(arity, depth, std::move(labels));
}

Portrait Portrait::from_flat_labels(int arity, int depth, std::vector<std::uint8_t> labels) {
  const Portrait id = identity(arity, depth);
  if (labels.size() != id.labels_.size()) {
    throw ShapeError("label buffer has the wrong size for arity " + std::to_string(arity) +
                     " and depth " + std::to_string(depth));
  }
  std::vector<bool> seen(arity);
  for (std::size_t v = 0; v < labels.size(); v += arity) {
    std::fill(seen.begin(), seen.end(), false);
    for (int x = 0; x < arity; ++x) {
      const auto y = labels[v + x];
      if (y >= arity || seen[y]) {
        throw ShapeError("portrait label is not a permutation");
      }
      seen[y] = true;
    }
  }
  return Portrait(arity, depth, std::move(labels));
}

Portrait Portrait::assemble(const Permutation& root, std::span<const Portrait> states) {
  const int d = static_cast<int>(root.degree());
  if (static_cast<int>(states.size()) != d) {
    throw ShapeError("need one state per child of the root");
  }
  check_arity(d);
  const int sub_depth = states.front().depth();
  for (const auto& s : states) {
    if (s.arity() != d || s.depth() != sub_depth) {
      throw ShapeError("states must share arity and depth");
    }
  }
  Portrait out = identity(d, sub_depth + 1);
  for (int x = 0; x < d; ++x) {
    out.labels_[x] = static_cast<std::uint8_t>(root[static_cast<Point>(x)]);
  }
  for (int j = 0; j < sub_depth; ++j) {
    const std::size_t w = ipow(d, j);
    for (int x = 0; x < d; ++x) {
      const auto& src = states[x].labels_;
      std::copy_n(src.begin() + states[x].offsets_[j] * d, w * d,
                  out.labels_.begin() + (out.offsets_[j + 1] + x * w) * d);
    }
  }
  return out;
}

std::size_t Portrait::width(int level) const { return ipow(arity_, level); }

Permutation Portrait::label(int level, std::size_t index) const {
  if (level < 0 || level >= depth_) {
    throw DepthError("no label at level " + std::to_string(level) + " of a depth-" +
                     std::to_string(depth_) + " portrait");
  }
  if (index >= width(level)) {
    throw ShapeError("vertex index out of range");
  }
  std::vector<Point> images(arity_);
  for (int x = 0; x < arity_; ++x) {
    images[x] = label_image(level, index, x);
  }
  return Permutation(std::move(images));
}

Permutation Portrait::label(const Vertex& v) const {
  return label(v.level(), v.lex_index(arity_) - 1);
}

bool Portrait::is_identity() const noexcept {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] != i % arity_) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- operations

Vertex apply(const Portrait& g, const Vertex& v) {
  if (v.level() > g.depth()) {
    throw DepthError("vertex of level " + std::to_string(v.level()) +
                     " is below the depth-" + std::to_string(g.depth()) + " portrait");
  }
  if (!v.valid_for(g.arity())) {
    throw ShapeError("vertex digit outside 1.." + std::to_string(g.arity()));
  }
  std::vector<int> out(v.level());
  std::size_t index = 0;
  for (int k = 0; k < v.level(); ++k) {
    const int digit = v[k] - 1;
    out[k] = g.label_image(k, index, digit) + 1;
    index = index * g.arity() + digit;
  }
  return Vertex(std::move(out));
}

Portrait compose(const Portrait& g, const Portrait& h) {
  if (g.arity() != h.arity() || g.depth() != h.depth()) {
    throw ShapeError("cannot compose portraits of different arity or depth");
  }
  const int d = g.arity();
  const auto images = vertex_images(g, g.depth() > 0 ? g.depth() - 1 : 0);
  std::vector<std::uint8_t> labels(g.flat_labels().size());
  std::size_t slot = 0;
  for (int k = 0; k < g.depth(); ++k) {
    for (std::size_t i = 0; i < g.width(k); ++i) {
      const std::size_t target = images[k][i];
      for (int x = 0; x < d; ++x) {
        labels[slot++] =
            static_cast<std::uint8_t>(h.label_image(k, target, g.label_image(k, i, x)));
      }
    }
  }
  return Portrait::from_flat_labels(d, g.depth(), std::move(labels));
}

Portrait inverse(const Portrait& g) {
  const int d = g.arity();
  const auto images = vertex_images(g, g.depth() > 0 ? g.depth() - 1 : 0);
  std::vector<std::uint8_t> labels(g.flat_labels().size());
  std::size_t offset = 0;
  for (int k = 0; k < g.depth(); ++k) {
    for (std::size_t i = 0; i < g.width(k); ++i) {
      const std::size_t target = offset + images[k][i];
      for (int x = 0; x < d; ++x) {
        labels[target * d + g.label_image(k, i, x)] = static_cast<std::uint8_t>(x);
      }
    }
    offset += g.width(k);
  }
  return Portrait::from_flat_labels(d, g.depth(), std::move(labels));
}

Portrait state_at(const Portrait& g, const Vertex& u) {
  if (u.level() > g.depth()) {
    throw DepthError("state requested below the portrait depth");
  }
  const int d = g.arity();
  const std::size_t base = u.lex_index(d) - 1;
  const int sub_depth = g.depth() - u.level();
  std::vector<std::uint8_t> labels;
  for (int j = 0; j < sub_depth; ++j) {
    const std::size_t w = ipow(d, j);
    for (std::size_t i = 0; i < w; ++i) {
      for (int x = 0; x < d; ++x) {
        labels.push_back(static_cast<std::uint8_t>(g.label_image(u.level() + j, base * w + i, x)));
      }
    }
  }
  return Portrait::from_flat_labels(d, sub_depth, std::move(labels));
}

Portrait embed(const Vertex& u, const Portrait& g) {
  const int d = g.arity();
  const std::size_t base = u.lex_index(d) - 1;
  const int depth = u.level() + g.depth();
  std::vector<std::uint8_t> labels = Portrait::identity(d, depth).flat_labels();
  std::size_t offset = 0;
  for (int k = 0; k < u.level(); ++k) {
    offset += ipow(d, k);
  }
  for (int j = 0; j < g.depth(); ++j) {
    const std::size_t w = ipow(d, j);
    for (std::size_t i = 0; i < w; ++i) {
      for (int x = 0; x < d; ++x) {
        labels[(offset + base * w + i) * d + x] = static_cast<std::uint8_t>(g.label_image(j, i, x));
      }
    }
    offset += ipow(d, u.level() + j);
  }
  return Portrait::from_flat_labels(d, depth, std::move(labels));
}

Permutation leaf_permutation(const Portrait& g, int level) {
  if (level < 0 || level > g.depth()) {
    throw DepthError("level " + std::to_string(level) + " exceeds portrait depth " +
                     std::to_string(g.depth()));
  }
  const auto images = vertex_images(g, level);
  if (images[level].size() > kMaxDegree) {
    throw ResourceError("level too wide for a permutation");
  }
  std::vector<Point> out(images[level].size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Point>(images[level][i]);
  }
  return Permutation(std::move(out));
}

// ---------------------------------------------------------------- export

nlohmann::json to_json(const Portrait& g) {
  nlohmann::json labels = nlohmann::json::object();
  for (int k = 0; k < g.depth(); ++k) {
    for (std::size_t i = 0; i < g.width(k); ++i) {
      const Vertex v = Vertex::from_lex_index(g.arity(), k, i + 1);
      labels[v.to_string()] = g.label(k, i).one_based();
    }
  }
  return {{"arity", g.arity()}, {"depth", g.depth()}, {"labels", labels}};
}

Portrait portrait_from_json(const nlohmann::json& j) {
  try {
    const int arity = j.at("arity").get<int>();
    const int depth = j.at("depth").get<int>();
    std::vector<std::uint8_t> labels = Portrait::identity(arity, depth).flat_labels();
    std::vector<std::size_t> offsets(depth + 1, 0);
    for (int k = 1; k <= depth; ++k) {
      offsets[k] = offsets[k - 1] + ipow(arity, k - 1);
    }
    for (const auto& [key, value] : j.at("labels").items()) {
      const Vertex v = Vertex::parse(key);
      if (v.level() >= depth) {
        throw DepthError("label for vertex '" + key + "' at or below the portrait depth");
      }
      const auto images = value.get<std::vector<int>>();
      if (static_cast<int>(images.size()) != arity) {
        throw ShapeError("label for vertex '" + key + "' has the wrong length");
      }
      const std::size_t slot = offsets[v.level()] + v.lex_index(arity) - 1;
      for (int x = 0; x < arity; ++x) {
        labels[slot * arity + x] = static_cast<std::uint8_t>(images[x] - 1);
      }
    }
    return Portrait::from_flat_labels(arity, depth, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed portrait JSON: ") + e.what());
  }
}

std::string to_dot(const Portrait& g, std::string_view name) {
  auto node_id = [](const Vertex& v) {
    std::string id = "v";
    for (int x : v.digits()) {
      id += '_' + std::to_string(x);
    }
    return id;
  };
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int k = 0; k <= g.depth(); ++k) {
    for (std::size_t i = 0; i < g.width(k); ++i) {
      const Vertex v = Vertex::from_lex_index(g.arity(), k, i + 1);
      if (k < g.depth()) {
        os << "  " << node_id(v) << " [label=\"" << g.label(k, i).cycle_string() << "\"];\n";
      } else {
        os << "  " << node_id(v) << " [shape=point];\n";
      }
      if (k > 0) {
        os << "  " << node_id(v.prefix(k - 1)) << " -> " << node_id(v) << " [label=\""
           << v[k - 1] << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace hanoi
