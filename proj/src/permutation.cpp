#include "hanoi/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "hanoi/errors.hpp"

namespace hanoi {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) {
    throw ResourceError("permutation degree " + std::to_string(degree) +
                        " exceeds the supported maximum");
  }
  for (std::size_t i = 0; i < degree; ++i) {
    images_[i] = static_cast<Point>(i);
  }
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) {
    throw ResourceError("permutation degree exceeds the supported maximum");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw ShapeError("image list is not a permutation");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (int x : images) {
    if (x < 1 || static_cast<std::size_t>(x) > images.size()) {
      throw ShapeError("permutation image " + std::to_string(x) + " out of range");
    }
    zero_based.push_back(static_cast<Point>(x - 1));
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::transposition(std::size_t degree, Point i, Point j) {
  Permutation p(degree);
  if (i >= degree || j >= degree) {
    throw ShapeError("transposition point out of range");
  }
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) {
    throw ShapeError("cannot compose permutations of degree " + std::to_string(degree()) +
                     " and " + std::to_string(rhs.degree()));
  }
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[i] = rhs.images_[images_[i]];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[images_[i]] = static_cast<Point>(i);
  }
  return out;
}

Permutation Permutation::pow(unsigned k) const {
  Permutation result(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1U) {
      result = result * base;
    }
    base = base * base;
    k >>= 1U;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) {
    throw ShapeError("cannot extend a permutation to a smaller degree");
  }
  Permutation out(degree);
  std::copy(images_.begin(), images_.end(), out.images_.begin());
  return out;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      continue;
    }
    any = true;
    os << '(';
    bool first = true;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) {
        os << ' ';
      }
      os << x + 1;
      first = false;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (Point x : images_) {
    out.push_back(static_cast<int>(x) + 1);
  }
  return out;
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  return x.inverse() * y.inverse() * x * y;
}

}  // namespace hanoi

std::size_t std::hash<hanoi::Permutation>::operator()(const hanoi::Permutation& p) const noexcept {
  // FNV-1a over the image list.
  std::size_t h = 1469598103934665603ULL;
  for (hanoi::Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}
