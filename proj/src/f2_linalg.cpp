#include "hanoi/f2_linalg.hpp"

#include <algorithm>

#include "hanoi/errors.hpp"
#include "hanoi/wreath_words.hpp"

namespace hanoi {

namespace {

void check_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ShapeError("GF(2) dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// In-place reduced row echelon form; zero rows are dropped.
std::vector<F2Vector> reduce(std::vector<F2Vector> rows) {
  std::vector<F2Vector> basis;
  for (auto& row : rows) {
    for (const auto& b : basis) {
      if (row[b.leading()]) {
        row += b;
      }
    }
    if (row.is_zero()) {
      continue;
    }
    const std::size_t pivot = row.leading();
    for (auto& b : basis) {
      if (b[pivot]) {
        b += row;
      }
    }
    basis.push_back(std::move(row));
  }
  std::sort(basis.begin(), basis.end(),
            [](const F2Vector& x, const F2Vector& y) { return x.leading() < y.leading(); });
  return basis;
}

}  // namespace

F2Vector::F2Vector(std::initializer_list<int> bits) : bits_(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) {
    bits_[i++] = (b & 1) != 0;
  }
}

F2Vector F2Vector::from_bits(std::span<const int> bits) {
  F2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    v.bits_[i] = (bits[i] & 1) != 0;
  }
  return v;
}

std::size_t F2Vector::leading() const {
  const auto first = bits_.find_first();
  return first == boost::dynamic_bitset<>::npos ? dim() : first;
}

F2Vector& F2Vector::operator+=(const F2Vector& rhs) {
  check_dim(dim(), rhs.dim());
  bits_ ^= rhs.bits_;
  return *this;
}

F2Vector F2Vector::concat(const F2Vector& tail) const {
  F2Vector out(dim() + tail.dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    out.bits_[i] = bits_[i];
  }
  for (std::size_t i = 0; i < tail.dim(); ++i) {
    out.bits_[dim() + i] = tail.bits_[i];
  }
  return out;
}

std::vector<int> F2Vector::to_bits() const {
  std::vector<int> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    out[i] = bits_[i] ? 1 : 0;
  }
  return out;
}

std::string F2Vector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < dim(); ++i) {
    s += bits_[i] ? '1' : '0';
  }
  return s;
}

F2Subspace F2Subspace::span(std::size_t ambient_dim, std::span<const F2Vector> vectors) {
  for (const auto& v : vectors) {
    check_dim(ambient_dim, v.dim());
  }
  F2Subspace s(ambient_dim);
  s.basis_ = reduce(std::vector<F2Vector>(vectors.begin(), vectors.end()));
  return s;
}

bool F2Subspace::contains(const F2Vector& v) const {
  check_dim(ambient_, v.dim());
  F2Vector r = v;
  for (const auto& b : basis_) {
    if (r[b.leading()]) {
      r += b;
    }
  }
  return r.is_zero();
}

F2Subspace sum(const F2Subspace& a, const F2Subspace& b) {
  check_dim(a.ambient_dim(), b.ambient_dim());
  std::vector<F2Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return F2Subspace::span(a.ambient_dim(), rows);
}

F2Subspace intersect(const F2Subspace& a, const F2Subspace& b) {
  check_dim(a.ambient_dim(), b.ambient_dim());
  const std::size_t n = a.ambient_dim();
  const std::size_t p = a.dim();
  const std::size_t q = b.dim();
  // Row i is [v_i | e_i]; eliminating on the first n columns leaves rows
  // [0 | (x, y)] with sum x_i a_i = sum y_j b_j.
  std::vector<F2Vector> rows;
  for (std::size_t i = 0; i < p + q; ++i) {
    F2Vector tag(p + q);
    tag.set(i);
    rows.push_back((i < p ? a.basis()[i] : b.basis()[i - p]).concat(tag));
  }
  std::vector<F2Vector> pivots;
  std::vector<F2Vector> kernel;
  for (auto& row : rows) {
    for (const auto& piv : pivots) {
      if (row[piv.leading()]) {
        row += piv;
      }
    }
    if (row.leading() >= n) {
      kernel.push_back(row);
    } else {
      pivots.push_back(row);
    }
  }
  std::vector<F2Vector> vectors;
  for (const auto& k : kernel) {
    F2Vector v(n);
    for (std::size_t i = 0; i < p; ++i) {
      if (k[n + i]) {
        v += a.basis()[i];
      }
    }
    vectors.push_back(v);
  }
  return F2Subspace::span(n, vectors);
}

F2Subspace coordinate_subspace(std::size_t ambient_dim, std::size_t first, std::size_t last) {
  std::vector<F2Vector> vectors;
  for (std::size_t i = first; i < last && i < ambient_dim; ++i) {
    F2Vector e(ambient_dim);
    e.set(i);
    vectors.push_back(e);
  }
  return F2Subspace::span(ambient_dim, vectors);
}

nlohmann::json to_json(const F2Vector& v) { return v.to_bits(); }

nlohmann::json to_json(const F2Subspace& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& b : s.basis()) {
    rows.push_back(b.to_bits());
  }
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", rows}};
}

F2Vector stab1_vector(const Word& w) {
  const WordStates ws = word_states(WreathRecursion::hanoi(), w);
  if (!ws.root.is_identity()) {
    throw NotInStabilizerError("word '" + w.letters() + "' moves a first-level vertex");
  }
  F2Vector out(0);
  for (const auto& s : ws.states) {
    out = out.concat(parity_vector(s));
  }
  return out;
}

F2Vector block_sum(const F2Vector& v) {
  if (v.dim() % 3 != 0) {
    throw ShapeError("vector does not split into three blocks");
  }
  const std::size_t block = v.dim() / 3;
  F2Vector out(block);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i]) {
      out.flip(i % block);
    }
  }
  return out;
}

}  // namespace hanoi
