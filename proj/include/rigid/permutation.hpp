#ifndef RIGID_PERMUTATION_HPP
#define RIGID_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigid {

/// Permutation of {0,...,n-1} in one-line notation: p(i) = images()[i].
///
/// Composition is function application, (p * q)(i) = p(q(i)); every
/// diagrammatic translation in the library follows this convention.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("Permutation: images are not a bijection on 0..n-1");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(im));
  }

  static Permutation transposition(int n, int a, int b) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw std::invalid_argument("transposition: indices out of range");
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const {
    if (i < 0 || i >= degree()) throw std::out_of_range("Permutation: index out of range");
    return images_[static_cast<std::size_t>(i)];
  }

  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i)
      im[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(im));
  }

  /// Number of cycles, fixed points included.
  int cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int cycles = 0;
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      ++cycles;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)])
        seen[static_cast<std::size_t>(j)] = true;
    }
    return cycles;
  }

  /// +1 on even permutations, -1 on odd ones.
  int sign() const { return (degree() - cycle_count()) % 2 == 0 ? 1 : -1; }

  /// The same permutation inside S_{n+1}, with n a new fixed point.
  Permutation with_fixed_point_appended() const {
    std::vector<int> im = images_;
    im.push_back(degree());
    return Permutation(std::move(im));
  }

  std::string to_string() const {
    std::string out = "[";
    for (int i = 0; i < degree(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(images_[static_cast<std::size_t>(i)]);
    }
    out += ']';
    return out;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw std::invalid_argument("Permutation: degree mismatch in composition");
    std::vector<int> im(p.images_.size());
    for (int i = 0; i < p.degree(); ++i) im[static_cast<std::size_t>(i)] = p(q(i));
    return Permutation(std::move(im));
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace rigid

#endif  // RIGID_PERMUTATION_HPP
