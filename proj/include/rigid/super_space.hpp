#ifndef RIGID_SUPER_SPACE_HPP
#define RIGID_SUPER_SPACE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rigid {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) % 2u);
}

/// Finite-dimensional Z/2-graded space over the rationals, described by
/// the parity of each ordered basis vector. The basis order is part of
/// the identity of the space: equality is order-sensitive.
class SuperSpace {
 public:
  SuperSpace() = default;  // zero-dimensional
  explicit SuperSpace(std::vector<Parity> parities) : parities_(std::move(parities)) {}

  /// The monoidal unit: one even basis vector.
  static SuperSpace unit() { return even_space(1); }

  static SuperSpace even_space(std::size_t d) { return SuperSpace(std::vector<Parity>(d, Parity::even)); }
  static SuperSpace odd_space(std::size_t q) { return SuperSpace(std::vector<Parity>(q, Parity::odd)); }

  /// (p|q): p even basis vectors followed by q odd ones.
  static SuperSpace mixed(std::size_t p, std::size_t q) {
    std::vector<Parity> par(p + q, Parity::even);
    for (std::size_t i = p; i < p + q; ++i) par[i] = Parity::odd;
    return SuperSpace(std::move(par));
  }

  /// Parses the canonical parity string, e.g. "eeo".
  static SuperSpace from_parity_string(std::string_view text) {
    std::vector<Parity> par;
    par.reserve(text.size());
    for (char ch : text) {
      if (ch == 'e')
        par.push_back(Parity::even);
      else if (ch == 'o')
        par.push_back(Parity::odd);
      else
        throw std::invalid_argument("parity string must contain only 'e' and 'o'");
    }
    return SuperSpace(std::move(par));
  }

  std::size_t dim() const { return parities_.size(); }

  std::size_t even_dim() const {
    std::size_t d = 0;
    for (Parity p : parities_)
      if (p == Parity::even) ++d;
    return d;
  }

  std::size_t odd_dim() const { return dim() - even_dim(); }

  Parity parity(std::size_t i) const {
    if (i >= parities_.size()) throw std::out_of_range("SuperSpace: basis index out of range");
    return parities_[i];
  }

  const std::vector<Parity>& parities() const { return parities_; }

  std::string parity_string() const {
    std::string out;
    out.reserve(parities_.size());
    for (Parity p : parities_) out += (p == Parity::even ? 'e' : 'o');
    return out;
  }

  bool operator==(const SuperSpace&) const = default;

 private:
  std::vector<Parity> parities_;
};

/// Basis of V⊗W indexed by pairs in row-major order: V index outer,
/// W index inner; parity of (i,j) is the parity sum.
inline SuperSpace tensor(const SuperSpace& v, const SuperSpace& w) {
  std::vector<Parity> par;
  par.reserve(v.dim() * w.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) par.push_back(parity_sum(v.parity(i), w.parity(j)));
  return SuperSpace(std::move(par));
}

inline SuperSpace tensor_power(const SuperSpace& v, int n) {
  if (n < 0) throw std::invalid_argument("tensor_power: negative exponent");
  SuperSpace out = SuperSpace::unit();
  for (int k = 0; k < n; ++k) out = tensor(out, v);
  return out;
}

/// The dual carries the same parity sequence as the space itself.
inline SuperSpace dual(const SuperSpace& v) { return v; }

}  // namespace rigid

#endif  // RIGID_SUPER_SPACE_HPP
