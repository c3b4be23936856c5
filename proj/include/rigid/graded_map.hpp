#ifndef RIGID_GRADED_MAP_HPP
#define RIGID_GRADED_MAP_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rigid/group_algebra.hpp"
#include "rigid/permutation.hpp"
#include "rigid/rational.hpp"
#include "rigid/super_space.hpp"

namespace rigid {

/// Parity-preserving linear map between super spaces, stored as a dense
/// target-dim × source-dim matrix of exact rationals in row-major order.
///
/// Only even maps are representable: the constructor rejects any nonzero
/// entry whose target and source parities differ. Because of that, the
/// tensor product of maps needs no Koszul correction; all signs of the
/// braided structure live in braiding()/shuffle().
class GradedMap {
 public:
  GradedMap(SuperSpace source, SuperSpace target, std::vector<Rational> entries)
      : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    if (entries_.size() != source_.dim() * target_.dim())
      throw std::invalid_argument("GradedMap: entry count does not match dimensions");
    for (std::size_t i = 0; i < target_.dim(); ++i)
      for (std::size_t j = 0; j < source_.dim(); ++j)
        if (target_.parity(i) != source_.parity(j) && entry(i, j) != 0)
          throw std::invalid_argument("GradedMap: nonzero entry violates parity preservation");
  }

  static GradedMap zero(const SuperSpace& source, const SuperSpace& target) {
    return GradedMap(source, target, std::vector<Rational>(source.dim() * target.dim()));
  }

  static GradedMap identity(const SuperSpace& v) {
    std::vector<Rational> e(v.dim() * v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) e[i * v.dim() + i] = 1;
    return GradedMap(v, v, std::move(e));
  }

  /// 1×1 map on the unit carrying a scalar.
  static GradedMap scalar_map(const Rational& value) {
    return GradedMap(SuperSpace::unit(), SuperSpace::unit(), {value});
  }

  const SuperSpace& source() const { return source_; }
  const SuperSpace& target() const { return target_; }
  std::size_t rows() const { return target_.dim(); }
  std::size_t cols() const { return source_.dim(); }

  const Rational& entry(std::size_t row, std::size_t col) const {
    return entries_[row * cols() + col];
  }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const {
    for (const Rational& q : entries_)
      if (q != 0) return false;
    return true;
  }

  /// The value of a 1×1 map.
  Rational scalar() const {
    if (rows() != 1 || cols() != 1) throw std::invalid_argument("scalar: map is not 1x1");
    return entries_[0];
  }

  /// Rank over the rationals, by Gaussian elimination on a copy.
  std::size_t rank() const {
    std::vector<Rational> work = entries_;
    const std::size_t m = rows(), n = cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
      std::size_t pivot = r;
      while (pivot < m && work[pivot * n + col] == 0) ++pivot;
      if (pivot == m) continue;
      for (std::size_t j = 0; j < n; ++j) std::swap(work[r * n + j], work[pivot * n + j]);
      const Rational inv = 1 / work[r * n + col];
      for (std::size_t j = col; j < n; ++j) work[r * n + j] *= inv;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == r || work[i * n + col] == 0) continue;
        const Rational factor = work[i * n + col];
        for (std::size_t j = col; j < n; ++j) work[i * n + j] -= factor * work[r * n + j];
      }
      ++r;
    }
    return r;
  }

  GradedMap operator-() const {
    std::vector<Rational> e(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) e[k] = -entries_[k];
    return GradedMap(source_, target_, std::move(e));
  }

  friend GradedMap operator+(const GradedMap& a, const GradedMap& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_)
      throw std::invalid_argument("GradedMap: shape mismatch in addition");
    std::vector<Rational> e(a.entries_.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.entries_[k] + b.entries_[k];
    return GradedMap(a.source_, a.target_, std::move(e));
  }

  friend GradedMap operator-(const GradedMap& a, const GradedMap& b) { return a + (-b); }

  friend GradedMap operator*(const GradedMap& a, const Rational& s) {
    std::vector<Rational> e(a.entries_.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.entries_[k] * s;
    return GradedMap(a.source_, a.target_, std::move(e));
  }

  friend GradedMap operator*(const Rational& s, const GradedMap& a) { return a * s; }

  bool operator==(const GradedMap&) const = default;

 private:
  SuperSpace source_;
  SuperSpace target_;
  std::vector<Rational> entries_;
};

/// f ∘ g: apply g first. Zero entries are skipped, so composites with
/// signed-permutation or idempotent factors stay cheap.
inline GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (f.source() != g.target()) throw std::invalid_argument("compose: inner spaces differ");
  const std::size_t rows = f.rows(), mid = f.cols(), cols = g.cols();
  std::vector<Rational> out(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < mid; ++k) {
      const Rational& fik = f.entry(i, k);
      if (fik == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        const Rational& gkj = g.entry(k, j);
        if (gkj != 0) out[i * cols + j] += fik * gkj;
      }
    }
  return GradedMap(g.source(), f.target(), std::move(out));
}

/// Kronecker product consistent with the row-major tensor basis. Valid
/// without sign corrections because all representable maps are even.
inline GradedMap tensor(const GradedMap& f, const GradedMap& g) {
  const SuperSpace src = tensor(f.source(), g.source());
  const SuperSpace tgt = tensor(f.target(), g.target());
  std::vector<Rational> out(src.dim() * tgt.dim());
  const std::size_t gr = g.rows(), gc = g.cols(), cols = src.dim();
  for (std::size_t fi = 0; fi < f.rows(); ++fi)
    for (std::size_t fj = 0; fj < f.cols(); ++fj) {
      const Rational& a = f.entry(fi, fj);
      if (a == 0) continue;
      for (std::size_t gi = 0; gi < gr; ++gi)
        for (std::size_t gj = 0; gj < gc; ++gj) {
          const Rational& b = g.entry(gi, gj);
          if (b != 0) out[(fi * gr + gi) * cols + (fj * gc + gj)] = a * b;
        }
    }
  return GradedMap(src, tgt, std::move(out));
}

namespace detail {

/// Signed bijection on basis indices; the cheap internal form of maps
/// that permute tensor factors.
struct SignedIndexMap {
  std::vector<std::size_t> index;
  std::vector<int> sign;

  static SignedIndexMap identity(std::size_t dim) {
    SignedIndexMap m;
    m.index.resize(dim);
    m.sign.assign(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) m.index[i] = i;
    return m;
  }

  /// this ∘ other.
  SignedIndexMap after(const SignedIndexMap& other) const {
    SignedIndexMap out;
    const std::size_t dim = other.index.size();
    out.index.resize(dim);
    out.sign.resize(dim);
    for (std::size_t x = 0; x < dim; ++x) {
      out.index[x] = index[other.index[x]];
      out.sign[x] = sign[other.index[x]] * other.sign[x];
    }
    return out;
  }
};

inline std::vector<std::size_t> decode_tuple(std::size_t flat, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> tuple(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    tuple[k] = flat % dims[k];
    flat /= dims[k];
  }
  return tuple;
}

}  // namespace detail

/// Rearranges tensor factors with the Koszul sign rule: factor i of the
/// source goes to slot to_position[i] of the target, and each inverted
/// pair of odd basis vectors contributes a factor -1.
inline GradedMap shuffle(const std::vector<SuperSpace>& factors, const std::vector<int>& to_position) {
  const std::size_t k = factors.size();
  if (to_position.size() != k) throw std::invalid_argument("shuffle: arity mismatch");
  {
    std::vector<bool> seen(k, false);
    for (int pos : to_position) {
      if (pos < 0 || static_cast<std::size_t>(pos) >= k || seen[static_cast<std::size_t>(pos)])
        throw std::invalid_argument("shuffle: to_position is not a permutation");
      seen[static_cast<std::size_t>(pos)] = true;
    }
  }

  SuperSpace source = SuperSpace::unit();
  for (const SuperSpace& f : factors) source = tensor(source, f);
  std::vector<SuperSpace> reordered(k);
  for (std::size_t i = 0; i < k; ++i) reordered[static_cast<std::size_t>(to_position[i])] = factors[i];
  SuperSpace target = SuperSpace::unit();
  for (const SuperSpace& f : reordered) target = tensor(target, f);

  std::vector<std::size_t> dims(k), tgt_dims(k);
  for (std::size_t i = 0; i < k; ++i) dims[i] = factors[i].dim();
  for (std::size_t i = 0; i < k; ++i) tgt_dims[i] = reordered[i].dim();

  std::vector<Rational> out(source.dim() * target.dim());
  const std::size_t cols = source.dim();
  for (std::size_t flat = 0; flat < source.dim(); ++flat) {
    const std::vector<std::size_t> tuple = detail::decode_tuple(flat, dims);
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (to_position[i] > to_position[j] && factors[i].parity(tuple[i]) == Parity::odd &&
            factors[j].parity(tuple[j]) == Parity::odd)
          sign = -sign;
    std::vector<std::size_t> tgt_tuple(k);
    for (std::size_t i = 0; i < k; ++i) tgt_tuple[static_cast<std::size_t>(to_position[i])] = tuple[i];
    std::size_t tgt_flat = 0;
    for (std::size_t i = 0; i < k; ++i) tgt_flat = tgt_flat * tgt_dims[i] + tgt_tuple[i];
    out[tgt_flat * cols + flat] = sign;
  }
  return GradedMap(source, target, std::move(out));
}

/// σ_{V,W}: v⊗w ↦ (-1)^{|v||w|} w⊗v.
inline GradedMap braiding(const SuperSpace& v, const SuperSpace& w) {
  return shuffle({v, w}, {1, 0});
}

/// Dual-basis pairing V*⊗V → 1. Together with coevaluation it satisfies
/// both snake relations exactly.
inline GradedMap evaluation(const SuperSpace& v) {
  const SuperSpace src = tensor(dual(v), v);
  std::vector<Rational> out(src.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i * v.dim() + i] = 1;
  return GradedMap(src, SuperSpace::unit(), std::move(out));
}

/// Copairing 1 → V⊗V*.
inline GradedMap coevaluation(const SuperSpace& v) {
  const SuperSpace tgt = tensor(v, dual(v));
  std::vector<Rational> out(tgt.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i * v.dim() + i] = 1;
  return GradedMap(SuperSpace::unit(), tgt, std::move(out));
}

namespace detail {

/// Braiding of adjacent tensor slots (slot, slot+1) on V^{⊗n}, as a
/// signed index map.
inline SignedIndexMap adjacent_braiding_indices(const SuperSpace& v, int n, int slot) {
  const std::size_t d = v.dim();
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  // strides: slot k varies with stride d^{n-1-k}
  std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
  for (int k = n - 2; k >= 0; --k)
    stride[static_cast<std::size_t>(k)] = stride[static_cast<std::size_t>(k) + 1] * d;

  SignedIndexMap m;
  m.index.resize(dim);
  m.sign.resize(dim);
  const std::size_t sa = stride[static_cast<std::size_t>(slot)];
  const std::size_t sb = stride[static_cast<std::size_t>(slot) + 1];
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t ia = (x / sa) % d;
    const std::size_t ib = (x / sb) % d;
    m.index[x] = x - ia * sa - ib * sb + ib * sa + ia * sb;
    m.sign[x] =
        (v.parity(ia) == Parity::odd && v.parity(ib) == Parity::odd) ? -1 : 1;
  }
  return m;
}

/// Koszul-signed place permutation on V^{⊗n}: composes adjacent
/// braidings along a reduced word for p (bubble sort), which makes the
/// result independent of the chosen word.
inline SignedIndexMap place_permutation_indices(const SuperSpace& v, const Permutation& p) {
  const int n = p.degree();
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= v.dim();
  SignedIndexMap acc = SignedIndexMap::identity(dim);
  std::vector<int> seq = p.images();
  // Sorting seq by adjacent swaps right-multiplies p by the swapped
  // transpositions, so applying each braiding on the left of acc in
  // discovery order rebuilds action(p).
  bool moved = true;
  while (moved) {
    moved = false;
    for (int k = 0; k + 1 < n; ++k) {
      if (seq[static_cast<std::size_t>(k)] > seq[static_cast<std::size_t>(k) + 1]) {
        std::swap(seq[static_cast<std::size_t>(k)], seq[static_cast<std::size_t>(k) + 1]);
        acc = adjacent_braiding_indices(v, n, k).after(acc);
        moved = true;
      }
    }
  }
  return acc;
}

}  // namespace detail

/// Image of p under the braided left action on V^{⊗n}: the factor in
/// slot k moves to slot p(k), with Koszul signs. Satisfies
/// action(p)∘action(q) = action(p∘q).
inline GradedMap permutation_action(const SuperSpace& v, const Permutation& p) {
  const SuperSpace space = tensor_power(v, p.degree());
  const detail::SignedIndexMap m = detail::place_permutation_indices(v, p);
  std::vector<Rational> out(space.dim() * space.dim());
  for (std::size_t x = 0; x < space.dim(); ++x) out[m.index[x] * space.dim() + x] = m.sign[x];
  return GradedMap(space, space, std::move(out));
}

/// Linear extension of permutation_action; an algebra homomorphism from
/// QS_n to endomorphisms of V^{⊗n}.
inline GradedMap algebra_action(const GroupAlgebraElement& a, const SuperSpace& v) {
  const SuperSpace space = tensor_power(v, a.degree());
  std::vector<Rational> out(space.dim() * space.dim());
  for (const auto& [p, coeff] : a.terms()) {
    const detail::SignedIndexMap m = detail::place_permutation_indices(v, p);
    for (std::size_t x = 0; x < space.dim(); ++x)
      out[m.index[x] * space.dim() + x] += coeff * m.sign[x];
  }
  return GradedMap(space, space, std::move(out));
}

/// ev ∘ σ ∘ co, evaluated; equals even_dim - odd_dim.
inline Rational categorical_dimension(const SuperSpace& v) {
  return compose(evaluation(v), compose(braiding(v, dual(v)), coevaluation(v))).scalar();
}

/// Invertible objects of the backend are exactly the lines.
inline bool is_invertible_object(const SuperSpace& v) { return v.dim() == 1; }

/// +1 for an even line, -1 for an odd one (equivalently the sign of
/// σ_{L,L}).
inline int line_parity(const SuperSpace& line) {
  if (!is_invertible_object(line))
    throw std::invalid_argument("line_parity: object is not invertible (dimension != 1)");
  return line.parity(0) == Parity::even ? 1 : -1;
}

}  // namespace rigid

#endif  // RIGID_GRADED_MAP_HPP
