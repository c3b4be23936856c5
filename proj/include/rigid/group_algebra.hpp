#ifndef RIGID_GROUP_ALGEBRA_HPP
#define RIGID_GROUP_ALGEBRA_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigid/permutation.hpp"
#include "rigid/rational.hpp"

namespace rigid {

/// Selects between the skew symmetrizer e_n (bosonic) and the plain
/// symmetrizer h_n (fermionic) wherever both flavours make sense.
enum class Mode { bosonic, fermionic };

inline const char* mode_name(Mode m) { return m == Mode::bosonic ? "bosonic" : "fermionic"; }

inline Mode mode_from_string(const std::string& s) {
  if (s == "bosonic") return Mode::bosonic;
  if (s == "fermionic") return Mode::fermionic;
  throw std::invalid_argument("unknown mode: " + s);
}

/// Hard limit on the symmetric group degree for full-sum constructions
/// (8! = 40320 basis elements).
inline constexpr int kDegreeCap = 8;

/// Element of the rational group algebra of S_n. Terms with coefficient
/// zero are never stored, so equality is plain member comparison.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int degree) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("GroupAlgebraElement: degree must be >= 1");
  }

  static GroupAlgebraElement identity(int degree) {
    GroupAlgebraElement e(degree);
    e.add_term(Permutation::identity(degree), 1);
    return e;
  }

  static GroupAlgebraElement basis(const Permutation& p, const Rational& coeff = 1) {
    GroupAlgebraElement e(p.degree());
    e.add_term(p, coeff);
    return e;
  }

  int degree() const { return degree_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  GroupAlgebraElement& add_term(const Permutation& p, const Rational& coeff) {
    if (p.degree() != degree_)
      throw std::invalid_argument("GroupAlgebraElement: permutation degree mismatch");
    auto [it, inserted] = terms_.emplace(p, coeff);
    if (!inserted) it->second += coeff;
    if (it->second == 0) terms_.erase(it);
    return *this;
  }

  GroupAlgebraElement operator-() const {
    GroupAlgebraElement out(degree_);
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
    return out;
  }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("group algebra: degree mismatch");
    GroupAlgebraElement out = a;
    for (const auto& [p, c] : b.terms_) out.add_term(p, c);
    return out;
  }

  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a + (-b);
  }

  /// Convolution product, (a*b) = sum a_p b_q (p∘q). Accumulates into a
  /// dense n!-slot table when the term pairing is large enough to repay
  /// building it, and into the sparse map otherwise.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("group algebra: degree mismatch");
    const std::size_t order = group_order(a.degree_);
    if (a.terms_.size() * b.terms_.size() >= 4 * order) return dense_product(a, b, order);
    GroupAlgebraElement out(a.degree_);
    for (const auto& [p, cp] : a.terms_)
      for (const auto& [q, cq] : b.terms_) out.add_term(p * q, cp * cq);
    return out;
  }

  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const Rational& s) {
    GroupAlgebraElement out(a.degree_);
    if (s == 0) return out;
    for (const auto& [p, c] : a.terms_) out.terms_.emplace(p, c * s);
    return out;
  }

  friend GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a) {
    return a * s;
  }

  bool operator==(const GroupAlgebraElement&) const = default;

  /// Canonical serialization: one "coeff [one-line notation]" string per
  /// term, sorted by the one-line notation.
  std::vector<std::string> canonical_lines() const {
    std::vector<std::string> lines;
    lines.reserve(terms_.size());
    for (const auto& [p, c] : terms_) lines.push_back(rational_to_string(c) + " " + p.to_string());
    return lines;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& line : canonical_lines()) {
      if (!out.empty()) out += " + ";
      out += line;
    }
    return out;
  }

 private:
  static std::size_t group_order(int degree) {
    std::size_t order = 1;
    for (int k = 2; k <= degree; ++k) order *= static_cast<std::size_t>(k);
    return order;
  }

  /// Lehmer code rank: position of the one-line notation in the
  /// lexicographic enumeration of S_n.
  static std::size_t lehmer_rank(const std::vector<int>& im) {
    const int n = static_cast<int>(im.size());
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
      int smaller_later = 0;
      for (int j = i + 1; j < n; ++j)
        if (im[static_cast<std::size_t>(j)] < im[static_cast<std::size_t>(i)]) ++smaller_later;
      rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller_later);
    }
    return rank;
  }

  static Permutation lehmer_unrank(std::size_t rank, int n) {
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::size_t>(n - i));
      rank /= static_cast<std::size_t>(n - i);
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
      im[static_cast<std::size_t>(i)] = *it;
      pool.erase(it);
    }
    return Permutation(std::move(im));
  }

  static GroupAlgebraElement dense_product(const GroupAlgebraElement& a,
                                           const GroupAlgebraElement& b, std::size_t order) {
    const std::size_t degree = static_cast<std::size_t>(a.degree_);
    std::vector<Rational> table(order);
    std::vector<int> composed(degree);
    for (const auto& [p, cp] : a.terms_) {
      const std::vector<int>& pim = p.images();
      for (const auto& [q, cq] : b.terms_) {
        const std::vector<int>& qim = q.images();
        for (std::size_t i = 0; i < degree; ++i)
          composed[i] = pim[static_cast<std::size_t>(qim[i])];
        table[lehmer_rank(composed)] += cp * cq;
      }
    }
    GroupAlgebraElement out(a.degree_);
    for (std::size_t r = 0; r < order; ++r)
      if (table[r] != 0) out.terms_.emplace(lehmer_unrank(r, a.degree_), std::move(table[r]));
    return out;
  }

  int degree_;
  std::map<Permutation, Rational> terms_;
};

namespace detail {

inline void require_degree_in_cap(int n) {
  if (n < 1) throw std::invalid_argument("symmetrizer degree must be >= 1");
  if (n > kDegreeCap)
    throw std::invalid_argument("degree cap exceeded: n = " + std::to_string(n) + " > " +
                                std::to_string(kDegreeCap));
}

template <typename CoeffFn>
GroupAlgebraElement full_symmetric_sum(int n, CoeffFn coeff) {
  require_degree_in_cap(n);
  GroupAlgebraElement out(n);
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  do {
    Permutation p{im};
    out.add_term(p, coeff(p));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace detail

/// e_n = (1/n!) sum over S_n of sign(p)·p.
inline GroupAlgebraElement antisymmetrizer(int n) {
  const Rational unit(1, factorial(n));
  return detail::full_symmetric_sum(n, [&](const Permutation& p) { return unit * p.sign(); });
}

/// h_n = (1/n!) sum over S_n of p.
inline GroupAlgebraElement symmetrizer(int n) {
  const Rational unit(1, factorial(n));
  return detail::full_symmetric_sum(n, [&](const Permutation&) { return unit; });
}

inline GroupAlgebraElement mode_idempotent(int n, Mode mode) {
  return mode == Mode::bosonic ? antisymmetrizer(n) : symmetrizer(n);
}

/// Realizes a ⊗ id on one extra strand: every permutation gains the new
/// highest point as a fixed point, coefficients unchanged.
inline GroupAlgebraElement embed_with_identity_strand(const GroupAlgebraElement& a) {
  detail::require_degree_in_cap(a.degree() + 1);
  GroupAlgebraElement out(a.degree() + 1);
  for (const auto& [p, c] : a.terms()) out.add_term(p.with_fixed_point_appended(), c);
  return out;
}

/// The basis element swapping the last two strands of S_n.
inline GroupAlgebraElement last_transposition(int n) {
  if (n < 2) throw std::invalid_argument("last_transposition: need n >= 2");
  return GroupAlgebraElement::basis(Permutation::transposition(n, n - 2, n - 1));
}

struct RecursionReport {
  int n;
  Mode mode;
  bool holds;
  GroupAlgebraElement lhs;
  GroupAlgebraElement rhs;
};

/// Verifies the sandwich recursion for the (skew) symmetrizer in QS_n:
///
///   (f⊗1)·f_n·(f⊗1) = (1/n)[ f⊗1 + c·(f⊗1)·s·(f⊗1) ]
///
/// with f = f_{n-1}, s the last transposition, and c = 1-n for the skew
/// symmetrizer. For the plain symmetrizer the analogous identity holds
/// with c = n-1; that coefficient was fixed by brute-force expansion in
/// QS_n for n = 2,3,4 (the solver lives in the test suite).
inline RecursionReport check_recursion(int n, Mode mode) {
  if (n < 2) throw std::invalid_argument("check_recursion: need n >= 2");
  detail::require_degree_in_cap(n);
  const GroupAlgebraElement inner = embed_with_identity_strand(mode_idempotent(n - 1, mode));
  const GroupAlgebraElement full = mode_idempotent(n, mode);
  const GroupAlgebraElement swap = last_transposition(n);

  RecursionReport report{n, mode, false, GroupAlgebraElement(n), GroupAlgebraElement(n)};
  report.lhs = inner * full * inner;
  const Rational c = mode == Mode::bosonic ? Rational(1 - n) : Rational(n - 1);
  report.rhs = (inner + c * (inner * swap * inner)) * Rational(1, n);
  report.holds = report.lhs == report.rhs;
  return report;
}

}  // namespace rigid

#endif  // RIGID_GROUP_ALGEBRA_HPP
