#ifndef RIGID_IDEMPOTENT_SPLIT_HPP
#define RIGID_IDEMPOTENT_SPLIT_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "rigid/graded_map.hpp"
#include "rigid/rational.hpp"
#include "rigid/super_space.hpp"

namespace rigid {

/// A direct summand of an ambient space, cut out by an idempotent:
/// project ∘ embed = id on the summand and embed ∘ project equals the
/// idempotent that was split.
struct SplitSummand {
  SuperSpace ambient;
  SuperSpace summand;
  GradedMap embed;    // summand -> ambient
  GradedMap project;  // ambient -> summand
};

/// Splits an exact idempotent by rank factorization: Gauss-Jordan
/// elimination with first-nonzero-column pivoting yields project (the
/// nonzero rows of the reduced form) and embed (the pivot columns of e).
/// The pivoting rule makes the output basis deterministic, and the
/// summand inherits the parities of the pivot columns.
inline SplitSummand split_idempotent(const GradedMap& e) {
  if (e.source() != e.target()) throw std::invalid_argument("split_idempotent: map is not square");
  if (compose(e, e) != e) throw std::invalid_argument("split_idempotent: map is not idempotent");

  const SuperSpace& ambient = e.source();
  const std::size_t n = ambient.dim();
  std::vector<Rational> work = e.entries();
  std::vector<std::size_t> pivot_cols;

  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t pivot = r;
    while (pivot < n && work[pivot * n + col] == 0) ++pivot;
    if (pivot == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(work[r * n + j], work[pivot * n + j]);
    const Rational inv = 1 / work[r * n + col];
    for (std::size_t j = 0; j < n; ++j) work[r * n + j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || work[i * n + col] == 0) continue;
      const Rational factor = work[i * n + col];
      for (std::size_t j = 0; j < n; ++j) work[i * n + j] -= factor * work[r * n + j];
    }
    pivot_cols.push_back(col);
    ++r;
  }

  std::vector<Parity> parities;
  parities.reserve(r);
  for (std::size_t c : pivot_cols) parities.push_back(ambient.parity(c));
  const SuperSpace summand{std::move(parities)};

  std::vector<Rational> project_entries(r * n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) project_entries[i * n + j] = work[i * n + j];
  GradedMap project(ambient, summand, std::move(project_entries));

  std::vector<Rational> embed_entries(n * r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < r; ++k) embed_entries[i * r + k] = e.entry(i, pivot_cols[k]);
  GradedMap embed(summand, ambient, std::move(embed_entries));

  SplitSummand split{ambient, summand, std::move(embed), std::move(project)};
  if (compose(split.project, split.embed) != GradedMap::identity(summand))
    throw std::logic_error("split_idempotent: project∘embed is not the identity");
  if (compose(split.embed, split.project) != e)
    throw std::logic_error("split_idempotent: embed∘project does not recover the idempotent");
  return split;
}

}  // namespace rigid

#endif  // RIGID_IDEMPOTENT_SPLIT_HPP
