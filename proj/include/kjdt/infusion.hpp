#pragma once

#include <vector>

#include "slides.hpp"

namespace kjdt {

/// (first, second) with first on gamma/alpha and second on nu/gamma.
struct TableauPair {
  IncreasingTableau first;
  IncreasingTableau second;

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

namespace detail {

inline void require_abutting(const IncreasingTableau& t, const IncreasingTableau& u) {
  if (u.inner() != t.outer())
    throw error(errc::shapes_do_not_abut,
                "inner shape " + u.inner().to_string() + " differs from outer shape " + t.outer().to_string());
}

inline std::vector<std::vector<int>> blank_rows(const Partition& p) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(p.length()));
  for (int r = 0; r < p.length(); ++r) rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(p[r]), 0);
  return rows;
}

}  // namespace detail

/// Slides u inward through t, largest label of t first; each vacated box
/// receives the label of t that caused the slide. Returns (u moved inward,
/// labels of t moved outward).
inline TableauPair kinfusion(const IncreasingTableau& t, const IncreasingTableau& u) {
  detail::require_abutting(t, u);
  const Partition& nu = u.outer();
  auto placed = detail::blank_rows(nu);
  IncreasingTableau moving = u;
  for (int m = t.max_entry(); m >= 1; --m) {
    const auto corners = t.cells_with(m);
    if (corners.empty()) continue;
    SlideResult step = kjdt_slide(moving, corners);
    for (Box b : step.vacated) placed[static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col)] = m;
    moving = std::move(step.tableau);
  }
  IncreasingTableau second(SkewShape(nu, moving.outer()), std::move(placed));
  return {std::move(moving), std::move(second)};
}

/// Slides t outward through u, smallest label of u first; vacated boxes of
/// the inner region receive the label of u. Inverse of kinfusion.
inline TableauPair krevinfusion(const IncreasingTableau& t, const IncreasingTableau& u) {
  detail::require_abutting(t, u);
  const Partition& nu = u.outer();
  const Rectangle ambient{nu.length(), nu.width()};
  auto placed = detail::blank_rows(nu);
  IncreasingTableau moving = t;
  const int top = u.max_entry();
  for (int m = 1; m <= top; ++m) {
    const auto corners = u.cells_with(m);
    if (corners.empty()) continue;
    SlideResult step = krevjdt_slide(moving, corners, ambient);
    for (Box b : step.vacated) placed[static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col)] = m;
    moving = std::move(step.tableau);
  }
  const Partition& gamma = moving.inner();
  std::vector<std::vector<int>> first_rows(static_cast<std::size_t>(gamma.length()));
  for (int r = 0; r < gamma.length(); ++r)
    first_rows[static_cast<std::size_t>(r)].assign(placed[static_cast<std::size_t>(r)].begin(),
                                                   placed[static_cast<std::size_t>(r)].begin() + gamma[r]);
  IncreasingTableau first(SkewShape(gamma, t.inner()), std::move(first_rows));
  return {std::move(first), std::move(moving)};
}

}  // namespace kjdt
